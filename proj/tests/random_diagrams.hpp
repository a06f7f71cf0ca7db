#pragma once

// Randomized diagram generator shared by the oracle tests and the acceptance
// suite: monodromies are products of elementary unimodular operations with
// entries kept within a small bound.

#include "milfib/diagram.hpp"

#include <random>
#include <string>

namespace milfib::testgen {

inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t size, int entry_bound) {
    IntMatrix m = IntMatrix::identity(size);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<std::size_t> idx(0, size - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    const int steps = 8 + static_cast<int>(rng() % 8);
    for (int step = 0; step < steps; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        switch (pick(rng)) {
            case 0: {
                if (i == j)
                    break;
                IntMatrix t = m;
                t.add_row_multiple(i, j, sign(rng) ? 1 : -1);
                bool ok = true;
                for (const Integer& e : t.entries())
                    ok = ok && abs(e) <= entry_bound;
                if (ok)
                    m = std::move(t);
                break;
            }
            case 1:
                m.swap_rows(i, j);
                break;
            case 2:
                m.negate_row(i);
                break;
        }
    }
    return m;
}

/// Up to 4 branches with transversal rank <= 4, genus 0 or 1, 1-2 outside
/// loops and 0-3 special loops each; roughly a third of the special points
/// join two branches. Entries stay within [-3, 3].
inline DeformationDiagram random_diagram(std::mt19937& rng) {
    DeformationDiagram d;
    d.n = 2 + static_cast<long long>(rng() % 2);
    const std::size_t n_branches = 1 + rng() % 4;
    for (std::size_t b = 0; b < n_branches; ++b) {
        Branch br;
        br.id = "b" + std::to_string(b);
        br.transversal_milnor_number = 1 + rng() % 4;
        br.genus = static_cast<long long>(rng() % 2);
        for (long long g = 0; g < 2 * br.genus; ++g)
            br.genus_loops.push_back(
                Monodromy{random_unimodular(rng, br.transversal_milnor_number, 3)});
        const std::size_t tau = 1 + rng() % 2;
        for (std::size_t u = 0; u < tau; ++u)
            br.outside_loops.push_back(
                Monodromy{random_unimodular(rng, br.transversal_milnor_number, 3)});
        d.branches.push_back(std::move(br));
    }

    std::size_t point_counter = 0;
    for (std::size_t b = 0; b < n_branches; ++b) {
        const std::size_t gamma = rng() % 4;
        for (std::size_t s = 0; s < gamma; ++s) {
            LocalLoop l;
            l.branch_id = d.branches[b].id;
            l.monodromy =
                Monodromy{random_unimodular(rng, d.branches[b].transversal_milnor_number, 3)};
            const bool join_previous = !d.special_points.empty() && rng() % 3 == 0;
            if (join_previous) {
                d.special_points.back().loops.push_back(std::move(l));
            } else {
                SpecialPoint q;
                q.id = "q" + std::to_string(point_counter++);
                q.fibre.euler_char = static_cast<long long>(rng() % 5) - 2;
                q.loops.push_back(std::move(l));
                d.special_points.push_back(std::move(q));
            }
        }
    }
    return d;
}

}  // namespace milfib::testgen
