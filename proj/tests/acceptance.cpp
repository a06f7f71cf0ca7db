// Acceptance suite: one line per criterion, exact checks throughout.

#include "milfib/analysis.hpp"
#include "milfib/corpus.hpp"
#include "milfib/cw_oracle.hpp"
#include "milfib/errors.hpp"

#include "random_diagrams.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace milfib;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << number << ": " << title << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << title << " -- " << e.what() << "\n";
    }
}

void require(bool cond, const std::string& what) {
    if (!cond)
        throw std::runtime_error(what);
}

ValidatedDiagram validated(const DeformationDiagram& d) {
    ValidationResult r = validate(d);
    if (!r.ok())
        throw ValidationFailure(std::move(r.issues));
    return std::move(*r.diagram);
}

ValidatedDiagram corpus_diagram(const std::string& name) {
    const CorpusEntry* e = find_corpus_entry(name);
    require(e != nullptr, "corpus entry " + name + " missing");
    return validated(e->diagram);
}

std::string group_str(const AbelianGroup& g) {
    return g.to_string();
}

// The 16 sign vectors sampled for a family with k loops: for k <= 4 all 2^k
// patterns, for k = 5 the 16 patterns {0, 31, 1..14} (bit i = sign of loop i).
std::vector<std::vector<int>> sign_vectors(int k) {
    std::vector<unsigned> patterns;
    if (k <= 4) {
        for (unsigned p = 0; p < (1u << k); ++p)
            patterns.push_back(p);
    } else {
        patterns.push_back(0);
        patterns.push_back(31);
        for (unsigned p = 1; p <= 14; ++p)
            patterns.push_back(p);
    }
    std::vector<std::vector<int>> out;
    for (unsigned p : patterns) {
        std::vector<int> signs;
        for (int i = 0; i < k; ++i)
            signs.push_back((p >> i) & 1 ? -1 : 1);
        out.push_back(std::move(signs));
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "circle-fibre germ Wang groups (Z, Z) with image rank 2", [] {
        Monodromy h{IntMatrix{{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}}};
        WangGroups w = wang_groups(h);
        require(w.h_upper == AbelianGroup{1, {}}, "ker(h-I) is " + group_str(w.h_upper));
        require(w.h_lower == AbelianGroup{1, {}}, "coker(h-I) is " + group_str(w.h_lower));
        const std::size_t image_rank = rank(h.matrix - IntMatrix::identity(3));
        require(image_rank == 2, "Im(h-I) has rank " + std::to_string(image_rank));
    });

    criterion(2, "k-members family: branch group Z, exact group Z for all k and 16 sign vectors",
              [] {
                  for (int k = 1; k <= 5; ++k) {
                      ValidatedDiagram vd = corpus_diagram("xk-family-k" + std::to_string(k));
                      AbelianGroup bg = branch_group(vd, "line");
                      require(bg == AbelianGroup{1, {}},
                              "k=" + std::to_string(k) + " branch group " + group_str(bg));
                      for (const std::vector<int>& signs : sign_vectors(k)) {
                          MvExactResult r = mv_exact(vd, signs);
                          require(r.group == AbelianGroup{1, {}},
                                  "k=" + std::to_string(k) + " exact group " +
                                      group_str(r.group) + " for a sign vector");
                      }
                  }
              });

    criterion(3, "triple-point arrangement: F_2 dimension 3, source rank 12, target rank 14", [] {
        ValidatedDiagram vd = corpus_diagram("arrangement");
        MvExactResult r = mv_exact(vd, {}, Ring::prime_field(2));
        require(r.group.free_rank == 3,
                "F_2 dimension is " + std::to_string(r.group.free_rank));
        require(r.source_rank == 12, "source rank " + std::to_string(r.source_rank));
        require(r.target_rank == 14, "target rank " + std::to_string(r.target_rank));
    });

    criterion(4, "triple-axes diagram: vertical bound 3, branch groups all Z", [] {
        ValidatedDiagram vd = corpus_diagram("xyz");
        VerticalBoundResult v = betti_bound_vertical(vd);
        require(v.bound.value == 3, "bound is " + std::to_string(v.bound.value));
        for (const std::string& bid : vd.branch_order()) {
            AbelianGroup g = branch_group(vd, bid);
            require(g == AbelianGroup{1, {}}, bid + " group " + group_str(g));
        }
    });

    criterion(5, "steiner diagram: concentration over Z, b2 = 15 with chi override 16", [] {
        ValidatedDiagram vd = corpus_diagram("steiner");
        ConcentrationVerdict c = concentration_check(vd);
        require(c.level == ConcentrationLevel::ZeroOverZ, "verdict: " + c.to_string());
        BettiIntervals iv = betti_intervals(vd, 16);
        require(iv.b_n.has_value(), "b_n interval missing");
        require(iv.b_n->lower == 15 && iv.b_n->upper == 15,
                "b2 in [" + std::to_string(iv.b_n->lower) + ", " +
                    std::to_string(iv.b_n->upper) + "]");
    });

    criterion(6, "trivial-line diagram: chi = 0, combined reasoning pins b1 = 1, b2 = 0", [] {
        ValidatedDiagram vd = corpus_diagram("a-infinity");
        const long long chi = euler_characteristic(vd);
        require(chi == 0, "chi = " + std::to_string(chi));
        BettiIntervals iv = betti_intervals(vd);
        require(iv.b_n_minus_1.lower == 1 && iv.b_n_minus_1.upper == 1,
                "b1 in [" + std::to_string(iv.b_n_minus_1.lower) + ", " +
                    std::to_string(iv.b_n_minus_1.upper) + "]");
        require(iv.b_n && iv.b_n->lower == 0 && iv.b_n->upper == 0, "b2 not pinned to 0");
    });

    criterion(7, "bouquet verdict at n = 3, not established at n = 2", [] {
        auto make = [](long long n) {
            DeformationDiagram d;
            d.n = n;
            Branch b;
            b.id = "line";
            b.transversal_milnor_number = 2;
            b.outside_loops = {Monodromy{IntMatrix{{0, -1}, {1, 1}}}};  // det(A - I) = 1
            d.branches.push_back(b);
            SpecialPoint q;
            q.id = "q";
            LocalLoop l;
            l.branch_id = "line";
            l.monodromy = Monodromy{IntMatrix{{0, -1}, {1, 1}}};
            q.loops.push_back(l);
            q.fibre.euler_char = 0;
            d.special_points.push_back(q);
            return d;
        };
        BouquetVerdict at3 = bouquet_check(validated(make(3)));
        require(at3.established, "n = 3 verdict: " + at3.to_string());
        require(at3.sphere_count == 1, "sphere count not 1");
        BouquetVerdict at2 = bouquet_check(validated(make(2)));
        require(!at2.established, "n = 2 unexpectedly established");
    });

    criterion(8, "oracle equivalence on 200 randomized diagrams", [] {
        std::mt19937 rng(20250809);
        for (int iter = 0; iter < 200; ++iter) {
            DeformationDiagram d = testgen::random_diagram(rng);
            CrossValidationReport r = cross_validate(validated(d));
            if (!r.all_pass) {
                for (const CrossValidationItem& item : r.items)
                    if (!item.pass)
                        throw std::runtime_error("iteration " + std::to_string(iter) + ", " +
                                                 item.object_id + ": " + item.detail);
            }
        }
    });

    criterion(9, "smith property suite on 500 random matrices", [] {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<std::size_t> dim(0, 8);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int iter = 0; iter < 500; ++iter) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) = entry(rng);

            SmithForm s = smith_normal_form(m);
            require(s.left_transform * m * s.right_transform ==
                        s.padded_diagonal(m.rows(), m.cols()),
                    "U*M*V mismatch at iteration " + std::to_string(iter));
            for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k)
                require(s.invariant_factors[k + 1] % s.invariant_factors[k] == 0,
                        "divisibility chain broken");
            if (m.is_square() && !m.is_empty()) {
                Integer dt = m.det();
                if (dt != 0) {
                    Integer prod = 1;
                    for (const Integer& f : s.invariant_factors)
                        prod *= f;
                    require(prod == abs(dt), "determinant not preserved");
                }
            }
            require(cokernel_multi(m.rows(), {m}) == cokernel(m),
                    "cokernel_multi disagrees with cokernel");
        }
    });

    criterion(10, "non-splitting diagnostic raised and cleared", [] {
        DeformationDiagram d = find_corpus_entry("xk-family-k2")->diagram;
        d.claims_vanishing_homology_zero = true;
        NonSplittingVerdict with = nonsplitting_check(validated(d));
        require(with.status == NonSplittingStatus::Contradiction,
                "expected a contradiction, got: " + with.to_string());
        d.isolated_points.clear();
        NonSplittingVerdict without = nonsplitting_check(validated(d));
        require(without.status == NonSplittingStatus::Pass,
                "expected a pass, got: " + without.to_string());
    });

    criterion(11, "family euler characteristic reported as computed (3k-2), with annotation", [] {
        for (int k = 1; k <= 5; ++k) {
            const CorpusEntry* e = find_corpus_entry("xk-family-k" + std::to_string(k));
            require(e != nullptr, "entry missing");
            CorpusRunOutcome outcome = run_corpus_entry(*e);
            require(outcome.report.chi == 3LL * k - 2,
                    "k=" + std::to_string(k) + " chi reported as " +
                        (outcome.report.chi ? std::to_string(*outcome.report.chi) : "nothing"));
            bool annotated = false;
            for (const std::string& a : outcome.report.annotations)
                annotated = annotated || a.find("3k-1") != std::string::npos;
            require(annotated, "discrepancy annotation missing");
        }
    });

    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion/criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
