#pragma once

#include "milfib/diagram.hpp"
#include "milfib/homology.hpp"
#include "milfib/zlattice.hpp"

#include <string>
#include <vector>

namespace milfib {

/// Two-term slice of a relative CW chain complex, cells concentrated in
/// dimensions n and n+1: boundary maps C_{n+1} -> C_n.
struct ChainComplexSlice {
    std::size_t upper_rank = 0;  // (n+1)-cells
    std::size_t lower_rank = 0;  // n-cells
    IntMatrix boundary;          // lower_rank x upper_rank
};

/// The relative complex of the fibre bundle over a single loop: one column of
/// (n+1)-cells glued by the monodromy, boundary A - I.
ChainComplexSlice build_loop_complex(const Monodromy& a);

/// The relative complex of a whole branch: one cluster of n-cells over the
/// reference fibre, one block of (n+1)-cells per loop of W_i.
ChainComplexSlice build_branch_complex(const ValidatedDiagram& vd, const std::string& branch_id);

/// (H_{n+1}, H_n) of a two-term slice: kernel rank (free) and cokernel.
std::pair<AbelianGroup, AbelianGroup> homology_of_slice(const ChainComplexSlice& c);

struct CrossValidationItem {
    std::string object_id;
    std::string aspect;  // what was compared
    bool pass = false;
    std::string detail;  // mismatch description when failing
};

struct CrossValidationReport {
    std::vector<CrossValidationItem> items;
    bool all_pass = true;

    std::size_t failures() const;
};

/// Compares the slice homology of a loop complex against the Wang groups of
/// the same monodromy; used by cross_validate and by corruption fixtures.
CrossValidationItem compare_loop_slice(const std::string& loop_id, const Monodromy& a,
                                       const ChainComplexSlice& slice);

/// Compares a branch slice against the branch presentation: H_n against the
/// branch group, kernel rank against the exactness bookkeeping, and the slice
/// Euler characteristic against the closed form.
std::vector<CrossValidationItem> compare_branch_slice(const ValidatedDiagram& vd,
                                                      const std::string& branch_id,
                                                      const ChainComplexSlice& slice);

/// Re-derives every loop group and branch group through explicit cell
/// complexes and generic boundary reduction, and checks them against the
/// closed-form path. Any disagreement indicates an implementation bug.
CrossValidationReport cross_validate(const ValidatedDiagram& vd);

}  // namespace milfib
