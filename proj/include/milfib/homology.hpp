#pragma once

#include "milfib/diagram.hpp"
#include "milfib/zlattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace milfib {

/// Relative homology of the fibre bundle over one loop:
/// the upper group is ker(A - I) (always free), the lower is coker(A - I).
struct WangGroups {
    AbelianGroup h_upper;
    AbelianGroup h_lower;

    bool operator==(const WangGroups& other) const = default;
};

enum class BoundMethod { VerticalMin, SpecialCover, TrivialMuSum };

std::string bound_method_name(BoundMethod m);

/// An upper bound for b_{n-1}(F) together with the objects achieving it.
struct BettiBound {
    long long value = 0;
    BoundMethod method = BoundMethod::VerticalMin;
    std::vector<std::string> witness;  // loop ids or special point ids
    bool optimal = true;               // false when the cover search fell back to greedy
};

/// Per-branch outcome of the vertical-monodromy bound.
struct BranchVerticalInfo {
    std::string branch_id;
    std::size_t min_coker_rank = 0;
    std::string minimizing_loop;
    bool rank_zero = false;    // some loop has det(A - I) != 0
    bool zero_over_Z = false;  // some loop has det(A - I) = +-1
    std::string rank_zero_witness;
    std::string zero_over_Z_witness;
};

struct VerticalBoundResult {
    BettiBound bound;
    std::vector<BranchVerticalInfo> per_branch;
    bool all_rank_zero = false;    // implies b_{n-1}(F) = 0
    bool all_zero_over_Z = false;  // implies H_{n-1}(F) = 0
};

enum class ConcentrationLevel { ZeroOverZ, RankZero, Inconclusive };

struct ConcentrationVerdict {
    ConcentrationLevel level = ConcentrationLevel::Inconclusive;
    /// branch id -> witnessing special point (for the conclusive levels).
    std::vector<std::pair<std::string, std::string>> witnesses;
    /// Branches with no qualifying point (for the inconclusive level).
    std::vector<std::string> missing_branches;

    std::string to_string() const;
};

struct BouquetVerdict {
    bool established = false;
    char condition = 0;  // 'a' (unimodular loop) or 'b' (vanishing local fibre)
    std::optional<long long> sphere_count;
    std::string reason;  // set when not established

    std::string to_string() const;
};

enum class NonSplittingStatus { Skipped, Pass, Contradiction };

struct NonSplittingVerdict {
    NonSplittingStatus status = NonSplittingStatus::Skipped;
    std::vector<std::string> offending_points;

    std::string to_string() const;
};

/// Computation ring for the exact Mayer-Vietoris mode.
struct Ring {
    std::uint64_t modulus = 0;  // 0 = integers, otherwise a prime p

    bool is_integers() const { return modulus == 0; }
    static Ring integers() { return Ring{0}; }
    static Ring prime_field(std::uint64_t p) { return Ring{p}; }
    bool operator==(const Ring& other) const = default;
};

/// Outcome of the exact mode: the cokernel of the assembled middle map,
/// which is H_{n-1}(F) over the chosen ring, plus rank bookkeeping.
struct MvExactResult {
    AbelianGroup group;  // over F_p this encodes a vector space of dim free_rank
    Ring ring;
    std::size_t source_rank = 0;     // total loop generators
    std::size_t target_rank = 0;     // sum of fibre betti numbers + transversal ranks
    std::size_t map_rank = 0;        // rank of the stacked (map | relations) matrix
    std::size_t relations_rank = 0;  // rank of the relations block alone
    IntMatrix j_matrix;              // target_rank x source_rank
    IntMatrix relations;             // target_rank x (relation columns)
};

struct BettiInterval {
    long long lower = 0;
    long long upper = 0;
    std::vector<std::string> justification;

    bool is_exact() const { return lower == upper; }
};

struct BettiIntervals {
    BettiInterval b_n_minus_1;
    std::optional<BettiInterval> b_n;  // absent when chi is unavailable
    std::vector<BettiBound> bounds;    // every applicable upper bound, for the report
};

// -- Wang sequence and branch presentations ---------------------------------

WangGroups wang_groups(const Monodromy& a);

/// Z^mu / < Im(A_w - I) : w in (genus loops, local loops, outside loops) >.
AbelianGroup branch_group(const ValidatedDiagram& vd, const std::string& branch_id);

/// (-1)^(n-1) * (2g + tau + gamma - 1) * mu.
long long branch_euler(const ValidatedDiagram& vd, const std::string& branch_id, long long n);

// -- Euler characteristic ----------------------------------------------------

/// chi(F) = 1 + sum_q (chi(A_q) - 1) + (-1)^n sum_i (2g+tau+gamma-2) mu_i
///            + (-1)^n sum_r mu_r.
/// Throws DataMissingError when a special point lacks euler_char.
long long euler_characteristic(const ValidatedDiagram& vd);

// -- Bounds and verdicts ------------------------------------------------------

VerticalBoundResult betti_bound_vertical(const ValidatedDiagram& vd);

/// Upper bound from local fibre Betti numbers over a covering set of special
/// points. With q_prime given the bound uses exactly that set (it must cover
/// every branch); otherwise the minimum-sum covering subset is searched
/// exactly for up to 24 candidate points, greedily (flagged non-optimal)
/// beyond.
BettiBound betti_bound_special(const ValidatedDiagram& vd,
                               const std::optional<std::vector<std::string>>& q_prime = {});

ConcentrationVerdict concentration_check(const ValidatedDiagram& vd);

/// chi_override replaces the computed Euler characteristic for the sphere
/// count (used when local Euler data is incomplete).
BouquetVerdict bouquet_check(const ValidatedDiagram& vd,
                             std::optional<long long> chi_override = {});

NonSplittingVerdict nonsplitting_check(const ValidatedDiagram& vd);

// -- Monodromy helpers --------------------------------------------------------

/// Product in the given order, leftmost applied last.
Monodromy compose_vertical(const std::vector<Monodromy>& loops);

/// The vertical monodromy of a degree-d homogeneous germ: the unique A with
/// A * h^d = I, i.e. (h^{-1})^d.
Monodromy vertical_from_homogeneous(const Monodromy& h, unsigned long long d);

// -- Exact Mayer-Vietoris mode -------------------------------------------------

/// Assembles the middle map j = j1 (+) j2 on presentations and returns its
/// cokernel over the chosen ring. j2_signs, when given, holds one unit (+-1)
/// per local loop in assembly order (points by sorted id, loops in listed
/// order). Every special point must carry j1_block.
MvExactResult mv_exact(const ValidatedDiagram& vd,
                       const std::optional<std::vector<int>>& j2_signs = {},
                       Ring ring = Ring::integers());

// -- Combined intervals ---------------------------------------------------------

/// Combines all applicable upper bounds, the optional component-count lower
/// bound (n = 2), Euler-characteristic bookkeeping and, when provided, the
/// exact-mode group into intervals for b_{n-1} and b_n.
/// Throws InconsistencyError when sources contradict each other.
/// use_special_bound = false leaves the cover bound out of the combination.
BettiIntervals betti_intervals(const ValidatedDiagram& vd,
                               std::optional<long long> chi_override = {},
                               const std::optional<MvExactResult>& exact = {},
                               bool use_special_bound = true);

}  // namespace milfib
