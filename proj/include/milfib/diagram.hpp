#pragma once

#include "milfib/zlattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace milfib {

/// Automorphism of a transversal lattice Z^mu: a square unimodular matrix.
struct Monodromy {
    IntMatrix matrix;

    std::size_t size() const { return matrix.rows(); }
    bool operator==(const Monodromy& other) const = default;
};

/// A small loop around a special point, lying on one branch.
struct LocalLoop {
    std::string id;                // generated "<point>:<index>" when absent from input
    std::string branch_id;
    std::string special_point_id;
    Monodromy monodromy;
};

/// One irreducible curve branch of the singular locus.
struct Branch {
    std::string id;
    long long genus = 0;                       // g_i >= 0
    std::size_t transversal_milnor_number = 1; // mu_i >= 1
    std::vector<Monodromy> genus_loops;        // length 2*genus
    std::vector<Monodromy> outside_loops;      // length tau_i >= 1
};

/// Homological data of the local fibre at a special point.
struct SpecialPointFibreData {
    std::optional<long long> euler_char;          // chi of the local fibre
    std::optional<long long> betti_n_minus_1;     // b_{n-1} of the local fibre
    bool h_n_minus_1_is_zero_over_Z = false;      // strictly stronger than betti = 0
};

struct SpecialPoint {
    std::string id;
    std::vector<LocalLoop> loops;  // nonempty, possibly on several branches
    SpecialPointFibreData fibre;
    std::optional<IntMatrix> j1_block;  // rows = betti_n_minus_1, cols = sum of loop mu's
};

struct IsolatedPoint {
    std::string id;
    long long milnor_number = 1;  // mu_r >= 1
    bool on_zero_fibre = false;   // R_0 vs R_1; stored, computationally inert
};

/// Full combinatorial description of an admissible deformation.
struct DeformationDiagram {
    long long n = 2;  // the germ lives on C^{n+1}; n >= 2
    std::vector<Branch> branches;
    std::vector<SpecialPoint> special_points;
    std::vector<IsolatedPoint> isolated_points;
    std::optional<long long> irreducible_components_of_zero_set;  // n = 2 lower bound input
    std::optional<bool> claims_vanishing_homology_zero;           // b_n = 0 claim for the germ
};

/// One validation problem, attached to the offending object.
struct ValidationIssue {
    std::string object_id;
    std::string message;

    std::string to_string() const { return object_id + ": " + message; }
};

/// Per-branch derived counts attached during validation.
struct BranchCounts {
    std::size_t gamma = 0;       // local loops on the branch
    std::size_t tau = 0;         // outside loops
    std::size_t loop_count = 0;  // #W = 2g + tau + gamma
};

/// A diagram whose cross-references resolved and whose invariants all hold.
/// Construction only through validate(). Move-only: the loop tables point
/// into the owned diagram.
class ValidatedDiagram {
public:
    ValidatedDiagram(ValidatedDiagram&&) = default;
    ValidatedDiagram& operator=(ValidatedDiagram&&) = default;
    ValidatedDiagram(const ValidatedDiagram&) = delete;
    ValidatedDiagram& operator=(const ValidatedDiagram&) = delete;

    const DeformationDiagram& diagram() const { return diagram_; }
    long long n() const { return diagram_.n; }

    const Branch& branch(const std::string& id) const;
    const BranchCounts& counts(const std::string& branch_id) const;

    /// Branch ids in sorted order (the deterministic assembly order).
    const std::vector<std::string>& branch_order() const { return branch_order_; }
    /// Special point ids in sorted order.
    const std::vector<std::string>& special_point_order() const { return point_order_; }

    const SpecialPoint& special_point(const std::string& id) const;

    /// Local loops lying on the given branch, points in sorted order and
    /// loops in their listed order within each point.
    const std::vector<const LocalLoop*>& loops_on_branch(const std::string& branch_id) const;

    /// All local loops in assembly order (points sorted, loops listed order).
    const std::vector<const LocalLoop*>& all_loops() const { return all_loops_; }

    /// Does the given special point have a loop on the given branch?
    bool point_touches_branch(const std::string& point_id, const std::string& branch_id) const;

private:
    friend struct Validator;
    ValidatedDiagram() = default;

    DeformationDiagram diagram_;
    std::vector<std::string> branch_order_;
    std::vector<std::string> point_order_;
    std::map<std::string, std::size_t> branch_index_;
    std::map<std::string, std::size_t> point_index_;
    std::map<std::string, BranchCounts> counts_;
    std::map<std::string, std::vector<const LocalLoop*>> branch_loops_;
    std::vector<const LocalLoop*> all_loops_;
};

struct ValidationResult {
    std::optional<ValidatedDiagram> diagram;  // set iff issues is empty
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

/// Checks every structural invariant of the diagram, collecting all issues
/// rather than stopping at the first, and resolves cross-references.
/// Idempotent: validating the diagram of a ValidatedDiagram reproduces it.
ValidationResult validate(const DeformationDiagram& d);

}  // namespace milfib
