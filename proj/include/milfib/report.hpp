#pragma once

#include "milfib/cw_oracle.hpp"
#include "milfib/homology.hpp"
#include "milfib/schema.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milfib {

struct LoopReportEntry {
    std::string id;
    std::string branch_id;
    std::string special_point_id;  // empty for genus/outside loops
    IntMatrix monodromy;           // echoed in the input schema format
    WangGroups wang;
};

struct BranchReportEntry {
    std::string id;
    std::size_t transversal_milnor_number = 0;
    long long genus = 0;
    std::size_t tau = 0;
    std::size_t gamma = 0;
    std::size_t loop_count = 0;  // #W = 2g + tau + gamma
    AbelianGroup group;
    long long euler = 0;
    BranchVerticalInfo vertical;
};

struct VerdictEntry {
    std::string check;   // "concentration" | "bouquet" | "nonsplitting"
    std::string result;  // rendered verdict
    std::string basis;   // which criterion produced it
    std::vector<std::string> witnesses;
};

struct ExactReportEntry {
    Ring ring;
    AbelianGroup group;
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    std::size_t map_rank = 0;
    std::size_t relations_rank = 0;
    bool default_signs = true;
    std::vector<int> signs;  // empty when default (all +1)
    IntMatrix j_matrix;

    std::string group_string() const;
};

struct OracleReportEntry {
    bool all_pass = true;
    std::vector<CrossValidationItem> items;
};

/// Everything one analysis computed, with per-result provenance tags.
struct Report {
    long long n = 2;
    std::optional<long long> chi;
    bool chi_overridden = false;
    std::vector<BranchReportEntry> per_branch;
    std::vector<LoopReportEntry> per_loop;
    std::vector<BettiBound> bounds;
    std::optional<BettiInterval> betti_n_minus_1;
    std::optional<BettiInterval> betti_n;
    std::optional<ExactReportEntry> exact;
    std::vector<VerdictEntry> verdicts;
    std::optional<OracleReportEntry> oracle;
    std::vector<std::string> annotations;
};

Json abelian_group_to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const Json& j, const std::string& path);

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

/// Structured output; parsing and re-emitting is byte-identical.
std::string serialize_report(const Report& r);
Report parse_report(const std::string& text);

/// Human-readable output.
std::string render_report_text(const Report& r);

}  // namespace milfib
