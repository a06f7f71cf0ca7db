#pragma once

#include "milfib/analysis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milfib {

/// Headline values an entry is expected to reproduce; `examples run` checks
/// them against the freshly computed report.
struct CorpusExpectations {
    std::optional<long long> chi;
    std::optional<long long> b_n_minus_1;  // pinned interval value
    std::optional<long long> b_n;
    std::optional<std::string> exact_group;  // rendered group, e.g. "Z", "F_2^3"
    std::optional<std::string> concentration;
    std::optional<long long> vertical_bound;
    std::optional<long long> special_bound;
    std::optional<std::size_t> exact_source_rank;
    std::optional<std::size_t> exact_target_rank;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    std::string headline;  // one-line expected numbers for the listing
    std::vector<std::string> annotations;
    DeformationDiagram diagram;
    AnalysisConfig config;
    CorpusExpectations expect;
};

/// The bundled example deformations, in listing order.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry* find_corpus_entry(const std::string& name);

/// The 3x3 monodromy used throughout the transversal-type-A3 entries.
Monodromy f1a3_monodromy();

struct CorpusRunOutcome {
    std::string name;
    Report report;
    std::vector<std::string> mismatches;  // empty = all expectations met

    bool ok() const { return mismatches.empty(); }
};

/// Re-serializes the entry through the input schema, re-parses, validates,
/// analyzes with the entry's configuration and compares the headline values.
CorpusRunOutcome run_corpus_entry(const CorpusEntry& entry);

}  // namespace milfib
