#pragma once

#include "milfib/errors.hpp"
#include "milfib/report.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace milfib {

enum class Mode { Bounds, Exact, Oracle, All };
enum class OutputFormat { Text, Structured };

enum class Check {
    Euler,
    VerticalBound,
    SpecialBound,
    Concentration,
    Bouquet,
    NonSplitting,
    CrossValidate,
};

std::string check_name(Check c);
std::optional<Check> check_from_name(const std::string& name);
std::optional<Mode> mode_from_name(const std::string& name);
std::optional<OutputFormat> format_from_name(const std::string& name);

struct AnalysisConfig {
    Mode mode = Mode::Bounds;
    Ring ring = Ring::integers();
    OutputFormat format = OutputFormat::Text;
    /// Empty set = every check the mode allows, skipping gracefully the ones
    /// whose optional data is absent. A non-empty set is strict: a selected
    /// check that cannot run raises its error.
    std::set<Check> selected_checks;
    std::optional<std::vector<int>> j2_signs;
    /// Replaces the computed Euler characteristic (used when local Euler
    /// data is known to be incomplete); recorded in the report.
    std::optional<long long> chi_override;
    std::vector<std::string> annotations;  // carried into the report
};

/// Runs the selected checks on a validated diagram and assembles the report.
Report analyze(const ValidatedDiagram& vd, const AnalysisConfig& config);

/// Parse + validate + analyze; throws ParseError / Error subclasses, and
/// reports validation issues via ValidationFailure.
class ValidationFailure : public Error {
public:
    explicit ValidationFailure(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

Report analyze_text(const std::string& diagram_text, const AnalysisConfig& config);

}  // namespace milfib
