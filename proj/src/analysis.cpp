#include "milfib/analysis.hpp"

#include "milfib/errors.hpp"

#include <algorithm>
#include <sstream>

namespace milfib {

std::string check_name(Check c) {
    switch (c) {
        case Check::Euler: return "euler";
        case Check::VerticalBound: return "vertical_bound";
        case Check::SpecialBound: return "special_bound";
        case Check::Concentration: return "concentration";
        case Check::Bouquet: return "bouquet";
        case Check::NonSplitting: return "nonsplitting";
        case Check::CrossValidate: return "cross_validate";
    }
    return "?";
}

std::optional<Check> check_from_name(const std::string& name) {
    for (Check c : {Check::Euler, Check::VerticalBound, Check::SpecialBound, Check::Concentration,
                    Check::Bouquet, Check::NonSplitting, Check::CrossValidate})
        if (check_name(c) == name)
            return c;
    return std::nullopt;
}

std::optional<Mode> mode_from_name(const std::string& name) {
    if (name == "bounds") return Mode::Bounds;
    if (name == "exact") return Mode::Exact;
    if (name == "oracle") return Mode::Oracle;
    if (name == "all") return Mode::All;
    return std::nullopt;
}

std::optional<OutputFormat> format_from_name(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "structured") return OutputFormat::Structured;
    return std::nullopt;
}

ValidationFailure::ValidationFailure(std::vector<ValidationIssue> issues)
    : Error([&issues] {
          std::string msg = "diagram validation failed:";
          for (const ValidationIssue& i : issues)
              msg += "\n  " + i.to_string();
          return msg;
      }()),
      issues_(std::move(issues)) {}

namespace {

bool mode_allows(Mode mode, Check c) {
    switch (mode) {
        case Mode::Oracle:
            return c == Check::CrossValidate;
        case Mode::Bounds:
        case Mode::Exact:
            return c != Check::CrossValidate;
        case Mode::All:
            return true;
    }
    return false;
}

}  // namespace

Report analyze(const ValidatedDiagram& vd, const AnalysisConfig& config) {
    const bool strict = !config.selected_checks.empty();
    auto wants = [&](Check c) {
        if (!mode_allows(config.mode, c))
            return false;
        return config.selected_checks.empty() || config.selected_checks.count(c) > 0;
    };
    const bool run_exact = config.mode == Mode::Exact || config.mode == Mode::All;

    Report r;
    r.n = vd.n();
    r.annotations = config.annotations;

    // Per-branch groups and counts; per-loop Wang groups.
    VerticalBoundResult vertical;
    const bool want_vertical = wants(Check::VerticalBound);
    if (want_vertical)
        vertical = betti_bound_vertical(vd);

    for (const std::string& bid : vd.branch_order()) {
        const Branch& b = vd.branch(bid);
        const BranchCounts& c = vd.counts(bid);
        BranchReportEntry e;
        e.id = bid;
        e.transversal_milnor_number = b.transversal_milnor_number;
        e.genus = b.genus;
        e.tau = c.tau;
        e.gamma = c.gamma;
        e.loop_count = c.loop_count;
        e.group = branch_group(vd, bid);
        e.euler = branch_euler(vd, bid, vd.n());
        if (want_vertical)
            for (const BranchVerticalInfo& info : vertical.per_branch)
                if (info.branch_id == bid)
                    e.vertical = info;
        r.per_branch.push_back(std::move(e));
    }

    for (const LocalLoop* l : vd.all_loops()) {
        LoopReportEntry e;
        e.id = l->id;
        e.branch_id = l->branch_id;
        e.special_point_id = l->special_point_id;
        e.monodromy = l->monodromy.matrix;
        e.wang = wang_groups(l->monodromy);
        r.per_loop.push_back(std::move(e));
    }
    for (const std::string& bid : vd.branch_order()) {
        const Branch& b = vd.branch(bid);
        auto add = [&](const std::string& id, const Monodromy& m) {
            LoopReportEntry e;
            e.id = id;
            e.branch_id = bid;
            e.monodromy = m.matrix;
            e.wang = wang_groups(m);
            r.per_loop.push_back(std::move(e));
        };
        for (std::size_t k = 0; k < b.genus_loops.size(); ++k)
            add(bid + "/genus[" + std::to_string(k) + "]", b.genus_loops[k]);
        for (std::size_t k = 0; k < b.outside_loops.size(); ++k)
            add(bid + "/outside[" + std::to_string(k) + "]", b.outside_loops[k]);
    }

    // Euler characteristic.
    std::optional<long long> chi;
    if (wants(Check::Euler)) {
        if (config.chi_override) {
            chi = *config.chi_override;
            r.chi_overridden = true;
            std::string note = "euler characteristic supplied externally: " + std::to_string(*chi);
            try {
                note += " (formula value from the stated local data: " +
                        std::to_string(euler_characteristic(vd)) + ")";
            } catch (const DataMissingError&) {
                note += " (local euler data incomplete)";
            }
            r.annotations.push_back(note);
        } else {
            try {
                chi = euler_characteristic(vd);
            } catch (const DataMissingError&) {
                if (strict)
                    throw;
                r.annotations.push_back(
                    "euler characteristic not computed: some special points lack euler_char");
            }
        }
        r.chi = chi;
    } else if (config.chi_override) {
        chi = *config.chi_override;
        r.chi = chi;
        r.chi_overridden = true;
    }

    // Exact Mayer-Vietoris mode.
    std::optional<MvExactResult> mv;
    if (run_exact) {
        mv = mv_exact(vd, config.j2_signs, config.ring);
        ExactReportEntry e;
        e.ring = mv->ring;
        e.group = mv->group;
        e.source_rank = mv->source_rank;
        e.target_rank = mv->target_rank;
        e.map_rank = mv->map_rank;
        e.relations_rank = mv->relations_rank;
        e.default_signs = !config.j2_signs.has_value();
        if (config.j2_signs)
            e.signs = *config.j2_signs;
        e.j_matrix = mv->j_matrix;
        r.exact = std::move(e);
        if (mv->ring.is_integers() && !config.j2_signs)
            r.annotations.push_back(
                "exact group computed with the default orientation signs (+1 on every loop); "
                "a different geometric sign choice can change torsion and rank");
    }

    // Bounds and intervals. Interval assembly rides on the vertical bound;
    // with only the cover bound selected, just that bound is reported.
    if (strict && wants(Check::SpecialBound))
        betti_bound_special(vd);  // surface the precise error when it cannot run
    if (want_vertical) {
        BettiIntervals intervals =
            betti_intervals(vd, config.chi_override, mv, wants(Check::SpecialBound));
        r.bounds = intervals.bounds;
        r.betti_n_minus_1 = intervals.b_n_minus_1;
        r.betti_n = intervals.b_n;
    } else if (wants(Check::SpecialBound)) {
        try {
            r.bounds.push_back(betti_bound_special(vd));
        } catch (const Error&) {
            if (strict)
                throw;
        }
    }

    // Verdicts.
    if (wants(Check::Concentration)) {
        ConcentrationVerdict v = concentration_check(vd);
        VerdictEntry e;
        e.check = "concentration";
        e.result = v.to_string();
        e.basis = v.level == ConcentrationLevel::ZeroOverZ
                      ? "branch-wise vanishing local fibre over Z"
                      : (v.level == ConcentrationLevel::RankZero
                             ? "branch-wise rank-zero local fibre"
                             : "no qualifying special point on every branch");
        for (const auto& [bid, qid] : v.witnesses)
            e.witnesses.push_back(bid + ":" + qid);
        for (const std::string& bid : v.missing_branches)
            e.witnesses.push_back("missing:" + bid);
        r.verdicts.push_back(std::move(e));
    }
    if (wants(Check::Bouquet)) {
        BouquetVerdict v = bouquet_check(vd, config.chi_override);
        VerdictEntry e;
        e.check = "bouquet";
        e.result = v.to_string();
        e.basis = !v.established ? "sphere-bouquet-criterion"
                                 : (v.condition == 'a' ? "branch-wise unimodular loop, n >= 3"
                                                       : "branch-wise vanishing local fibre, n >= 3");
        r.verdicts.push_back(std::move(e));
    }
    if (wants(Check::NonSplitting)) {
        NonSplittingVerdict v = nonsplitting_check(vd);
        VerdictEntry e;
        e.check = "nonsplitting";
        e.result = v.to_string();
        e.basis = "vanishing-top-homology-obstruction";
        e.witnesses = v.offending_points;
        r.verdicts.push_back(std::move(e));
    }

    if (wants(Check::CrossValidate)) {
        CrossValidationReport cv = cross_validate(vd);
        OracleReportEntry o;
        o.all_pass = cv.all_pass;
        o.items = cv.items;
        r.oracle = std::move(o);
    }

    return r;
}

Report analyze_text(const std::string& diagram_text, const AnalysisConfig& config) {
    DeformationDiagram d = parse_diagram(diagram_text);
    ValidationResult vr = validate(d);
    if (!vr.ok())
        throw ValidationFailure(std::move(vr.issues));
    return analyze(*vr.diagram, config);
}

}  // namespace milfib
