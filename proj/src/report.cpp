#include "milfib/report.hpp"

#include "milfib/errors.hpp"

#include <algorithm>
#include <sstream>

namespace milfib {

std::string ExactReportEntry::group_string() const {
    if (ring.is_integers())
        return group.to_string();
    if (group.free_rank == 0)
        return "0";
    std::string base = "F_" + std::to_string(ring.modulus);
    if (group.free_rank == 1)
        return base;
    return base + "^" + std::to_string(group.free_rank);
}

Json abelian_group_to_json(const AbelianGroup& g) {
    Json j;
    j["free_rank"] = static_cast<long long>(g.free_rank);
    Json torsion = Json::array();
    for (const Integer& d : g.torsion)
        torsion.push_back(integer_to_json(d));
    j["torsion"] = std::move(torsion);
    return j;
}

AbelianGroup abelian_group_from_json(const Json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("free_rank") || !j.contains("torsion"))
        throw ParseError(path + ": expected a group object with free_rank and torsion");
    AbelianGroup g;
    g.free_rank = j["free_rank"].get<std::size_t>();
    for (std::size_t k = 0; k < j["torsion"].size(); ++k)
        g.torsion.push_back(
            integer_from_json(j["torsion"][k], path + ".torsion[" + std::to_string(k) + "]"));
    return g;
}

namespace {

Json wang_to_json(const WangGroups& w) {
    Json j;
    j["h_upper"] = abelian_group_to_json(w.h_upper);
    j["h_lower"] = abelian_group_to_json(w.h_lower);
    return j;
}

Json interval_to_json(const BettiInterval& b) {
    Json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["justification"] = b.justification;
    return j;
}

BettiInterval interval_from_json(const Json& j) {
    BettiInterval b;
    b.lower = j["lower"].get<long long>();
    b.upper = j["upper"].get<long long>();
    for (const auto& t : j["justification"])
        b.justification.push_back(t.get<std::string>());
    return b;
}

Json bound_to_json(const BettiBound& b) {
    Json j;
    j["value"] = b.value;
    j["method"] = bound_method_name(b.method);
    j["witness"] = b.witness;
    j["optimal"] = b.optimal;
    return j;
}

BettiBound bound_from_json(const Json& j) {
    BettiBound b;
    b.value = j["value"].get<long long>();
    const std::string m = j["method"].get<std::string>();
    if (m == bound_method_name(BoundMethod::VerticalMin))
        b.method = BoundMethod::VerticalMin;
    else if (m == bound_method_name(BoundMethod::SpecialCover))
        b.method = BoundMethod::SpecialCover;
    else if (m == bound_method_name(BoundMethod::TrivialMuSum))
        b.method = BoundMethod::TrivialMuSum;
    else
        throw ParseError("unknown bound method '" + m + "'");
    for (const auto& w : j["witness"])
        b.witness.push_back(w.get<std::string>());
    b.optimal = j["optimal"].get<bool>();
    return b;
}

std::string ring_name(const Ring& r) {
    return r.is_integers() ? "Z" : "F_" + std::to_string(r.modulus);
}

Ring ring_from_name(const std::string& s) {
    if (s == "Z")
        return Ring::integers();
    if (s.rfind("F_", 0) == 0)
        return Ring::prime_field(std::stoull(s.substr(2)));
    throw ParseError("unknown ring '" + s + "'");
}

}  // namespace

Json report_to_json(const Report& r) {
    Json j;
    j["n"] = r.n;
    j["chi_f"] = r.chi ? Json(*r.chi) : Json(nullptr);
    j["chi_overridden"] = r.chi_overridden;

    Json branches = Json::array();
    for (const BranchReportEntry& b : r.per_branch) {
        Json jb;
        jb["id"] = b.id;
        jb["transversal_milnor_number"] = static_cast<long long>(b.transversal_milnor_number);
        jb["genus"] = b.genus;
        jb["tau"] = static_cast<long long>(b.tau);
        jb["gamma"] = static_cast<long long>(b.gamma);
        jb["loop_count"] = static_cast<long long>(b.loop_count);
        jb["group"] = abelian_group_to_json(b.group);
        jb["euler"] = b.euler;
        jb["min_coker_rank"] = static_cast<long long>(b.vertical.min_coker_rank);
        jb["minimizing_loop"] = b.vertical.minimizing_loop;
        jb["rank_zero"] = b.vertical.rank_zero;
        jb["rank_zero_witness"] = b.vertical.rank_zero_witness;
        jb["zero_over_Z"] = b.vertical.zero_over_Z;
        jb["zero_over_Z_witness"] = b.vertical.zero_over_Z_witness;
        branches.push_back(std::move(jb));
    }
    j["per_branch"] = std::move(branches);

    Json loops = Json::array();
    for (const LoopReportEntry& l : r.per_loop) {
        Json jl;
        jl["id"] = l.id;
        jl["branch"] = l.branch_id;
        jl["special_point"] = l.special_point_id;
        jl["monodromy"] = matrix_to_json(l.monodromy);
        jl["wang"] = wang_to_json(l.wang);
        loops.push_back(std::move(jl));
    }
    j["per_loop"] = std::move(loops);

    Json bounds = Json::array();
    for (const BettiBound& b : r.bounds)
        bounds.push_back(bound_to_json(b));
    j["bounds"] = std::move(bounds);

    j["betti_n_minus_1"] = r.betti_n_minus_1 ? interval_to_json(*r.betti_n_minus_1) : Json(nullptr);
    j["betti_n"] = r.betti_n ? interval_to_json(*r.betti_n) : Json(nullptr);

    if (r.exact) {
        Json je;
        je["ring"] = ring_name(r.exact->ring);
        je["group"] = abelian_group_to_json(r.exact->group);
        je["source_rank"] = static_cast<long long>(r.exact->source_rank);
        je["target_rank"] = static_cast<long long>(r.exact->target_rank);
        je["map_rank"] = static_cast<long long>(r.exact->map_rank);
        je["relations_rank"] = static_cast<long long>(r.exact->relations_rank);
        je["default_signs"] = r.exact->default_signs;
        je["signs"] = r.exact->signs;
        je["j_matrix"] = matrix_to_json(r.exact->j_matrix);
        j["exact"] = std::move(je);
    } else {
        j["exact"] = nullptr;
    }

    Json verdicts = Json::array();
    for (const VerdictEntry& v : r.verdicts) {
        Json jv;
        jv["check"] = v.check;
        jv["result"] = v.result;
        jv["basis"] = v.basis;
        jv["witnesses"] = v.witnesses;
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);

    if (r.oracle) {
        Json jo;
        jo["all_pass"] = r.oracle->all_pass;
        Json items = Json::array();
        for (const CrossValidationItem& item : r.oracle->items) {
            Json ji;
            ji["object"] = item.object_id;
            ji["aspect"] = item.aspect;
            ji["pass"] = item.pass;
            ji["detail"] = item.detail;
            items.push_back(std::move(ji));
        }
        jo["items"] = std::move(items);
        j["oracle"] = std::move(jo);
    } else {
        j["oracle"] = nullptr;
    }

    j["annotations"] = r.annotations;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.n = j["n"].get<long long>();
    if (!j["chi_f"].is_null())
        r.chi = j["chi_f"].get<long long>();
    r.chi_overridden = j["chi_overridden"].get<bool>();

    for (const Json& jb : j["per_branch"]) {
        BranchReportEntry b;
        b.id = jb["id"].get<std::string>();
        b.transversal_milnor_number = jb["transversal_milnor_number"].get<std::size_t>();
        b.genus = jb["genus"].get<long long>();
        b.tau = jb["tau"].get<std::size_t>();
        b.gamma = jb["gamma"].get<std::size_t>();
        b.loop_count = jb["loop_count"].get<std::size_t>();
        b.group = abelian_group_from_json(jb["group"], "per_branch.group");
        b.euler = jb["euler"].get<long long>();
        b.vertical.branch_id = b.id;
        b.vertical.min_coker_rank = jb["min_coker_rank"].get<std::size_t>();
        b.vertical.minimizing_loop = jb["minimizing_loop"].get<std::string>();
        b.vertical.rank_zero = jb["rank_zero"].get<bool>();
        b.vertical.rank_zero_witness = jb["rank_zero_witness"].get<std::string>();
        b.vertical.zero_over_Z = jb["zero_over_Z"].get<bool>();
        b.vertical.zero_over_Z_witness = jb["zero_over_Z_witness"].get<std::string>();
        r.per_branch.push_back(std::move(b));
    }

    for (const Json& jl : j["per_loop"]) {
        LoopReportEntry l;
        l.id = jl["id"].get<std::string>();
        l.branch_id = jl["branch"].get<std::string>();
        l.special_point_id = jl["special_point"].get<std::string>();
        l.monodromy = matrix_from_json(jl["monodromy"], "per_loop.monodromy");
        l.wang.h_upper = abelian_group_from_json(jl["wang"]["h_upper"], "per_loop.wang.h_upper");
        l.wang.h_lower = abelian_group_from_json(jl["wang"]["h_lower"], "per_loop.wang.h_lower");
        r.per_loop.push_back(std::move(l));
    }

    for (const Json& jb : j["bounds"])
        r.bounds.push_back(bound_from_json(jb));

    if (!j["betti_n_minus_1"].is_null())
        r.betti_n_minus_1 = interval_from_json(j["betti_n_minus_1"]);
    if (!j["betti_n"].is_null())
        r.betti_n = interval_from_json(j["betti_n"]);

    if (!j["exact"].is_null()) {
        const Json& je = j["exact"];
        ExactReportEntry e;
        e.ring = ring_from_name(je["ring"].get<std::string>());
        e.group = abelian_group_from_json(je["group"], "exact.group");
        e.source_rank = je["source_rank"].get<std::size_t>();
        e.target_rank = je["target_rank"].get<std::size_t>();
        e.map_rank = je["map_rank"].get<std::size_t>();
        e.relations_rank = je["relations_rank"].get<std::size_t>();
        e.default_signs = je["default_signs"].get<bool>();
        for (const auto& s : je["signs"])
            e.signs.push_back(s.get<int>());
        e.j_matrix = matrix_from_json(je["j_matrix"], "exact.j_matrix");
        r.exact = std::move(e);
    }

    for (const Json& jv : j["verdicts"]) {
        VerdictEntry v;
        v.check = jv["check"].get<std::string>();
        v.result = jv["result"].get<std::string>();
        v.basis = jv["basis"].get<std::string>();
        for (const auto& w : jv["witnesses"])
            v.witnesses.push_back(w.get<std::string>());
        r.verdicts.push_back(std::move(v));
    }

    if (!j["oracle"].is_null()) {
        OracleReportEntry o;
        o.all_pass = j["oracle"]["all_pass"].get<bool>();
        for (const Json& ji : j["oracle"]["items"]) {
            CrossValidationItem item;
            item.object_id = ji["object"].get<std::string>();
            item.aspect = ji["aspect"].get<std::string>();
            item.pass = ji["pass"].get<bool>();
            item.detail = ji["detail"].get<std::string>();
            o.items.push_back(std::move(item));
        }
        r.oracle = std::move(o);
    }

    for (const auto& a : j["annotations"])
        r.annotations.push_back(a.get<std::string>());
    return r;
}

std::string serialize_report(const Report& r) {
    return report_to_json(r).dump(2) + "\n";
}

Report parse_report(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return report_from_json(j);
}

std::string render_report_text(const Report& r) {
    std::ostringstream os;
    const std::string low = std::to_string(r.n - 1);
    const std::string top = std::to_string(r.n);

    os << "diagram: n = " << r.n << ", " << r.per_branch.size() << " branch(es)\n";

    if (r.chi) {
        os << "chi(F) = " << *r.chi;
        if (r.chi_overridden)
            os << "  [euler-characteristic-override]";
        else
            os << "  [euler-formula]";
        os << "\n";
    }

    if (!r.per_branch.empty()) {
        os << "branches:\n";
        for (const BranchReportEntry& b : r.per_branch) {
            os << "  " << b.id << ": mu_perp = " << b.transversal_milnor_number << ", genus = "
               << b.genus << ", tau = " << b.tau << ", gamma = " << b.gamma
               << ", #W = " << b.loop_count << "\n";
            os << "    group H_n = " << b.group.to_string()
               << "  [branch-presentation], chi contribution = " << b.euler
               << "  [branch-euler-formula]\n";
            os << "    min coker rank " << b.vertical.min_coker_rank << " at loop "
               << b.vertical.minimizing_loop;
            if (b.vertical.zero_over_Z)
                os << "; vanishes over Z (loop " << b.vertical.zero_over_Z_witness << ")";
            else if (b.vertical.rank_zero)
                os << "; rank zero (loop " << b.vertical.rank_zero_witness << ")";
            os << "\n";
        }
    }

    if (!r.per_loop.empty()) {
        os << "loops (Wang groups ker/coker of A - I):\n";
        for (const LoopReportEntry& l : r.per_loop) {
            os << "  " << l.id << " on " << l.branch_id;
            if (!l.special_point_id.empty())
                os << " (point " << l.special_point_id << ")";
            os << ": ker = " << l.wang.h_upper.to_string()
               << ", coker = " << l.wang.h_lower.to_string() << "  [wang-sequence]\n";
            os << "    monodromy = " << l.monodromy.to_string() << "\n";
        }
    }

    if (!r.bounds.empty()) {
        long long best = r.bounds.front().value;
        for (const BettiBound& b : r.bounds)
            best = std::min(best, b.value);
        os << "upper bounds for b_" << low << "(F):\n";
        for (const BettiBound& b : r.bounds) {
            os << "  " << bound_method_name(b.method) << ": " << b.value;
            if (!b.optimal)
                os << " (greedy, possibly non-optimal)";
            if (!b.witness.empty()) {
                os << "  witness:";
                for (const std::string& w : b.witness)
                    os << " " << w;
            }
            if (b.value == best)
                os << "  <- minimum";
            os << "\n";
        }
    }

    if (r.betti_n_minus_1) {
        os << "b_" << low << "(F) in [" << r.betti_n_minus_1->lower << ", "
           << r.betti_n_minus_1->upper << "]";
        if (r.betti_n_minus_1->is_exact())
            os << " = " << r.betti_n_minus_1->lower;
        os << "  [";
        for (std::size_t i = 0; i < r.betti_n_minus_1->justification.size(); ++i)
            os << (i ? "; " : "") << r.betti_n_minus_1->justification[i];
        os << "]\n";
    }
    if (r.betti_n) {
        os << "b_" << top << "(F) in [" << r.betti_n->lower << ", " << r.betti_n->upper << "]";
        if (r.betti_n->is_exact())
            os << " = " << r.betti_n->lower;
        os << "  [";
        for (std::size_t i = 0; i < r.betti_n->justification.size(); ++i)
            os << (i ? "; " : "") << r.betti_n->justification[i];
        os << "]\n";
    }

    if (r.exact) {
        os << "exact mode: H_" << low << "(F";
        if (!r.exact->ring.is_integers())
            os << "; " << ring_name(r.exact->ring);
        os << ") = " << r.exact->group_string() << "  [mayer-vietoris-cokernel]\n";
        os << "  assembled map: source rank " << r.exact->source_rank << ", target rank "
           << r.exact->target_rank << ", map rank " << r.exact->map_rank << ", relations rank "
           << r.exact->relations_rank << "\n";
        if (r.exact->default_signs)
            os << "  orientation signs: default (+1 on every loop)\n";
        else {
            os << "  orientation signs:";
            for (int s : r.exact->signs)
                os << " " << (s > 0 ? "+1" : "-1");
            os << "\n";
        }
    }

    if (!r.verdicts.empty()) {
        os << "verdicts:\n";
        for (const VerdictEntry& v : r.verdicts) {
            os << "  " << v.check << ": " << v.result << "  [" << v.basis << "]";
            if (!v.witnesses.empty()) {
                os << "  witnesses:";
                for (const std::string& w : v.witnesses)
                    os << " " << w;
            }
            os << "\n";
        }
    }

    if (r.oracle) {
        os << "oracle: " << (r.oracle->all_pass ? "all checks passed" : "DISAGREEMENT FOUND")
           << " (" << r.oracle->items.size() << " comparisons)\n";
        for (const CrossValidationItem& item : r.oracle->items)
            if (!item.pass)
                os << "  FAIL " << item.object_id << " (" << item.aspect << "): " << item.detail
                   << "\n";
    }

    for (const std::string& a : r.annotations)
        os << "note: " << a << "\n";

    return os.str();
}

}  // namespace milfib
