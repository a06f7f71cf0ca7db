#include "milfib/homology.hpp"

#include "milfib/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace milfib {

std::string bound_method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::VerticalMin: return "vertical-monodromy-bound";
        case BoundMethod::SpecialCover: return "special-fibre-cover-bound";
        case BoundMethod::TrivialMuSum: return "transversal-rank-sum";
    }
    return "?";
}

std::string ConcentrationVerdict::to_string() const {
    switch (level) {
        case ConcentrationLevel::ZeroOverZ: return "H_{n-1}(F) = 0 over Z";
        case ConcentrationLevel::RankZero: return "b_{n-1}(F) = 0";
        case ConcentrationLevel::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string BouquetVerdict::to_string() const {
    if (!established)
        return "not established (" + reason + ")";
    std::string s = "homotopy bouquet of n-spheres";
    if (sphere_count)
        s += ", count = " + std::to_string(*sphere_count);
    return s;
}

std::string NonSplittingVerdict::to_string() const {
    switch (status) {
        case NonSplittingStatus::Skipped: return "skipped (no vanishing claim)";
        case NonSplittingStatus::Pass: return "pass";
        case NonSplittingStatus::Contradiction:
            return "contradiction: a deformation of a germ with vanishing top homology admits no "
                   "isolated critical points, but the diagram lists some";
    }
    return "?";
}

namespace {

IntMatrix a_minus_i(const Monodromy& a) {
    return a.matrix - IntMatrix::identity(a.size());
}

/// Loops of W_i in assembly order, with display ids.
std::vector<std::pair<std::string, const Monodromy*>> branch_w_loops(const ValidatedDiagram& vd,
                                                                     const std::string& branch_id) {
    const Branch& b = vd.branch(branch_id);
    std::vector<std::pair<std::string, const Monodromy*>> w;
    for (std::size_t k = 0; k < b.genus_loops.size(); ++k)
        w.emplace_back(b.id + "/genus[" + std::to_string(k) + "]", &b.genus_loops[k]);
    for (const LocalLoop* l : vd.loops_on_branch(branch_id))
        w.emplace_back(l->id, &l->monodromy);
    for (std::size_t k = 0; k < b.outside_loops.size(); ++k)
        w.emplace_back(b.id + "/outside[" + std::to_string(k) + "]", &b.outside_loops[k]);
    return w;
}

long long checked_ll(const Integer& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw ArgumentError(std::string(what) + " exceeds the 64-bit integer range");
    return v.convert_to<long long>();
}

}  // namespace

WangGroups wang_groups(const Monodromy& a) {
    IntMatrix m = a_minus_i(a);
    WangGroups w;
    w.h_upper = AbelianGroup::free(kernel_rank(m));
    w.h_lower = cokernel(m);
    return w;
}

AbelianGroup branch_group(const ValidatedDiagram& vd, const std::string& branch_id) {
    const Branch& b = vd.branch(branch_id);
    std::vector<IntMatrix> images;
    for (const auto& [id, mono] : branch_w_loops(vd, branch_id))
        images.push_back(a_minus_i(*mono));
    return cokernel_multi(b.transversal_milnor_number, images);
}

long long branch_euler(const ValidatedDiagram& vd, const std::string& branch_id, long long n) {
    const Branch& b = vd.branch(branch_id);
    const BranchCounts& c = vd.counts(branch_id);
    const long long sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n-1)
    Integer v = Integer(sign) * Integer(c.loop_count - 1) * Integer(b.transversal_milnor_number);
    return checked_ll(v, "branch Euler characteristic");
}

long long euler_characteristic(const ValidatedDiagram& vd) {
    std::vector<std::string> missing;
    for (const std::string& qid : vd.special_point_order())
        if (!vd.special_point(qid).fibre.euler_char)
            missing.push_back(qid);
    if (!missing.empty()) {
        std::string msg = "euler_char missing on special point(s):";
        for (const std::string& q : missing)
            msg += " " + q;
        throw DataMissingError(msg);
    }

    const long long sign = (vd.n() % 2 == 0) ? 1 : -1;  // (-1)^n
    Integer chi = 1;
    for (const std::string& qid : vd.special_point_order())
        chi += Integer(*vd.special_point(qid).fibre.euler_char) - 1;
    for (const std::string& bid : vd.branch_order()) {
        const Branch& b = vd.branch(bid);
        const BranchCounts& c = vd.counts(bid);
        chi += Integer(sign) * (Integer(c.loop_count) - 2) * Integer(b.transversal_milnor_number);
    }
    for (const IsolatedPoint& r : vd.diagram().isolated_points)
        chi += Integer(sign) * Integer(r.milnor_number);
    return checked_ll(chi, "Euler characteristic");
}

VerticalBoundResult betti_bound_vertical(const ValidatedDiagram& vd) {
    VerticalBoundResult out;
    out.all_rank_zero = true;
    out.all_zero_over_Z = true;
    Integer total = 0;

    for (const std::string& bid : vd.branch_order()) {
        const Branch& b = vd.branch(bid);
        BranchVerticalInfo info;
        info.branch_id = bid;
        bool first = true;
        for (const auto& [loop_id, mono] : branch_w_loops(vd, bid)) {
            IntMatrix m = a_minus_i(*mono);
            const std::size_t coker_rank = b.transversal_milnor_number - rank(m);
            if (first || coker_rank < info.min_coker_rank) {
                info.min_coker_rank = coker_rank;
                info.minimizing_loop = loop_id;
                first = false;
            }
            if (coker_rank == 0 && !info.rank_zero) {
                info.rank_zero = true;
                info.rank_zero_witness = loop_id;
            }
            if (coker_rank == 0 && !info.zero_over_Z) {
                Integer dt = m.det();
                if (dt == 1 || dt == -1) {
                    info.zero_over_Z = true;
                    info.zero_over_Z_witness = loop_id;
                }
            }
        }
        total += info.min_coker_rank;
        out.all_rank_zero = out.all_rank_zero && info.rank_zero;
        out.all_zero_over_Z = out.all_zero_over_Z && info.zero_over_Z;
        out.bound.witness.push_back(info.minimizing_loop);
        out.per_branch.push_back(std::move(info));
    }

    out.bound.value = checked_ll(total, "vertical bound");
    out.bound.method = BoundMethod::VerticalMin;
    return out;
}

namespace {

struct CoverCandidate {
    std::string point_id;
    long long weight = 0;
    std::vector<std::size_t> covers;  // branch indices
};

struct CoverSearch {
    std::size_t n_branches = 0;
    const std::vector<CoverCandidate>* candidates = nullptr;

    std::vector<std::size_t> best;
    long long best_weight = 0;
    bool have_best = false;

    // branch index -> candidates covering it, in candidate order
    std::vector<std::vector<std::size_t>> coverers;

    void dfs(std::vector<int>& cover_count, std::size_t covered, long long weight,
             std::vector<std::size_t>& chosen) {
        if (have_best && weight >= best_weight)
            return;
        if (covered == n_branches) {
            best = chosen;
            best_weight = weight;
            have_best = true;
            return;
        }
        std::size_t target = 0;
        while (cover_count[target] > 0)
            ++target;
        for (std::size_t ci : coverers[target]) {
            const CoverCandidate& c = (*candidates)[ci];
            std::size_t newly = 0;
            for (std::size_t br : c.covers)
                if (cover_count[br]++ == 0)
                    ++newly;
            chosen.push_back(ci);
            dfs(cover_count, covered + newly, weight + c.weight, chosen);
            chosen.pop_back();
            for (std::size_t br : c.covers)
                --cover_count[br];
        }
    }
};

}  // namespace

BettiBound betti_bound_special(const ValidatedDiagram& vd,
                               const std::optional<std::vector<std::string>>& q_prime) {
    const std::vector<std::string>& branches = vd.branch_order();
    std::map<std::string, std::size_t> branch_pos;
    for (std::size_t i = 0; i < branches.size(); ++i)
        branch_pos[branches[i]] = i;

    auto covers_of = [&](const SpecialPoint& q) {
        std::vector<std::size_t> covers;
        for (const std::string& bid : branches)
            if (vd.point_touches_branch(q.id, bid))
                covers.push_back(branch_pos[bid]);
        return covers;
    };

    BettiBound bound;
    bound.method = BoundMethod::SpecialCover;

    if (q_prime) {
        std::vector<std::string> ids = *q_prime;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

        std::vector<std::string> missing_data;
        std::vector<bool> covered(branches.size(), false);
        Integer total = 0;
        for (const std::string& qid : ids) {
            const SpecialPoint& q = vd.special_point(qid);  // throws on unknown id
            if (!q.fibre.betti_n_minus_1) {
                missing_data.push_back(qid);
                continue;
            }
            total += *q.fibre.betti_n_minus_1;
            for (std::size_t br : covers_of(q))
                covered[br] = true;
        }
        if (!missing_data.empty()) {
            std::string msg = "betti_n_minus_1 missing on special point(s):";
            for (const std::string& q : missing_data)
                msg += " " + q;
            throw DataMissingError(msg);
        }
        for (std::size_t i = 0; i < branches.size(); ++i)
            if (!covered[i])
                throw CoverageError("the chosen special points do not cover branch '" +
                                    branches[i] + "'");
        bound.value = checked_ll(total, "special cover bound");
        bound.witness = ids;
        return bound;
    }

    std::vector<CoverCandidate> candidates;
    for (const std::string& qid : vd.special_point_order()) {
        const SpecialPoint& q = vd.special_point(qid);
        if (!q.fibre.betti_n_minus_1)
            continue;
        CoverCandidate c;
        c.point_id = qid;
        c.weight = *q.fibre.betti_n_minus_1;
        c.covers = covers_of(q);
        candidates.push_back(std::move(c));
    }

    std::vector<bool> coverable(branches.size(), false);
    for (const CoverCandidate& c : candidates)
        for (std::size_t br : c.covers)
            coverable[br] = true;
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (!coverable[i])
            throw CoverageError("branch '" + branches[i] +
                                "' is not covered by any special point carrying betti_n_minus_1");

    if (candidates.size() <= 24) {
        CoverSearch search;
        search.n_branches = branches.size();
        search.candidates = &candidates;
        search.coverers.resize(branches.size());
        for (std::size_t ci = 0; ci < candidates.size(); ++ci)
            for (std::size_t br : candidates[ci].covers)
                search.coverers[br].push_back(ci);
        std::vector<int> cover_count(branches.size(), 0);
        std::vector<std::size_t> chosen;
        search.dfs(cover_count, 0, 0, chosen);
        bound.value = search.best_weight;
        for (std::size_t ci : search.best)
            bound.witness.push_back(candidates[ci].point_id);
        std::sort(bound.witness.begin(), bound.witness.end());
        return bound;
    }

    // Too many candidates for exhaustive search; greedy by weight per newly
    // covered branch, flagged non-optimal.
    bound.optimal = false;
    std::vector<bool> covered(branches.size(), false);
    std::size_t remaining = branches.size();
    Integer total = 0;
    while (remaining > 0) {
        std::size_t best_ci = candidates.size();
        double best_score = 0;
        std::size_t best_newly = 0;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            std::size_t newly = 0;
            for (std::size_t br : candidates[ci].covers)
                if (!covered[br])
                    ++newly;
            if (newly == 0)
                continue;
            const double score = static_cast<double>(candidates[ci].weight) / newly;
            if (best_ci == candidates.size() || score < best_score ||
                (score == best_score && newly > best_newly)) {
                best_ci = ci;
                best_score = score;
                best_newly = newly;
            }
        }
        const CoverCandidate& c = candidates[best_ci];
        total += c.weight;
        bound.witness.push_back(c.point_id);
        for (std::size_t br : c.covers)
            if (!covered[br]) {
                covered[br] = true;
                --remaining;
            }
    }
    std::sort(bound.witness.begin(), bound.witness.end());
    bound.value = checked_ll(total, "special cover bound");
    return bound;
}

ConcentrationVerdict concentration_check(const ValidatedDiagram& vd) {
    ConcentrationVerdict strong, weak;
    strong.level = ConcentrationLevel::ZeroOverZ;
    weak.level = ConcentrationLevel::RankZero;
    bool strong_ok = true, weak_ok = true;
    std::vector<std::string> missing;

    for (const std::string& bid : vd.branch_order()) {
        std::string strong_witness, weak_witness;
        for (const std::string& qid : vd.special_point_order()) {
            if (!vd.point_touches_branch(qid, bid))
                continue;
            const SpecialPointFibreData& f = vd.special_point(qid).fibre;
            if (f.h_n_minus_1_is_zero_over_Z && strong_witness.empty())
                strong_witness = qid;
            if ((f.h_n_minus_1_is_zero_over_Z || (f.betti_n_minus_1 && *f.betti_n_minus_1 == 0)) &&
                weak_witness.empty())
                weak_witness = qid;
        }
        if (strong_witness.empty())
            strong_ok = false;
        else
            strong.witnesses.emplace_back(bid, strong_witness);
        if (weak_witness.empty()) {
            weak_ok = false;
            missing.push_back(bid);
        } else {
            weak.witnesses.emplace_back(bid, weak_witness);
        }
    }

    if (strong_ok && !vd.branch_order().empty())
        return strong;
    if (weak_ok && !vd.branch_order().empty())
        return weak;
    ConcentrationVerdict out;
    out.level = ConcentrationLevel::Inconclusive;
    out.missing_branches = std::move(missing);
    return out;
}

BouquetVerdict bouquet_check(const ValidatedDiagram& vd, std::optional<long long> chi_override) {
    BouquetVerdict out;
    if (vd.n() < 3) {
        out.reason = "requires n >= 3, diagram has n = " + std::to_string(vd.n());
        return out;
    }

    bool cond_a = !vd.branch_order().empty();
    for (const std::string& bid : vd.branch_order()) {
        bool has = false;
        for (const auto& [loop_id, mono] : branch_w_loops(vd, bid)) {
            Integer dt = a_minus_i(*mono).det();
            if (dt == 1 || dt == -1) {
                has = true;
                break;
            }
        }
        cond_a = cond_a && has;
    }

    bool cond_b = !vd.branch_order().empty();
    for (const std::string& bid : vd.branch_order()) {
        bool has = false;
        for (const std::string& qid : vd.special_point_order())
            if (vd.point_touches_branch(qid, bid) &&
                vd.special_point(qid).fibre.h_n_minus_1_is_zero_over_Z) {
                has = true;
                break;
            }
        cond_b = cond_b && has;
    }

    if (!cond_a && !cond_b) {
        out.reason = "no branch-wise unimodular loop and no branch-wise vanishing local fibre";
        return out;
    }
    out.established = true;
    out.condition = cond_a ? 'a' : 'b';

    std::optional<long long> chi = chi_override;
    if (!chi) {
        try {
            chi = euler_characteristic(vd);
        } catch (const DataMissingError&) {
            chi.reset();
        }
    }
    if (chi) {
        const long long sign = (vd.n() % 2 == 0) ? 1 : -1;
        const long long count = sign * (*chi - 1);
        if (count >= 0)
            out.sphere_count = count;
    }
    return out;
}

NonSplittingVerdict nonsplitting_check(const ValidatedDiagram& vd) {
    NonSplittingVerdict out;
    if (!vd.diagram().claims_vanishing_homology_zero.value_or(false))
        return out;
    if (vd.diagram().isolated_points.empty()) {
        out.status = NonSplittingStatus::Pass;
        return out;
    }
    out.status = NonSplittingStatus::Contradiction;
    for (const IsolatedPoint& r : vd.diagram().isolated_points)
        out.offending_points.push_back(r.id);
    std::sort(out.offending_points.begin(), out.offending_points.end());
    return out;
}

Monodromy compose_vertical(const std::vector<Monodromy>& loops) {
    if (loops.empty())
        throw ArgumentError("compose_vertical needs at least one loop");
    IntMatrix acc = loops.front().matrix;
    for (std::size_t k = 1; k < loops.size(); ++k) {
        if (loops[k].size() != loops.front().size())
            throw DimensionError("loop #" + std::to_string(k) + " has size " +
                                 std::to_string(loops[k].size()) + ", expected " +
                                 std::to_string(loops.front().size()));
        acc = acc * loops[k].matrix;
    }
    return Monodromy{acc};
}

Monodromy vertical_from_homogeneous(const Monodromy& h, unsigned long long d) {
    return Monodromy{matrix_power(unimodular_inverse(h.matrix), d)};
}

MvExactResult mv_exact(const ValidatedDiagram& vd, const std::optional<std::vector<int>>& j2_signs,
                       Ring ring) {
    std::vector<std::string> missing;
    for (const std::string& qid : vd.special_point_order())
        if (!vd.special_point(qid).j1_block)
            missing.push_back(qid);
    if (!missing.empty()) {
        std::string msg = "exact mode needs j1_block on every special point; missing on:";
        for (const std::string& q : missing)
            msg += " " + q;
        throw DataMissingError(msg);
    }

    const std::size_t n_loops = vd.all_loops().size();
    if (j2_signs && j2_signs->size() != n_loops)
        throw ArgumentError("j2 sign list has " + std::to_string(j2_signs->size()) +
                            " entries, the diagram has " + std::to_string(n_loops) +
                            " local loops");
    if (j2_signs)
        for (int s : *j2_signs)
            if (s != 1 && s != -1)
                throw ArgumentError("j2 signs must be +1 or -1");

    // Target layout: special-point blocks (sorted ids) then branch blocks.
    std::map<std::string, std::size_t> point_offset, branch_offset;
    std::size_t target_rank = 0;
    for (const std::string& qid : vd.special_point_order()) {
        point_offset[qid] = target_rank;
        target_rank += static_cast<std::size_t>(*vd.special_point(qid).fibre.betti_n_minus_1);
    }
    for (const std::string& bid : vd.branch_order()) {
        branch_offset[bid] = target_rank;
        target_rank += vd.branch(bid).transversal_milnor_number;
    }

    std::size_t source_rank = 0;
    for (const LocalLoop* l : vd.all_loops())
        source_rank += l->monodromy.size();

    MvExactResult out;
    out.ring = ring;
    out.source_rank = source_rank;
    out.target_rank = target_rank;
    out.j_matrix = IntMatrix(target_rank, source_rank);

    std::size_t col = 0;
    std::size_t loop_index = 0;
    std::map<std::string, std::size_t> loop_col_offset_in_point;
    for (const std::string& qid : vd.special_point_order()) {
        const SpecialPoint& q = vd.special_point(qid);
        const IntMatrix& block = *q.j1_block;
        const std::size_t b_q = block.rows();
        std::size_t block_col = 0;
        for (const LocalLoop& l : q.loops) {
            const std::size_t mu = l.monodromy.size();
            const int sign = j2_signs ? (*j2_signs)[loop_index] : 1;
            for (std::size_t v = 0; v < mu; ++v) {
                for (std::size_t r = 0; r < b_q; ++r)
                    out.j_matrix(point_offset[qid] + r, col + v) = block(r, block_col + v);
                out.j_matrix(branch_offset[l.branch_id] + v, col + v) = sign;
            }
            col += mu;
            block_col += mu;
            ++loop_index;
        }
    }

    // Relation columns: Im(A_w - I) inside each branch block.
    std::size_t rel_cols = 0;
    for (const std::string& bid : vd.branch_order())
        for (const auto& [id, mono] : branch_w_loops(vd, bid))
            rel_cols += mono->size();
    out.relations = IntMatrix(target_rank, rel_cols);
    std::size_t rc = 0;
    for (const std::string& bid : vd.branch_order()) {
        const std::size_t off = branch_offset[bid];
        for (const auto& [id, mono] : branch_w_loops(vd, bid)) {
            IntMatrix m = a_minus_i(*mono);
            for (std::size_t j = 0; j < m.cols(); ++j, ++rc)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    out.relations(off + i, rc) = m(i, j);
        }
    }

    IntMatrix stacked = out.j_matrix.concat_cols(out.relations);
    if (ring.is_integers()) {
        out.group = cokernel(stacked);
        out.map_rank = rank(stacked);
        out.relations_rank = rank(out.relations);
    } else {
        out.map_rank = rank_mod_p(stacked, ring.modulus);
        out.relations_rank = rank_mod_p(out.relations, ring.modulus);
        out.group = AbelianGroup::free(target_rank - out.map_rank);
    }
    return out;
}

BettiIntervals betti_intervals(const ValidatedDiagram& vd, std::optional<long long> chi_override,
                               const std::optional<MvExactResult>& exact,
                               bool use_special_bound) {
    BettiIntervals out;

    VerticalBoundResult vertical = betti_bound_vertical(vd);
    out.bounds.push_back(vertical.bound);

    BettiBound trivial;
    trivial.method = BoundMethod::TrivialMuSum;
    Integer mu_sum = 0;
    for (const std::string& bid : vd.branch_order())
        mu_sum += vd.branch(bid).transversal_milnor_number;
    trivial.value = checked_ll(mu_sum, "transversal rank sum");
    out.bounds.push_back(trivial);

    if (use_special_bound) {
        try {
            out.bounds.push_back(betti_bound_special(vd));
        } catch (const CoverageError&) {
            // No covering set of priced special points; the bound is inapplicable.
        } catch (const DataMissingError&) {
        }
    }

    long long upper = trivial.value;
    std::string upper_tag = bound_method_name(BoundMethod::TrivialMuSum);
    for (const BettiBound& b : out.bounds)
        if (b.value < upper) {
            upper = b.value;
            upper_tag = bound_method_name(b.method);
            if (!b.optimal)
                upper_tag += " (greedy cover)";
        }

    ConcentrationVerdict conc = concentration_check(vd);
    if (conc.level != ConcentrationLevel::Inconclusive && upper > 0) {
        upper = 0;
        upper_tag = "fibre-vanishing-concentration";
    }

    long long lower = 0;
    std::string lower_tag = "betti numbers are non-negative";
    if (vd.n() == 2 && vd.diagram().irreducible_components_of_zero_set) {
        const long long c = *vd.diagram().irreducible_components_of_zero_set;
        if (c > lower) {
            lower = c;
            lower_tag = "component-count-lower-bound";
        }
    }

    bool exact_used = false;
    if (exact && exact->ring.is_integers()) {
        const long long b = static_cast<long long>(exact->group.free_rank);
        if (b > upper)
            throw InconsistencyError(
                "exact Mayer-Vietoris rank " + std::to_string(b) + " exceeds the upper bound " +
                std::to_string(upper) + " from " + upper_tag);
        if (b < lower)
            throw InconsistencyError("exact Mayer-Vietoris rank " + std::to_string(b) +
                                     " is below the lower bound " + std::to_string(lower) +
                                     " from " + lower_tag);
        lower = upper = b;
        lower_tag = upper_tag = "mayer-vietoris-cokernel";
        exact_used = true;
    }

    if (lower > upper)
        throw InconsistencyError("lower bound " + std::to_string(lower) + " (" + lower_tag +
                                 ") exceeds upper bound " + std::to_string(upper) + " (" +
                                 upper_tag + ")");

    std::optional<long long> chi = chi_override;
    std::string chi_tag = chi_override ? "euler-characteristic-override" : "euler-formula";
    if (!chi) {
        try {
            chi = euler_characteristic(vd);
        } catch (const DataMissingError&) {
            chi.reset();
        }
    }

    out.b_n_minus_1.lower = lower;
    out.b_n_minus_1.upper = upper;
    out.b_n_minus_1.justification = {lower_tag, upper_tag};

    if (!chi)
        return out;

    const long long sign = (vd.n() % 2 == 0) ? 1 : -1;
    const long long shift = sign * (*chi - 1);

    if (upper + shift < 0)
        throw InconsistencyError(
            "b_n would be negative: b_{n-1} <= " + std::to_string(upper) + " (" + upper_tag +
            ") and chi = " + std::to_string(*chi) + " (" + chi_tag + ") give b_n <= " +
            std::to_string(upper + shift));

    if (lower + shift < 0 && !exact_used) {
        // b_n >= 0 pushes the lower end of b_{n-1} up through the Euler
        // relation; record the combination.
        lower = -shift;
        out.b_n_minus_1.lower = lower;
        out.b_n_minus_1.justification = {"raised by b_n >= 0 through the euler-formula relation",
                                         upper_tag};
        if (lower > upper)
            throw InconsistencyError("b_n >= 0 with chi = " + std::to_string(*chi) + " (" +
                                     chi_tag + ") forces b_{n-1} >= " + std::to_string(lower) +
                                     ", contradicting the upper bound " + std::to_string(upper) +
                                     " (" + upper_tag + ")");
    } else if (lower + shift < 0 && exact_used) {
        throw InconsistencyError("exact b_{n-1} = " + std::to_string(lower) + " with chi = " +
                                 std::to_string(*chi) + " (" + chi_tag + ") gives negative b_n");
    }

    BettiInterval bn;
    bn.lower = out.b_n_minus_1.lower + shift;
    bn.upper = out.b_n_minus_1.upper + shift;
    bn.justification = {"euler-formula shift of the b_{n-1} interval by " + std::to_string(shift) +
                        " (" + chi_tag + ")"};
    out.b_n = bn;
    return out;
}

}  // namespace milfib
