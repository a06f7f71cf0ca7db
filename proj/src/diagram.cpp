#include "milfib/diagram.hpp"

#include "milfib/errors.hpp"

#include <algorithm>
#include <set>

namespace milfib {

const Branch& ValidatedDiagram::branch(const std::string& id) const {
    auto it = branch_index_.find(id);
    if (it == branch_index_.end())
        throw ArgumentError("unknown branch id '" + id + "'");
    return diagram_.branches[it->second];
}

const BranchCounts& ValidatedDiagram::counts(const std::string& branch_id) const {
    auto it = counts_.find(branch_id);
    if (it == counts_.end())
        throw ArgumentError("unknown branch id '" + branch_id + "'");
    return it->second;
}

const SpecialPoint& ValidatedDiagram::special_point(const std::string& id) const {
    auto it = point_index_.find(id);
    if (it == point_index_.end())
        throw ArgumentError("unknown special point id '" + id + "'");
    return diagram_.special_points[it->second];
}

const std::vector<const LocalLoop*>& ValidatedDiagram::loops_on_branch(
    const std::string& branch_id) const {
    auto it = branch_loops_.find(branch_id);
    if (it == branch_loops_.end())
        throw ArgumentError("unknown branch id '" + branch_id + "'");
    return it->second;
}

bool ValidatedDiagram::point_touches_branch(const std::string& point_id,
                                            const std::string& branch_id) const {
    const SpecialPoint& q = special_point(point_id);
    return std::any_of(q.loops.begin(), q.loops.end(),
                       [&](const LocalLoop& l) { return l.branch_id == branch_id; });
}

struct Validator {
    ValidationResult run(const DeformationDiagram& input) {
        ValidationResult result;
        auto issue = [&result](const std::string& id, const std::string& msg) {
            result.issues.push_back({id, msg});
        };

        ValidatedDiagram vd;
        vd.diagram_ = input;
        DeformationDiagram& d = vd.diagram_;

        if (d.n < 2)
            issue("diagram", "n = " + std::to_string(d.n) + " but the construction requires n >= 2");

        std::set<std::string> branch_ids;
        for (const Branch& b : d.branches) {
            if (b.id.empty())
                issue("branch", "empty branch id");
            if (!branch_ids.insert(b.id).second)
                issue(b.id, "duplicate branch id");
        }

        auto check_monodromy = [&](const std::string& owner, const Monodromy& a,
                                   std::size_t expected) {
            if (!a.matrix.is_square()) {
                issue(owner, "monodromy matrix is " + std::to_string(a.matrix.rows()) + "x" +
                                 std::to_string(a.matrix.cols()) + ", must be square");
                return;
            }
            if (a.size() != expected) {
                issue(owner, "monodromy is " + std::to_string(a.size()) + "x" +
                                 std::to_string(a.size()) + " but the branch has transversal rank " +
                                 std::to_string(expected));
                return;
            }
            Integer dt = a.matrix.det();
            if (dt != 1 && dt != -1)
                issue(owner, "monodromy has determinant " + dt.str() +
                                 ", not an automorphism of the transversal lattice");
        };

        for (std::size_t bi = 0; bi < d.branches.size(); ++bi) {
            const Branch& b = d.branches[bi];
            const std::string id = b.id.empty() ? "branch #" + std::to_string(bi) : b.id;
            if (b.genus < 0)
                issue(id, "genus must be >= 0");
            if (b.transversal_milnor_number < 1)
                issue(id, "transversal Milnor number must be >= 1");
            if (b.outside_loops.empty())
                issue(id, "no outside loops; every branch needs tau_i > 0");
            if (b.genus >= 0 &&
                b.genus_loops.size() != static_cast<std::size_t>(2 * b.genus))
                issue(id, "genus " + std::to_string(b.genus) + " requires exactly " +
                              std::to_string(2 * b.genus) + " genus loops, got " +
                              std::to_string(b.genus_loops.size()));
            for (std::size_t k = 0; k < b.genus_loops.size(); ++k)
                check_monodromy(id + "/genus[" + std::to_string(k) + "]", b.genus_loops[k],
                                b.transversal_milnor_number);
            for (std::size_t k = 0; k < b.outside_loops.size(); ++k)
                check_monodromy(id + "/outside[" + std::to_string(k) + "]", b.outside_loops[k],
                                b.transversal_milnor_number);
        }

        std::set<std::string> point_ids;
        for (SpecialPoint& q : d.special_points) {
            if (q.id.empty())
                issue("special point", "empty special point id");
            if (!point_ids.insert(q.id).second)
                issue(q.id, "duplicate special point id");
            if (q.loops.empty())
                issue(q.id, "a special point must carry at least one local loop");

            std::size_t loop_mu_total = 0;
            bool loop_mu_known = true;
            for (std::size_t k = 0; k < q.loops.size(); ++k) {
                LocalLoop& l = q.loops[k];
                if (l.id.empty())
                    l.id = q.id + ":" + std::to_string(k);
                l.special_point_id = q.id;
                if (!branch_ids.count(l.branch_id)) {
                    issue(l.id, "references branch '" + l.branch_id + "' which does not exist");
                    loop_mu_known = false;
                    continue;
                }
                const Branch* owner = nullptr;
                for (const Branch& b : d.branches)
                    if (b.id == l.branch_id)
                        owner = &b;
                check_monodromy(l.id, l.monodromy, owner->transversal_milnor_number);
                loop_mu_total += owner->transversal_milnor_number;
            }

            if (q.fibre.h_n_minus_1_is_zero_over_Z && q.fibre.betti_n_minus_1 &&
                *q.fibre.betti_n_minus_1 != 0)
                issue(q.id, "fibre claims vanishing over Z but betti_n_minus_1 = " +
                                std::to_string(*q.fibre.betti_n_minus_1));
            if (q.fibre.betti_n_minus_1 && *q.fibre.betti_n_minus_1 < 0)
                issue(q.id, "betti_n_minus_1 must be >= 0");

            if (q.j1_block) {
                if (!q.fibre.betti_n_minus_1) {
                    issue(q.id, "j1_block given but betti_n_minus_1 is missing");
                } else {
                    const std::size_t want_rows =
                        static_cast<std::size_t>(*q.fibre.betti_n_minus_1);
                    if (q.j1_block->rows() != want_rows)
                        issue(q.id, "j1_block has " + std::to_string(q.j1_block->rows()) +
                                        " rows, betti_n_minus_1 is " + std::to_string(want_rows));
                    else if (want_rows == 0 && q.j1_block->cols() == 0 && loop_mu_known)
                        // A 0-row block carries no entries; normalize its width.
                        q.j1_block = IntMatrix(0, loop_mu_total);
                    if (loop_mu_known && q.j1_block->rows() > 0 &&
                        q.j1_block->cols() != loop_mu_total)
                        issue(q.id, "j1_block has " + std::to_string(q.j1_block->cols()) +
                                        " columns, the loops contribute " +
                                        std::to_string(loop_mu_total));
                }
            }
        }

        std::set<std::string> isolated_ids;
        for (const IsolatedPoint& r : d.isolated_points) {
            if (!isolated_ids.insert(r.id).second)
                issue(r.id, "duplicate isolated point id");
            if (r.milnor_number < 1)
                issue(r.id, "Milnor number must be >= 1");
        }

        if (!result.issues.empty())
            return result;

        for (std::size_t i = 0; i < d.branches.size(); ++i) {
            vd.branch_index_[d.branches[i].id] = i;
            vd.branch_order_.push_back(d.branches[i].id);
            vd.branch_loops_[d.branches[i].id];
        }
        std::sort(vd.branch_order_.begin(), vd.branch_order_.end());
        for (std::size_t i = 0; i < d.special_points.size(); ++i) {
            vd.point_index_[d.special_points[i].id] = i;
            vd.point_order_.push_back(d.special_points[i].id);
        }
        std::sort(vd.point_order_.begin(), vd.point_order_.end());

        for (const std::string& qid : vd.point_order_) {
            const SpecialPoint& q = d.special_points[vd.point_index_[qid]];
            for (const LocalLoop& l : q.loops) {
                vd.branch_loops_[l.branch_id].push_back(&l);
                vd.all_loops_.push_back(&l);
            }
        }

        for (const Branch& b : d.branches) {
            BranchCounts c;
            c.gamma = vd.branch_loops_[b.id].size();
            c.tau = b.outside_loops.size();
            c.loop_count = static_cast<std::size_t>(2 * b.genus) + c.tau + c.gamma;
            vd.counts_[b.id] = c;
        }

        result.diagram = std::move(vd);
        return result;
    }
};

ValidationResult validate(const DeformationDiagram& d) {
    return Validator{}.run(d);
}

}  // namespace milfib
