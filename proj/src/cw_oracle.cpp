#include "milfib/cw_oracle.hpp"

#include "milfib/errors.hpp"

#include <sstream>

namespace milfib {

ChainComplexSlice build_loop_complex(const Monodromy& a) {
    if (!a.matrix.is_square())
        throw DimensionError("loop monodromy must be square");
    ChainComplexSlice c;
    c.upper_rank = a.size();
    c.lower_rank = a.size();
    c.boundary = a.matrix - IntMatrix::identity(a.size());
    return c;
}

ChainComplexSlice build_branch_complex(const ValidatedDiagram& vd, const std::string& branch_id) {
    const Branch& b = vd.branch(branch_id);
    const std::size_t mu = b.transversal_milnor_number;

    ChainComplexSlice c;
    c.lower_rank = mu;
    c.boundary = IntMatrix(mu, 0);
    auto attach = [&c](const Monodromy& a) {
        c.boundary = c.boundary.concat_cols(a.matrix - IntMatrix::identity(a.size()));
    };
    for (const Monodromy& g : b.genus_loops)
        attach(g);
    for (const LocalLoop* l : vd.loops_on_branch(branch_id))
        attach(l->monodromy);
    for (const Monodromy& u : b.outside_loops)
        attach(u);
    c.upper_rank = c.boundary.cols();
    return c;
}

std::pair<AbelianGroup, AbelianGroup> homology_of_slice(const ChainComplexSlice& c) {
    const std::size_t r = rank(c.boundary);
    return {AbelianGroup::free(c.upper_rank - r), cokernel(c.boundary)};
}

std::size_t CrossValidationReport::failures() const {
    std::size_t n = 0;
    for (const CrossValidationItem& item : items)
        if (!item.pass)
            ++n;
    return n;
}

CrossValidationItem compare_loop_slice(const std::string& loop_id, const Monodromy& a,
                                       const ChainComplexSlice& slice) {
    CrossValidationItem item;
    item.object_id = loop_id;
    item.aspect = "loop slice homology vs Wang groups";
    auto [upper, lower] = homology_of_slice(slice);
    WangGroups wang = wang_groups(a);
    item.pass = upper == wang.h_upper && lower == wang.h_lower;
    if (!item.pass) {
        std::ostringstream os;
        os << "slice gives (" << upper.to_string() << ", " << lower.to_string()
           << "), Wang sequence gives (" << wang.h_upper.to_string() << ", "
           << wang.h_lower.to_string() << ")";
        item.detail = os.str();
    }
    return item;
}

std::vector<CrossValidationItem> compare_branch_slice(const ValidatedDiagram& vd,
                                                      const std::string& branch_id,
                                                      const ChainComplexSlice& slice) {
    std::vector<CrossValidationItem> items;
    auto [upper, lower] = homology_of_slice(slice);

    CrossValidationItem group_item;
    group_item.object_id = branch_id;
    group_item.aspect = "branch slice H_n vs branch group";
    AbelianGroup expected = branch_group(vd, branch_id);
    group_item.pass = lower == expected;
    if (!group_item.pass)
        group_item.detail = "slice gives " + lower.to_string() + ", branch presentation gives " +
                            expected.to_string();
    items.push_back(std::move(group_item));

    // Exactness bookkeeping: kernel rank = upper_rank - rank = upper_rank -
    // (mu - free corank of the cokernel).
    CrossValidationItem rank_item;
    rank_item.object_id = branch_id;
    rank_item.aspect = "branch slice kernel rank bookkeeping";
    const std::size_t mu = vd.branch(branch_id).transversal_milnor_number;
    const std::size_t expected_upper = slice.upper_rank - (mu - expected.free_rank);
    rank_item.pass = upper.free_rank == expected_upper && upper.torsion.empty();
    if (!rank_item.pass)
        rank_item.detail = "slice kernel has rank " + std::to_string(upper.free_rank) +
                           ", bookkeeping expects " + std::to_string(expected_upper);
    items.push_back(std::move(rank_item));

    CrossValidationItem euler_item;
    euler_item.object_id = branch_id;
    euler_item.aspect = "branch slice Euler characteristic vs closed form";
    const long long n = vd.n();
    const long long sign_upper = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1) = (-1)^(n-1)
    const long long sign_lower = (n % 2 == 0) ? 1 : -1;  // (-1)^n
    const long long slice_chi = sign_lower * static_cast<long long>(slice.lower_rank) +
                                sign_upper * static_cast<long long>(slice.upper_rank);
    const long long closed = branch_euler(vd, branch_id, n);
    euler_item.pass = slice_chi == closed;
    if (!euler_item.pass)
        euler_item.detail = "slice chi = " + std::to_string(slice_chi) + ", closed form gives " +
                            std::to_string(closed);
    items.push_back(std::move(euler_item));

    return items;
}

CrossValidationReport cross_validate(const ValidatedDiagram& vd) {
    CrossValidationReport report;

    for (const std::string& qid : vd.special_point_order())
        for (const LocalLoop& l : vd.special_point(qid).loops)
            report.items.push_back(
                compare_loop_slice(l.id, l.monodromy, build_loop_complex(l.monodromy)));

    for (const std::string& bid : vd.branch_order()) {
        const Branch& b = vd.branch(bid);
        for (std::size_t k = 0; k < b.genus_loops.size(); ++k)
            report.items.push_back(
                compare_loop_slice(bid + "/genus[" + std::to_string(k) + "]", b.genus_loops[k],
                                   build_loop_complex(b.genus_loops[k])));
        for (std::size_t k = 0; k < b.outside_loops.size(); ++k)
            report.items.push_back(
                compare_loop_slice(bid + "/outside[" + std::to_string(k) + "]", b.outside_loops[k],
                                   build_loop_complex(b.outside_loops[k])));
        for (CrossValidationItem& item : compare_branch_slice(vd, bid, build_branch_complex(vd, bid)))
            report.items.push_back(std::move(item));
    }

    for (const CrossValidationItem& item : report.items)
        report.all_pass = report.all_pass && item.pass;
    return report;
}

}  // namespace milfib
