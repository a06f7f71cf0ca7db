#include "milfib/schema.hpp"

#include "milfib/errors.hpp"

#include <limits>
#include <set>

namespace milfib {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError(path + ": " + msg);
}

void expect_object(const Json& j, const std::string& path) {
    if (!j.is_object())
        fail(path, "expected an object");
}

void check_keys(const Json& j, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            fail(path, "unknown key '" + key + "'");
}

long long get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        fail(path, "expected an integer");
    if (j.is_number_unsigned() &&
        j.get<unsigned long long>() >
            static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
        fail(path, "integer out of range");
    return j.get<long long>();
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean())
        fail(path, "expected a boolean");
    return j.get<bool>();
}

const Json& require(const Json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        fail(path, "missing required key '" + key + "'");
    return *it;
}

}  // namespace

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

Integer integer_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            fail(path, "'" + j.get<std::string>() + "' is not a decimal integer");
        }
    }
    fail(path, "expected an integer (number or decimal string)");
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(integer_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Integer> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!row.is_array())
            fail(row_path, "expected a row (array of integers)");
        if (i == 0) {
            cols = row.size();
            entries.reserve(rows * cols);
        } else if (row.size() != cols) {
            fail(row_path, "row has " + std::to_string(row.size()) + " entries, row 0 has " +
                               std::to_string(cols));
        }
        for (std::size_t k = 0; k < row.size(); ++k)
            entries.push_back(integer_from_json(row[k], row_path + "[" + std::to_string(k) + "]"));
    }
    return IntMatrix(rows, cols, std::move(entries));
}

namespace {

Monodromy monodromy_from_json(const Json& j, const std::string& path) {
    return Monodromy{matrix_from_json(j, path)};
}

Branch branch_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, path,
               {"id", "genus", "transversal_milnor_number", "genus_loops", "outside_loops"});
    Branch b;
    b.id = get_string(require(j, "id", path), path + ".id");
    b.genus = get_int(require(j, "genus", path), path + ".genus");
    const long long mu = get_int(require(j, "transversal_milnor_number", path),
                                 path + ".transversal_milnor_number");
    if (mu < 0)
        fail(path + ".transversal_milnor_number", "must be non-negative");
    b.transversal_milnor_number = static_cast<std::size_t>(mu);

    const Json& gl = require(j, "genus_loops", path);
    if (!gl.is_array())
        fail(path + ".genus_loops", "expected an array of matrices");
    for (std::size_t k = 0; k < gl.size(); ++k)
        b.genus_loops.push_back(
            monodromy_from_json(gl[k], path + ".genus_loops[" + std::to_string(k) + "]"));

    const Json& ol = require(j, "outside_loops", path);
    if (!ol.is_array())
        fail(path + ".outside_loops", "expected an array of matrices");
    for (std::size_t k = 0; k < ol.size(); ++k)
        b.outside_loops.push_back(
            monodromy_from_json(ol[k], path + ".outside_loops[" + std::to_string(k) + "]"));
    return b;
}

SpecialPoint special_point_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, path, {"id", "loops", "fibre", "j1_block"});
    SpecialPoint q;
    q.id = get_string(require(j, "id", path), path + ".id");

    const Json& loops = require(j, "loops", path);
    if (!loops.is_array())
        fail(path + ".loops", "expected an array of loops");
    for (std::size_t k = 0; k < loops.size(); ++k) {
        const std::string lp = path + ".loops[" + std::to_string(k) + "]";
        expect_object(loops[k], lp);
        check_keys(loops[k], lp, {"branch", "monodromy"});
        LocalLoop l;
        l.branch_id = get_string(require(loops[k], "branch", lp), lp + ".branch");
        l.monodromy = monodromy_from_json(require(loops[k], "monodromy", lp), lp + ".monodromy");
        l.special_point_id = q.id;
        q.loops.push_back(std::move(l));
    }

    const Json& fibre = require(j, "fibre", path);
    const std::string fp = path + ".fibre";
    expect_object(fibre, fp);
    check_keys(fibre, fp, {"euler_char", "betti_n_minus_1", "h_n_minus_1_is_zero_over_Z"});
    if (fibre.contains("euler_char"))
        q.fibre.euler_char = get_int(fibre["euler_char"], fp + ".euler_char");
    if (fibre.contains("betti_n_minus_1"))
        q.fibre.betti_n_minus_1 = get_int(fibre["betti_n_minus_1"], fp + ".betti_n_minus_1");
    if (fibre.contains("h_n_minus_1_is_zero_over_Z"))
        q.fibre.h_n_minus_1_is_zero_over_Z =
            get_bool(fibre["h_n_minus_1_is_zero_over_Z"], fp + ".h_n_minus_1_is_zero_over_Z");

    if (j.contains("j1_block"))
        q.j1_block = matrix_from_json(j["j1_block"], path + ".j1_block");
    return q;
}

IsolatedPoint isolated_point_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, path, {"id", "milnor_number", "on_zero_fibre"});
    IsolatedPoint r;
    r.id = get_string(require(j, "id", path), path + ".id");
    r.milnor_number = get_int(require(j, "milnor_number", path), path + ".milnor_number");
    r.on_zero_fibre = get_bool(require(j, "on_zero_fibre", path), path + ".on_zero_fibre");
    return r;
}

}  // namespace

DeformationDiagram diagram_from_json(const Json& j) {
    expect_object(j, "$");
    check_keys(j, "$",
               {"n", "branches", "special_points", "isolated_points",
                "irreducible_components_of_zero_set", "claims_vanishing_homology_zero"});
    DeformationDiagram d;
    d.n = get_int(require(j, "n", "$"), "$.n");

    const Json& branches = require(j, "branches", "$");
    if (!branches.is_array())
        fail("$.branches", "expected an array");
    for (std::size_t k = 0; k < branches.size(); ++k)
        d.branches.push_back(branch_from_json(branches[k], "$.branches[" + std::to_string(k) + "]"));

    const Json& points = require(j, "special_points", "$");
    if (!points.is_array())
        fail("$.special_points", "expected an array");
    for (std::size_t k = 0; k < points.size(); ++k)
        d.special_points.push_back(
            special_point_from_json(points[k], "$.special_points[" + std::to_string(k) + "]"));

    const Json& isolated = require(j, "isolated_points", "$");
    if (!isolated.is_array())
        fail("$.isolated_points", "expected an array");
    for (std::size_t k = 0; k < isolated.size(); ++k)
        d.isolated_points.push_back(
            isolated_point_from_json(isolated[k], "$.isolated_points[" + std::to_string(k) + "]"));

    if (j.contains("irreducible_components_of_zero_set"))
        d.irreducible_components_of_zero_set =
            get_int(j["irreducible_components_of_zero_set"], "$.irreducible_components_of_zero_set");
    if (j.contains("claims_vanishing_homology_zero"))
        d.claims_vanishing_homology_zero =
            get_bool(j["claims_vanishing_homology_zero"], "$.claims_vanishing_homology_zero");
    return d;
}

DeformationDiagram parse_diagram(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return diagram_from_json(j);
}

Json diagram_to_json(const DeformationDiagram& d) {
    Json j;
    j["n"] = d.n;
    Json branches = Json::array();
    for (const Branch& b : d.branches) {
        Json jb;
        jb["id"] = b.id;
        jb["genus"] = b.genus;
        jb["transversal_milnor_number"] = static_cast<long long>(b.transversal_milnor_number);
        Json gl = Json::array();
        for (const Monodromy& g : b.genus_loops)
            gl.push_back(matrix_to_json(g.matrix));
        jb["genus_loops"] = std::move(gl);
        Json ol = Json::array();
        for (const Monodromy& u : b.outside_loops)
            ol.push_back(matrix_to_json(u.matrix));
        jb["outside_loops"] = std::move(ol);
        branches.push_back(std::move(jb));
    }
    j["branches"] = std::move(branches);

    Json points = Json::array();
    for (const SpecialPoint& q : d.special_points) {
        Json jq;
        jq["id"] = q.id;
        Json loops = Json::array();
        for (const LocalLoop& l : q.loops) {
            Json jl;
            jl["branch"] = l.branch_id;
            jl["monodromy"] = matrix_to_json(l.monodromy.matrix);
            loops.push_back(std::move(jl));
        }
        jq["loops"] = std::move(loops);
        Json fibre;
        if (q.fibre.euler_char)
            fibre["euler_char"] = *q.fibre.euler_char;
        if (q.fibre.betti_n_minus_1)
            fibre["betti_n_minus_1"] = *q.fibre.betti_n_minus_1;
        if (q.fibre.h_n_minus_1_is_zero_over_Z)
            fibre["h_n_minus_1_is_zero_over_Z"] = true;
        jq["fibre"] = fibre.is_null() ? Json::object() : std::move(fibre);
        if (q.j1_block)
            jq["j1_block"] = matrix_to_json(*q.j1_block);
        points.push_back(std::move(jq));
    }
    j["special_points"] = std::move(points);

    Json isolated = Json::array();
    for (const IsolatedPoint& r : d.isolated_points) {
        Json jr;
        jr["id"] = r.id;
        jr["milnor_number"] = r.milnor_number;
        jr["on_zero_fibre"] = r.on_zero_fibre;
        isolated.push_back(std::move(jr));
    }
    j["isolated_points"] = std::move(isolated);

    if (d.irreducible_components_of_zero_set)
        j["irreducible_components_of_zero_set"] = *d.irreducible_components_of_zero_set;
    if (d.claims_vanishing_homology_zero)
        j["claims_vanishing_homology_zero"] = *d.claims_vanishing_homology_zero;
    return j;
}

std::string serialize_diagram(const DeformationDiagram& d) {
    return diagram_to_json(d).dump(2) + "\n";
}

}  // namespace milfib
