#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "milfib/corpus.hpp"
#include "milfib/errors.hpp"
#include "milfib/schema.hpp"

using namespace milfib;

TEST_CASE("a hand-written file parses to the expected diagram") {
    const std::string text = R"({
      "n": 2,
      "branches": [
        {"id": "line", "genus": 0, "transversal_milnor_number": 3,
         "genus_loops": [],
         "outside_loops": [[[1,1,1],[-1,0,0],[0,-1,0]]]}
      ],
      "special_points": [
        {"id": "origin",
         "loops": [{"branch": "line", "monodromy": [[1,1,1],[-1,0,0],[0,-1,0]]}],
         "fibre": {"euler_char": 0, "betti_n_minus_1": 1},
         "j1_block": [[1,0,1]]}
      ],
      "isolated_points": []
    })";
    DeformationDiagram d = parse_diagram(text);
    CHECK(d.n == 2);
    REQUIRE(d.branches.size() == 1);
    CHECK(d.branches[0].transversal_milnor_number == 3);
    CHECK(d.branches[0].outside_loops[0] == f1a3_monodromy());
    REQUIRE(d.special_points.size() == 1);
    CHECK(d.special_points[0].fibre.euler_char == 0);
    CHECK(d.special_points[0].j1_block == IntMatrix{{1, 0, 1}});
}

TEST_CASE("diagram serialization round-trips through the schema") {
    for (const CorpusEntry& e : corpus()) {
        const std::string once = serialize_diagram(e.diagram);
        DeformationDiagram reparsed = parse_diagram(once);
        CHECK_MESSAGE(serialize_diagram(reparsed) == once, e.name);
    }
}

TEST_CASE("matrix entries beyond 64 bits travel as decimal strings") {
    IntMatrix m(1, 1);
    m(0, 0) = Integer("123456789012345678901234567890");
    Json j = matrix_to_json(m);
    CHECK(j[0][0].is_string());
    IntMatrix back = matrix_from_json(j, "$");
    CHECK(back == m);

    IntMatrix small{{-7}};
    CHECK(matrix_to_json(small)[0][0].is_number_integer());
}

TEST_CASE("parse errors carry field context") {
    SUBCASE("missing n") {
        CHECK_THROWS_WITH_AS(parse_diagram(R"({"branches": [], "special_points": [],
                                              "isolated_points": []})"),
                             doctest::Contains("missing required key 'n'"), ParseError);
    }
    SUBCASE("ragged matrix") {
        CHECK_THROWS_WITH_AS(
            parse_diagram(R"({"n": 2,
                "branches": [{"id": "b", "genus": 0, "transversal_milnor_number": 2,
                              "genus_loops": [], "outside_loops": [[[1,0],[0]]]}],
                "special_points": [], "isolated_points": []})"),
            doctest::Contains("$.branches[0].outside_loops[0][1]"), ParseError);
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_WITH_AS(parse_diagram(R"({"n": 2, "branches": [], "special_points": [],
                                              "isolated_points": [], "surprise": 1})"),
                             doctest::Contains("unknown key 'surprise'"), ParseError);
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(parse_diagram("definitely not json"), ParseError);
    }
    SUBCASE("non-integer where an integer is needed") {
        CHECK_THROWS_WITH_AS(parse_diagram(R"({"n": 2.5, "branches": [], "special_points": [],
                                              "isolated_points": []})"),
                             doctest::Contains("$.n"), ParseError);
    }
}

TEST_CASE("optional top-level fields survive the round trip") {
    DeformationDiagram d = find_corpus_entry("f1a3")->diagram;
    d.irreducible_components_of_zero_set = 2;
    d.claims_vanishing_homology_zero = true;
    DeformationDiagram back = parse_diagram(serialize_diagram(d));
    CHECK(back.irreducible_components_of_zero_set == 2);
    CHECK(back.claims_vanishing_homology_zero == true);
}
