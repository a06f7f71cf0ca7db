#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "milfib/errors.hpp"
#include "milfib/zlattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using namespace milfib;

namespace {

// h - I for the transversal-A3 monodromy used across the corpus.
IntMatrix h_minus_i() {
    return IntMatrix{{0, 1, 1}, {-1, -1, 0}, {0, -1, -1}};
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int entry_bound) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = entry(rng);
    return m;
}

Integer entry_gcd(const IntMatrix& m) {
    Integer g = 0;
    for (const Integer& e : m.entries())
        g = boost::multiprecision::gcd(g, e);
    return g;
}

}  // namespace

TEST_CASE("smith normal form of small fixed matrices") {
    SUBCASE("diag(2,3) has factors 1, 6") {
        SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
        REQUIRE(s.rank == 2);
        CHECK(s.invariant_factors == std::vector<Integer>{1, 6});
    }
    SUBCASE("2x3 zero matrix has rank 0") {
        SmithForm s = smith_normal_form(IntMatrix::zero(2, 3));
        CHECK(s.rank == 0);
        CHECK(s.invariant_factors.empty());
    }
    SUBCASE("h - I has rank 2 with unit factors") {
        SmithForm s = smith_normal_form(h_minus_i());
        CHECK(s.rank == 2);
        CHECK(s.invariant_factors == std::vector<Integer>{1, 1});
    }
    SUBCASE("empty matrices") {
        CHECK(smith_normal_form(IntMatrix(0, 0)).rank == 0);
        CHECK(smith_normal_form(IntMatrix(0, 4)).rank == 0);
        CHECK(smith_normal_form(IntMatrix(4, 0)).rank == 0);
    }
}

TEST_CASE("smith transforms reproduce the padded diagonal") {
    IntMatrix m = h_minus_i();
    SmithForm s = smith_normal_form(m);
    CHECK(s.left_transform * m * s.right_transform == s.padded_diagonal(m.rows(), m.cols()));
    CHECK((s.left_transform.det() == 1 || s.left_transform.det() == -1));
    CHECK((s.right_transform.det() == 1 || s.right_transform.det() == -1));
}

TEST_CASE("smith normal form is deterministic") {
    IntMatrix m{{4, -6, 2}, {6, 12, 9}, {0, 3, -3}};
    SmithForm a = smith_normal_form(m);
    SmithForm b = smith_normal_form(m);
    CHECK(a.left_transform == b.left_transform);
    CHECK(a.right_transform == b.right_transform);
    CHECK(a.invariant_factors == b.invariant_factors);
}

TEST_CASE("cokernel") {
    CHECK(cokernel(h_minus_i()) == AbelianGroup{1, {}});
    CHECK(cokernel(IntMatrix::zero(1, 1)) == AbelianGroup{1, {}});
    CHECK(cokernel(IntMatrix{{2}}) == AbelianGroup{0, {2}});
    CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == AbelianGroup{0, {6}});
}

TEST_CASE("cokernel_multi") {
    SUBCASE("images of h - I and h^2 - I together still give Z") {
        IntMatrix h{{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}};
        IntMatrix h2 = h * h;
        IntMatrix id = IntMatrix::identity(3);
        CHECK(cokernel_multi(3, {h - id, h2 - id}) == AbelianGroup{1, {}});
    }
    SUBCASE("no matrices leaves the full lattice") {
        CHECK(cokernel_multi(4, {}) == AbelianGroup{4, {}});
    }
    SUBCASE("coprime scalars annihilate Z") {
        CHECK(cokernel_multi(1, {IntMatrix{{2}}, IntMatrix{{3}}}) == AbelianGroup::trivial());
    }
    SUBCASE("row mismatch names the offending matrix") {
        CHECK_THROWS_WITH_AS(cokernel_multi(2, {IntMatrix::zero(2, 1), IntMatrix::zero(3, 1)}),
                             doctest::Contains("matrix #1"), DimensionError);
    }
}

TEST_CASE("kernel_rank") {
    CHECK(kernel_rank(h_minus_i()) == 1);
    CHECK(kernel_rank(IntMatrix::identity(4)) == 0);
    CHECK(kernel_rank(IntMatrix::zero(3, 3)) == 3);
}

TEST_CASE("rank_mod_p") {
    CHECK(rank_mod_p(IntMatrix{{2}}, 2) == 0);
    CHECK(rank_mod_p(IntMatrix::identity(3), 2) == 3);
    CHECK(rank_mod_p(IntMatrix::identity(3), 1000003) == 3);
    CHECK(rank_mod_p(h_minus_i(), 2) == 2);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix{{1}}, 6), ArgumentError);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix{{1}}, std::uint64_t{1} << 33), ArgumentError);
}

TEST_CASE("unimodular inverse and powers") {
    IntMatrix h{{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}};
    CHECK(unimodular_inverse(h) * h == IntMatrix::identity(3));
    CHECK(matrix_power(h, 4) == IntMatrix::identity(3));
    CHECK(matrix_power(h, 0) == IntMatrix::identity(3));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2}}), ArgumentError);
}

TEST_CASE("primitive left annihilator") {
    IntMatrix m = h_minus_i();
    IntMatrix v = primitive_left_annihilator(m);
    REQUIRE(v.rows() == 1);
    REQUIRE(v.cols() == 3);
    CHECK((v * m).is_zero());
    CHECK(entry_gcd(v) == 1);
    CHECK_THROWS_AS(primitive_left_annihilator(IntMatrix::identity(2)), ArgumentError);
}

TEST_CASE("randomized smith property suite") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 500; ++iter) {
        IntMatrix m = random_matrix(rng, 8, 9);
        SmithForm s = smith_normal_form(m);

        REQUIRE(s.left_transform * m * s.right_transform == s.padded_diagonal(m.rows(), m.cols()));
        REQUIRE((s.left_transform.is_empty() || s.left_transform.det() == 1 ||
                 s.left_transform.det() == -1));
        REQUIRE((s.right_transform.is_empty() || s.right_transform.det() == 1 ||
                 s.right_transform.det() == -1));

        for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k) {
            REQUIRE(s.invariant_factors[k] >= 1);
            REQUIRE(s.invariant_factors[k + 1] % s.invariant_factors[k] == 0);
        }

        if (m.is_square() && !m.is_empty()) {
            Integer dt = m.det();
            if (dt != 0) {
                Integer prod = 1;
                for (const Integer& f : s.invariant_factors)
                    prod *= f;
                REQUIRE(prod == abs(dt));
            } else {
                REQUIRE(s.rank < m.rows());
            }
        }

        REQUIRE(cokernel_multi(m.rows(), {m}) == cokernel(m));
        REQUIRE(cokernel(m).free_rank + s.rank == m.rows());
        REQUIRE(rank_mod_p(m, 2) <= s.rank);
        REQUIRE(rank_mod_p(m, 1000003) == s.rank);  // huge prime divides no factor here
    }
}
