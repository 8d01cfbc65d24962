#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "torusforge/exactla.hpp"
#include "torusforge/linsolve.hpp"
#include "torusforge/poly.hpp"
#include "torusforge/algfile.hpp"

using namespace torusforge;

namespace {

RatMatrix n9_d() { return parse_matrix(read_file(testing::corpus("n9_d.json"))); }

RatMatrix t_alpha() {
    std::vector<Rational> d{0, 1, 1, 1, 1, 0, 0, 2, 2};
    return RatMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("rational canonical parsing") {
    CHECK(Rational::parse_canonical("3/4") == Rational(3, 4));
    CHECK(Rational::parse_canonical("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse_canonical("2/4"), Error);
    CHECK_THROWS_AS(Rational::parse_canonical("1/1"), Error);
    CHECK_THROWS_AS(Rational::parse_canonical("3/-4"), Error);
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
}

TEST_CASE("nullspace of small matrices") {
    SUBCASE("1x1 zero") {
        auto ns = nullspace_vectors(RatMatrix(1, 1));
        REQUIRE(ns.size() == 1);
        CHECK(ns[0] == RatVector{1});
    }
    SUBCASE("identity") { CHECK(nullspace_vectors(RatMatrix::identity(3)).empty()); }
    SUBCASE("heisenberg row") {
        auto m = RatMatrix::from_rows({{1, 1, -1}});
        auto ns = nullspace_vectors(m);
        REQUIRE(ns.size() == 2);
        for (const auto& v : ns) CHECK(v[0] + v[1] == v[2]);
        CHECK(ns[0] == RatVector{1, 0, 1});
        CHECK(ns[1] == RatVector{0, 1, 1});
    }
}

TEST_CASE("rank of basic matrices") {
    CHECK(rank(RatMatrix(4, 5)) == 0);
    CHECK(rank(RatMatrix::identity(6)) == 6);
    auto m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    CHECK(rank(SparseMatrix::from_dense(m)) == 2);
}

TEST_CASE("rank plus nullity equals column count on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3), shape(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = shape(rng), c = shape(rng);
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3) m(i, j) = dist(rng);
        auto ns = nullspace_vectors(m);
        CHECK(rank(m) + ns.size() == c);
        CHECK(rank(m) == oracle::rank(testing::to_mat(m)));
        for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("solve returns a solution or nothing") {
    auto m = RatMatrix::from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(solve(m, RatVector{1, 2}).has_value());
    auto x = solve(m, RatVector{3, 3});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == RatVector{3, 3});
}

TEST_CASE("subspace membership and equality") {
    auto s = Subspace::span(3, {{1, 0, 1}, {0, 1, 1}});
    CHECK(s.dim() == 2);
    CHECK(s.contains(RatVector{2, 3, 5}));
    CHECK_FALSE(s.contains(RatVector{0, 0, 1}));
    CHECK(s == Subspace::span(3, {{1, 1, 2}, {1, -1, 0}}));
}

TEST_CASE("nilpotency test") {
    RatMatrix strict(3, 3);
    strict(0, 1) = 1;
    strict(1, 2) = 5;
    strict(0, 2) = -2;
    CHECK(is_nilpotent_matrix(strict));
    CHECK_FALSE(is_nilpotent_matrix(RatMatrix::identity(3)));
    CHECK(is_nilpotent_matrix(n9_d()));
}

TEST_CASE("characteristic polynomial and eigenvalues") {
    auto m = RatMatrix::from_rows({{2, 1}, {0, 3}});
    auto p = characteristic_polynomial(m);
    CHECK(p.coeffs() == std::vector<Rational>{6, -5, 1});
    CHECK(rational_eigenvalues(m) == std::vector<Rational>{2, 3});
    auto rot = RatMatrix::from_rows({{0, -1}, {1, 0}});
    CHECK_THROWS_AS(rational_eigenvalues(rot), Error);
}

TEST_CASE("jordan chevalley splitting") {
    SUBCASE("diagonal") {
        auto m = RatMatrix::diagonal(std::vector<Rational>{1, 2, 2});
        auto jc = jordan_chevalley(m);
        CHECK(jc.semisimple == m);
        CHECK(jc.nilpotent.is_zero());
    }
    SUBCASE("nilpotent block") {
        RatMatrix m(3, 3);
        m(0, 1) = 1;
        m(1, 2) = 1;
        auto jc = jordan_chevalley(m);
        CHECK(jc.semisimple.is_zero());
        CHECK(jc.nilpotent == m);
    }
    SUBCASE("t_alpha + d on N9") {
        auto jc = jordan_chevalley(t_alpha() + n9_d());
        CHECK(jc.semisimple == t_alpha());
        CHECK(jc.nilpotent == n9_d());
    }
    SUBCASE("non-diagonal semisimple part") {
        // [[1,1],[0,2]] is already semisimple with distinct eigenvalues
        auto m = RatMatrix::from_rows({{1, 1}, {0, 2}});
        auto jc = jordan_chevalley(m);
        CHECK(jc.semisimple == m);
        CHECK(jc.nilpotent.is_zero());
    }
}

TEST_CASE("exponential of nilpotent matrices") {
    CHECK(exp_nilpotent(RatMatrix(3, 3)) == RatMatrix::identity(3));
    RatMatrix e12(2, 2);
    e12(0, 1) = 1;
    CHECK(exp_nilpotent(e12) == RatMatrix::identity(2) + e12);
    auto d = n9_d();
    CHECK(exp_nilpotent(d) * exp_nilpotent(-d) == RatMatrix::identity(9));
    CHECK_THROWS_AS(exp_nilpotent(RatMatrix::identity(2)), Error);
}

TEST_CASE("inverse") {
    auto m = RatMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(m * inverse(m) == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RatMatrix::from_rows({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("rational roots") {
    // (2x - 1)(x + 3) = 2x^2 + 5x - 3
    Poly p({Rational(-3), Rational(5), Rational(2)});
    CHECK(rational_roots(p) == std::vector<Rational>{-3, Rational(1, 2)});
    // repeated and zero roots collapse
    Poly sq = p * p * Poly({Rational(0), Rational(1)});
    CHECK(rational_roots(sq) == std::vector<Rational>{-3, 0, Rational(1, 2)});
    CHECK_THROWS_AS(rational_roots(p * Poly({Rational(1), Rational(0), Rational(1)})), Error);
    CHECK_THROWS_AS(rational_roots(Poly({Rational(-2), Rational(0), Rational(1)})), Error);
    // large but rational spectrum
    Poly big({Rational(-1000003), Rational(1)});
    CHECK(rational_roots(big * Poly({Rational(7, 3), Rational(1)})) ==
          std::vector<Rational>{Rational(-7, 3), 1000003});
}
