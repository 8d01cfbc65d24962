#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "torusforge/cohom.hpp"
#include "torusforge/deriv.hpp"

using namespace torusforge;
using testing::corpus;
using testing::load;

TEST_CASE("dld on N9 fails (ii) and (iii)") {
    auto n9 = load("n9.alg");
    auto rep = dld_check(n9);
    CHECK(rep.condition_i);
    CHECK_FALSE(rep.condition_ii);
    CHECK_FALSE(rep.condition_iii);
    CHECK(rep.zero_root_indices == std::vector<std::size_t>{0});
    bool alpha_block = false;
    for (const auto& w : rep.ii_witnesses)
        if (w.root == RatVector{1, 0}) {
            alpha_block = true;
            CHECK(w.row >= 1);
            CHECK(w.row <= 4);
            CHECK(w.col >= 1);
            CHECK(w.col <= 4);
        }
    CHECK(alpha_block);
}

TEST_CASE("dld on model filiform passes") {
    for (std::size_t n = 6; n <= 10; ++n) {
        auto rep = dld_check(testing::filiform(n));
        CHECK(rep.overall());
        CHECK(rep.torus_dim == 2);
    }
}

TEST_CASE("dld on the Example 3.3 algebras") {
    auto n28 = dld_check(load("n28.alg"));
    CHECK(n28.condition_i);
    CHECK_FALSE(n28.condition_ii);
    CHECK(n28.condition_iii);
    auto n3 = dld_check(load("n3.alg"));
    CHECK(n3.torus_dim == 4);
    CHECK_FALSE(n3.condition_ii);
    CHECK(n3.condition_iii);
    // diagonals of Der(N3) span more than the torus
    CHECK_FALSE(n3.condition_i);
    CHECK(n3.diagonal_span_dim > n3.torus_dim);
}

TEST_CASE("maximal extensions") {
    auto n9 = load("n9.alg");
    auto r1 = build_maximal_extension(n9);
    CHECK(r1.algebra.dim() == 11);
    CHECK(validate(r1.algebra).valid());

    auto l8 = build_maximal_extension(testing::filiform(8));
    CHECK(l8.algebra.dim() == 10);
    CHECK(center(l8.algebra).dim() == 0);

    auto ab = build_maximal_extension(testing::abelian(3));
    CHECK(ab.algebra.dim() == 6);
    CHECK(verify_nilradical(ab.algebra, 3).ok());

    Algebra zero_torus("cn", AlgebraKind::Lie, {});
    CHECK_THROWS_AS(build_maximal_extension(zero_torus), Error);
}

TEST_CASE("nilradical verification") {
    auto n9 = load("n9.alg");
    auto t = parse_matrix_list(read_file(corpus("n9_torus.json")));
    auto r1 = semidirect_by_derivations(n9, t, {"x1", "x2"});
    CHECK(verify_nilradical(r1, 9).ok());
    auto tilde = parse_matrix_list(read_file(corpus("n9_torus_tilde.json")));
    auto r2 = semidirect_by_derivations(n9, tilde, {"x1", "x2"});
    CHECK(verify_nilradical(r2, 9).ok());

    auto h = testing::heisenberg();
    Algebra h2("h3b", AlgebraKind::Lie, {"u1", "u2", "u3"});
    h2.set_bracket(0, 1, TermList{{1, 2}});
    auto sum = assemble(h, h2, {});
    auto rep = verify_nilradical(sum, 3);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.diagnosis.empty());

    auto l8 = testing::filiform(8);
    auto full = diagonal_torus(l8);
    auto r_t1 = build_extension(l8, {full.basis[0]});
    CHECK(verify_nilradical(r_t1.algebra, 8).ok());
}

TEST_CASE("normalizing an already normal extension is the identity") {
    auto r = build_maximal_extension(testing::filiform(8)).algebra;
    auto norm = normalize_extension(r, 8);
    CHECK(norm.iso == RatMatrix::identity(10));
    CHECK(serialize_algebra(norm.algebra) == serialize_algebra(r));
}

TEST_CASE("normalization recovers R_T from scrambled bases") {
    auto r = build_maximal_extension(testing::filiform(8)).algebra;
    const auto canonical = serialize_algebra(r);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = testing::scramble_basis(r, 8, rng);
        auto s = change_basis(r, p, r.name(), r.basis_names(), r.even_dim());
        CAPTURE(trial);
        REQUIRE(validate(s).valid());
        auto norm = normalize_extension(s, 8);
        CHECK(serialize_algebra(norm.algebra) == canonical);
        CHECK(is_homomorphism(norm.algebra, s, norm.iso));
        // idempotent on its own output
        CHECK(serialize_algebra(normalize_extension(norm.algebra, 8).algebra) == canonical);
    }
}

TEST_CASE("normalization rejects bad input") {
    auto r1 = build_maximal_extension(load("n9.alg")).algebra;
    CHECK_THROWS_AS(normalize_extension(r1, 9), Error);
}

TEST_CASE("outer derivations") {
    auto l8 = testing::filiform(8);
    auto r_t = build_maximal_extension(l8).algebra;
    CHECK_FALSE(has_outer_derivations(r_t).present);
    auto r_t1 = build_extension(l8, {diagonal_torus(l8).basis[0]}).algebra;
    CHECK(has_outer_derivations(r_t1).present);
    auto ab = has_outer_derivations(testing::abelian(3));
    CHECK(ab.present);
    CHECK(ab.count == 9);
}

TEST_CASE("complete extensions of dld algebras") {
    for (std::size_t n = 6; n <= 10; ++n) {
        auto l = testing::filiform(n);
        auto ext = build_maximal_extension(l);
        CAPTURE(n);
        CHECK(center(ext.algebra).dim() == 0);
        CHECK(derivation_space(ext.algebra).dim() == ext.algebra.dim());
        auto c = torus_centralizer(l, ext.torus.basis);
        CHECK(matrix_span(c, n, n) == matrix_span(ext.torus.basis, n, n));
    }
}
