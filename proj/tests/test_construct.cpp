#include "doctest.h"
#include "helpers.hpp"
#include "torusforge/deriv.hpp"
#include "torusforge/dld.hpp"

using namespace torusforge;
using testing::corpus;
using testing::load;

namespace {

CommAssocAlgebra n2() { return parse_comm_assoc(read_file(corpus("n2.json"))); }

}  // namespace

TEST_CASE("commutative associative input is checked") {
    CHECK(n2().dim() == 3);
    // (y1 y1) y2 = y2 y2 = y1 but y1 (y1 y2) = y1 y1 = y2
    std::map<std::pair<std::size_t, std::size_t>, TermList> prod;
    prod[{0, 0}] = TermList{{1, 1}};
    prod[{0, 1}] = TermList{{1, 0}};
    prod[{1, 1}] = TermList{{1, 0}};
    CHECK_THROWS_AS(CommAssocAlgebra("bad", {"y1", "y2"}, prod), Error);
}

TEST_CASE("tensor current") {
    auto n1 = load("n1.alg");
    auto t = tensor_current(n1, n2(), "n1n2");
    CHECK(t.dim() == 24);
    CHECK(validate(t).valid());
    auto a = *t.index_of("x1*y1"), b = *t.index_of("x2*y2"), c = *t.index_of("x3*y3");
    CHECK(t.bracket(a, b) == TermList{{1, c}});
    CHECK(serialize_algebra(t) == read_file(corpus("n1n2.alg")));

    CommAssocAlgebra trivial("c", {"u"}, {});
    auto ab = tensor_current(n1, trivial);
    CHECK(ab.dim() == n1.dim());
    CHECK(ab.table().empty());
}

TEST_CASE("ideal closure") {
    auto h = testing::heisenberg();
    CHECK(ideal_closure(h, {unit_vector(3, 2)}).dim() == 1);
    auto c = ideal_closure(h, {unit_vector(3, 0)});
    CHECK(c == Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}));

    auto t = load("n1n2.alg");
    auto gens = parse_vectors(read_file(corpus("n1n2_ideal.json")), t);
    auto ideal = ideal_closure(t, gens);
    CHECK(ideal.dim() == 4);
    CHECK(is_ideal(t, ideal));
}

TEST_CASE("quotients") {
    auto h = testing::heisenberg();
    auto same = quotient(h, Subspace(3), "h3");
    CHECK(same.table() == h.table());
    auto q = quotient(h, center(h));
    CHECK(q.dim() == 2);
    CHECK(q.table().empty());
    CHECK_THROWS_AS(quotient(h, Subspace::span(3, {unit_vector(3, 0)})), Error);

    auto t = load("n1n2.alg");
    auto ideal = ideal_closure(t, parse_vectors(read_file(corpus("n1n2_ideal.json")), t));
    auto n3 = quotient(t, ideal, "n3");
    CHECK(n3.dim() == 20);
    CHECK(is_nilpotent(n3));
    CHECK(serialize_algebra(n3) == read_file(corpus("n3.alg")));
}

TEST_CASE("assembling a semidirect sum") {
    auto n3 = load("n3.alg"), n4 = load("n4.alg");
    auto action = parse_cross_action(read_file(corpus("n3_n4_action.json")), n3, n4);
    CHECK(action.size() == 9);
    auto n28 = assemble(n3, n4, action, {}, "n28");
    CHECK(n28.dim() == 28);
    CHECK(validate(n28).valid());
    CHECK(serialize_algebra(n28) == read_file(corpus("n28.alg")));

    auto direct = assemble(n3, n4, {});
    CHECK(direct.dim() == 28);
    CHECK(direct.table().size() == n3.table().size() + n4.table().size());

    // acting by the identity is not a derivation of h3
    auto h = testing::heisenberg();
    Algebra line("line", AlgebraKind::Lie, {"z"});
    CrossAction bad{{0, 0, TermList{{1, 0}}}, {0, 1, TermList{{1, 1}}}, {0, 2, TermList{{1, 2}}}};
    try {
        assemble(line, h, bad);
        FAIL("expected a Jacobi failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::JacobiFailure);
    }
}

TEST_CASE("semidirect by derivations") {
    auto n9 = load("n9.alg");
    auto torus = parse_matrix_list(read_file(corpus("n9_torus.json")));
    auto tilde = parse_matrix_list(read_file(corpus("n9_torus_tilde.json")));
    auto names = complement_names(n9, 2, "x");
    auto r1 = semidirect_by_derivations(n9, torus, names, "R1");
    auto r2 = semidirect_by_derivations(n9, tilde, names, "R2");
    for (const auto* r : {&r1, &r2}) {
        CHECK(r->dim() == 11);
        CHECK(validate(*r).valid());
        CHECK(is_solvable(*r));
        CHECK_FALSE(is_nilpotent(*r));
        for (std::size_t i = 0; i < 9; ++i) CHECK(r->basis_name(i) == n9.basis_name(i));
        CHECK(leading_subalgebra(*r, 9).table() == n9.table());
    }
    CHECK(semidirect_by_derivations(n9, {}, {}) == n9);

    auto d = parse_matrix(read_file(corpus("n9_d.json")));
    auto not_der = RatMatrix::identity(9);
    CHECK_THROWS_AS(semidirect_by_derivations(n9, {not_der}, {"x"}), Error);
    CHECK(is_derivation(n9, d));
    try {
        semidirect_by_derivations(n9, {torus[0], left_multiplication(n9, 1)}, {"x", "y"});
        FAIL("expected non-commuting maps to be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCommuting);
    }
    // the complement acts by the given maps
    for (std::size_t k = 0; k < 2; ++k) {
        auto ad = r2.ad(9 + k).block(0, 0, 9, 9);
        CHECK(ad == tilde[k]);
    }
}

TEST_CASE("complement names avoid collisions") {
    Algebra a("a", AlgebraKind::Lie, {"t1", "e2"});
    auto names = complement_names(a, 2);
    CHECK(names == std::vector<std::string>{"t1'", "t2"});
}
