#include "doctest.h"
#include "helpers.hpp"
#include "torusforge/deriv.hpp"
#include "torusforge/dld.hpp"
#include "torusforge/torus.hpp"

using namespace torusforge;
using testing::corpus;
using testing::load;

namespace {

RatMatrix n9_d() { return parse_matrix(read_file(corpus("n9_d.json"))); }
std::vector<RatMatrix> n9_torus() { return parse_matrix_list(read_file(corpus("n9_torus.json"))); }

}  // namespace

TEST_CASE("derivation space dimensions") {
    CHECK(derivation_space(testing::abelian(3)).dim() == 9);
    CHECK(derivation_space(testing::heisenberg()).dim() == 6);
    for (const char* f : {"n9.alg", "filiform_model_6.alg", "r46_n8.alg", "n4.alg", "n1.alg"}) {
        auto a = load(f);
        INFO(f);
        CHECK(derivation_space(a).dim() == oracle::derivation_dim(testing::to_table(a)));
    }
}

TEST_CASE("every derivation basis element passes the independent Leibniz check") {
    auto n9 = load("n9.alg");
    auto t = testing::to_table(n9);
    for (const auto& d : derivation_space(n9).all()) CHECK(oracle::is_derivation(t, testing::to_mat(d)));
}

TEST_CASE("N9 derivations share one triangular form") {
    auto n9 = load("n9.alg");
    auto der = derivation_space(n9);
    CHECK(der.dim() == 19);
    // images of e_j only involve later basis vectors
    for (const auto& d : der.all()) CHECK(d.transpose().is_upper_triangular());
}

TEST_CASE("derivation check with witnesses") {
    auto n9 = load("n9.alg");
    CHECK(is_derivation(n9, n9_d()));
    CHECK(is_derivation(n9, n9_torus()[0]));
    auto h = testing::heisenberg();
    auto r = is_derivation(h, RatMatrix::identity(3));
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::pair<std::size_t, std::size_t>{0, 1});
    // d[e1,e2] - [d e1, e2] - [e1, d e2] = e3 - 2 e3
    CHECK(r.defect == RatVector{0, 0, -1});
}

TEST_CASE("superderivations") {
    auto s = load("super_small.alg");
    auto der = derivation_space(s);
    auto t = diagonal_torus(s);
    for (const auto& d : t.basis) CHECK(is_derivation(s, d, 0));
    for (const auto& d : der.odd) CHECK(is_derivation(s, d, 1));
    for (std::size_t i = s.even_dim(); i < s.dim(); ++i) CHECK(is_derivation(s, left_multiplication(s, i), 1));
    CHECK(der.odd.size() > 0);
}

TEST_CASE("inner derivations") {
    CHECK(inner_derivations(testing::abelian(4)).empty());
    CHECK(inner_derivations(testing::heisenberg()).size() == 2);
    CHECK(inner_derivations(load("r46_n8.alg")).size() == 9);
    auto n9 = load("n9.alg");
    CHECK(inner_derivations(n9).size() == 9 - center(n9).dim());
}

TEST_CASE("torus centralizer") {
    auto h = testing::heisenberg();
    CHECK(torus_centralizer(h, {}).size() == derivation_space(h).dim());
    auto l7 = testing::filiform(7);
    auto t = diagonal_torus(l7);
    auto c = torus_centralizer(l7, t.basis);
    CHECK(matrix_span(c, 7, 7) == matrix_span(t.basis, 7, 7));

    auto n9 = load("n9.alg");
    auto cn = torus_centralizer(n9, n9_torus());
    CHECK(cn.size() > 2);
    std::vector<RatMatrix> with_d = cn;
    with_d.push_back(n9_d());
    CHECK(matrix_span(with_d, 9, 9).size() == cn.size());
}

TEST_CASE("nil-independence") {
    auto n9 = load("n9.alg");
    auto t = n9_torus();
    CHECK(nil_independent(n9, t));
    CHECK_FALSE(nil_independent(n9, {n9_d()}));
    CHECK_FALSE(nil_independent(n9, {t[0], t[0] + n9_d()}));
    try {
        nil_independent(n9, {RatMatrix::identity(9)});
        FAIL("identity is not a derivation of N9");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDerivation);
    }
}
