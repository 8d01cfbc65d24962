#pragma once

#include <random>
#include <string>

#include "oracles.hpp"
#include "torusforge/error.hpp"
#include "torusforge/algebra.hpp"
#include "torusforge/algfile.hpp"
#include "torusforge/construct.hpp"

namespace testing {

inline std::string corpus(const std::string& name) { return std::string(TORUSFORGE_CORPUS_DIR) + "/" + name; }

inline torusforge::Algebra load(const std::string& name) { return torusforge::load_algebra(corpus(name)); }

inline oracle::Table to_table(const torusforge::Algebra& a) {
    oracle::Table t(a.dim());
    for (const auto& [key, value] : a.table())
        for (const auto& term : value) t.set(key.first, key.second, term.index, term.coeff);
    return t;
}

inline oracle::Mat to_mat(const torusforge::RatMatrix& m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

inline torusforge::Algebra heisenberg() {
    torusforge::Algebra a("h3", torusforge::AlgebraKind::Lie, {"e1", "e2", "e3"});
    a.set_bracket(0, 1, torusforge::TermList{{1, 2}});
    return a;
}

inline torusforge::Algebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    return torusforge::Algebra("abelian", torusforge::AlgebraKind::Lie, names);
}

/// [e1, e_i] = e_{i+1} for 2 <= i <= n-1.
inline torusforge::Algebra filiform(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    torusforge::Algebra a("L" + std::to_string(n), torusforge::AlgebraKind::Lie, names);
    for (std::size_t i = 1; i + 1 < n; ++i) a.set_bracket(0, i, torusforge::TermList{{1, i + 1}});
    return a;
}

/// Random unitriangular integer matrix (entries in [-2, 2] below the diagonal).
inline torusforge::RatMatrix random_unitriangular(std::size_t n, std::mt19937& rng, bool lower = true) {
    std::uniform_int_distribution<int> dist(-2, 2);
    auto m = torusforge::RatMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (lower ? r > c : r < c) m(r, c) = dist(rng);
    return m;
}

inline torusforge::Algebra perturb(const torusforge::Algebra& a, std::mt19937& rng, const std::string& name) {
    auto p = random_unitriangular(a.dim(), rng, rng() % 2 == 0);
    return torusforge::change_basis(a, p, name, a.basis_names(), a.even_dim());
}

}  // namespace testing

#include "torusforge/dld.hpp"
#include "torusforge/exactla.hpp"

namespace testing {

/// Rewrites an extension N + Q in a scrambled basis: the N-part is moved by
/// exp(ad_u)|_N for a random u in N, and each complement vector picks up a
/// random element of N^2. Returns the change-of-basis matrix used.
inline torusforge::RatMatrix scramble_basis(const torusforge::Algebra& r, std::size_t m, std::mt19937& rng) {
    using namespace torusforge;
    std::uniform_int_distribution<int> dist(-2, 2);
    const std::size_t n = r.dim();
    RatVector u(n);
    for (std::size_t i = 0; i < m; ++i) u[i] = dist(rng);
    RatMatrix ad = r.ad(u).block(0, 0, m, m);
    RatMatrix auto_n = exp_nilpotent(ad);
    Algebra nil = leading_subalgebra(r, m);
    auto sq = bracket_span(nil, whole_space(nil), whole_space(nil));
    RatMatrix p = RatMatrix::identity(n);
    for (std::size_t r0 = 0; r0 < m; ++r0)
        for (std::size_t c = 0; c < m; ++c) p(r0, c) = auto_n(r0, c);
    for (std::size_t c = m; c < n; ++c)
        for (const auto& b : sq.basis()) {
            Rational s = dist(rng);
            for (std::size_t i = 0; i < m; ++i) p(i, c) += s * b[i];
        }
    return p;
}

inline torusforge::Algebra scramble(const torusforge::Algebra& r, std::size_t m, std::mt19937& rng) {
    auto p = scramble_basis(r, m, rng);
    return torusforge::change_basis(r, p, r.name(), r.basis_names(), r.even_dim());
}

}  // namespace testing
