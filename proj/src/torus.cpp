#include "torusforge/torus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "torusforge/deriv.hpp"
#include "torusforge/error.hpp"

namespace torusforge {

SparseMatrix SSystem::matrix() const {
    SparseMatrix m(0, variables.size());
    for (const auto& r : rows) {
        SparseMatrix::Row row;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) row.emplace(c, Rational(r[c]));
        m.append_row(std::move(row));
    }
    return m;
}

std::size_t SSystem::rank() const { return torusforge::rank(matrix()); }

std::string SSystem::row_string(std::size_t r) const {
    std::string s;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
        long v = rows[r][c];
        if (v == 0) continue;
        if (s.empty())
            s += v < 0 ? "-" : "";
        else
            s += v < 0 ? " - " : " + ";
        long a = v < 0 ? -v : v;
        if (a != 1) s += std::to_string(a);
        s += variables[c];
    }
    return s + " = 0";
}

SSystem build_s_system(const Algebra& a) {
    SSystem s;
    std::size_t e = 0, o = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        s.variables.push_back(a.parity(i) ? "beta" + std::to_string(++o) : "alpha" + std::to_string(++e));
    std::set<std::vector<long>> seen;
    for (const auto& [key, value] : a.table())
        for (const auto& t : value) {
            std::vector<long> row(a.dim(), 0);
            row[key.first] += 1;
            row[key.second] += 1;
            row[t.index] -= 1;
            if (seen.insert(row).second) s.rows.push_back(std::move(row));
        }
    return s;
}

namespace {

RatVector primitive_integer(RatVector v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) l = lcm(l, x.denominator());
    for (auto& x : v) {
        x *= Rational(l);
        g = gcd(g, x.numerator());
    }
    Rational lead;
    for (const auto& x : v)
        if (!x.is_zero()) {
            lead = x;
            break;
        }
    if (g == 0) return v;
    Rational f(mpq_class(mpz_class(lead.sign() < 0 ? -1 : 1), g));
    for (auto& x : v) x *= f;
    return v;
}

}  // namespace

Torus diagonal_torus(const Algebra& a) {
    Torus t;
    for (auto v : nullspace_vectors(build_s_system(a).matrix()))
        t.basis.push_back(RatMatrix::diagonal(primitive_integer(std::move(v))));
    return t;
}

bool graded_lex_less(const Root& a, const Root& b) {
    Rational sa, sb;
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t RootDecomposition::root_index(const Root& r) const {
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (roots[k] == r) return k;
    return static_cast<std::size_t>(-1);
}

bool RootDecomposition::has_zero_root() const {
    for (const auto& r : roots)
        if (is_zero(r)) return true;
    return false;
}

RootDecomposition root_decomposition(const Algebra& a, const Torus& t) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < t.dim(); ++k)
        if (!t.basis[k].is_diagonal() || !is_derivation(a, t.basis[k], 0))
            throw Error(ErrorCode::NotDerivation, "torus element " + std::to_string(k) + " is not a diagonal derivation");
    RootDecomposition rd;
    for (std::size_t i = 0; i < n; ++i) {
        Root r;
        for (const auto& m : t.basis) r.push_back(m(i, i));
        rd.root_of.push_back(std::move(r));
    }
    // Grading check; implied by the derivation property but cheap to confirm.
    for (const auto& [key, value] : a.table())
        for (const auto& term : value)
            if (rd.root_of[key.first] + rd.root_of[key.second] != rd.root_of[term.index])
                throw std::logic_error("root_decomposition: bracket grading violated");

    rd.roots = rd.root_of;
    std::sort(rd.roots.begin(), rd.roots.end(), graded_lex_less);
    rd.roots.erase(std::unique(rd.roots.begin(), rd.roots.end()), rd.roots.end());
    rd.spaces.resize(rd.roots.size());
    for (std::size_t i = 0; i < n; ++i) rd.spaces[rd.root_index(rd.root_of[i])].push_back(i);

    std::vector<std::size_t> gens;
    try {
        gens = generators(a);
    } catch (const Error&) {
        rd.generators_known = false;
    }
    for (auto g : gens) rd.simple.push_back(rd.root_of[g]);
    std::sort(rd.simple.begin(), rd.simple.end(), graded_lex_less);
    rd.simple.erase(std::unique(rd.simple.begin(), rd.simple.end()), rd.simple.end());

    Subspace span(t.dim());
    for (const auto& r : rd.simple)
        if (span.add(r)) rd.primitive.push_back(r);
    if (!rd.primitive.empty()) {
        RatMatrix p = RatMatrix::from_columns(rd.primitive);
        for (const auto& r : rd.roots) {
            auto c = solve(p, r);
            if (!c) {
                rd.lattice_integral = false;
                break;
            }
            for (const auto& x : *c)
                if (!x.is_integer()) rd.lattice_integral = false;
        }
    } else {
        for (const auto& r : rd.roots)
            if (!is_zero(r)) rd.lattice_integral = false;
    }
    return rd;
}

std::size_t rank_of(const Algebra& a) {
    if (!is_nilpotent(a)) throw Error(ErrorCode::NotNilpotent, "rank_of: algebra is not nilpotent");
    return diagonal_torus(a).dim();
}

}  // namespace torusforge
