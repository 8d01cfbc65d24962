#include "torusforge/algebra.hpp"

#include <sstream>

#include "torusforge/error.hpp"
#include "torusforge/exactla.hpp"

namespace torusforge {

std::string to_string(AlgebraKind kind) { return kind == AlgebraKind::Lie ? "lie" : "lie-super"; }

TermList to_terms(const RatVector& v) {
    TermList t;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) t.push_back({v[k], k});
    return t;
}

RatVector to_vector(const TermList& terms, std::size_t dim) {
    RatVector v(dim);
    for (const auto& t : terms) v.at(t.index) += t.coeff;
    return v;
}

Algebra::Algebra(std::string name, AlgebraKind kind, std::vector<std::string> even_basis,
                 std::vector<std::string> odd_basis)
    : name_(std::move(name)), kind_(kind), even_dim_(even_basis.size()) {
    if (kind == AlgebraKind::Lie && !odd_basis.empty())
        throw Error(ErrorCode::GradingError, "plain Lie algebra with odd basis elements");
    names_ = std::move(even_basis);
    names_.insert(names_.end(), odd_basis.begin(), odd_basis.end());
    full_.assign(names_.size() * names_.size(), {});
}

std::vector<std::string> Algebra::even_basis() const {
    return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(even_dim_)};
}

std::vector<std::string> Algebra::odd_basis() const {
    return {names_.begin() + static_cast<std::ptrdiff_t>(even_dim_), names_.end()};
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void Algebra::set_bracket(std::size_t i, std::size_t j, const RatVector& value) {
    set_bracket(i, j, to_terms(value));
}

void Algebra::set_bracket(std::size_t i, std::size_t j, const TermList& value) {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
    TermList v = to_terms(to_vector(value, n));
    if (i > j) {
        // [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]
        Rational s = (parity(i) && parity(j)) ? Rational(1) : Rational(-1);
        for (auto& t : v) t.coeff *= s;
        std::swap(i, j);
    }
    if (v.empty())
        table_.erase({i, j});
    else
        table_[{i, j}] = v;
    rebuild_pair(i, j);
}

void Algebra::rebuild_pair(std::size_t i, std::size_t j) {
    const std::size_t n = dim();
    auto it = table_.find({i, j});
    TermList v = it == table_.end() ? TermList{} : it->second;
    full_[i * n + j] = v;
    if (i != j) {
        Rational s = (parity(i) && parity(j)) ? Rational(1) : Rational(-1);
        for (auto& t : v) t.coeff *= s;
        full_[j * n + i] = v;
    }
}

RatVector Algebra::bracket(const RatVector& u, const RatVector& v) const {
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket: vector length");
    RatVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            Rational c = u[i] * v[j];
            for (const auto& t : full_[i * n + j]) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

RatMatrix Algebra::ad(std::size_t i) const {
    const std::size_t n = dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : full_[j * n + i]) m(t.index, j) += t.coeff;
    return m;
}

RatMatrix Algebra::ad(const RatVector& x) const {
    const std::size_t n = dim();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) m += ad(i) * x[i];
    return m;
}

std::string Violation::describe(const Algebra& a) const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Antisymmetry:
            os << "antisymmetry: [" << a.basis_name(i) << "," << a.basis_name(j) << "] must vanish";
            break;
        case Kind::Grading:
            os << "grading: [" << a.basis_name(i) << "," << a.basis_name(j) << "] leaves its parity";
            break;
        case Kind::Jacobi:
            os << "jacobi: (" << a.basis_name(i) << "," << a.basis_name(j) << "," << a.basis_name(k) << ")";
            break;
    }
    return os.str();
}

RatVector jacobiator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = a.dim();
    auto e = [n](std::size_t x) { return unit_vector(n, x); };
    auto sgn = [&](std::size_t x, std::size_t y) {
        return (a.parity(x) && a.parity(y)) ? Rational(-1) : Rational(1);
    };
    RatVector t1 = a.bracket(e(i), to_vector(a.bracket(j, k), n));
    RatVector t2 = a.bracket(e(j), to_vector(a.bracket(k, i), n));
    RatVector t3 = a.bracket(e(k), to_vector(a.bracket(i, j), n));
    RatVector out(n);
    axpy(out, sgn(i, k), t1);
    axpy(out, sgn(i, j), t2);
    axpy(out, sgn(j, k), t3);
    return out;
}

ValidationReport validate(const Algebra& a) {
    ValidationReport rep;
    const std::size_t n = a.dim();
    for (const auto& [key, terms] : a.table()) {
        auto [i, j] = key;
        if (i == j && a.parity(i) == 0)
            rep.violations.push_back({Violation::Kind::Antisymmetry, i, j, 0, to_vector(terms, n)});
        int target = (a.parity(i) + a.parity(j)) % 2;
        for (const auto& t : terms)
            if (a.parity(t.index) != target) {
                rep.violations.push_back({Violation::Kind::Grading, i, j, 0, to_vector(terms, n)});
                break;
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                RatVector d = jacobiator(a, i, j, k);
                if (!is_zero(d)) rep.violations.push_back({Violation::Kind::Jacobi, i, j, k, d});
            }
    return rep;
}

Subspace whole_space(const Algebra& a) {
    Subspace s(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) s.add(unit_vector(a.dim(), i));
    return s;
}

Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& v) {
    Subspace out(a.dim());
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) out.add(a.bracket(x, y));
    return out;
}

std::vector<Subspace> lower_central_series(const Algebra& a) {
    std::vector<Subspace> chain{whole_space(a)};
    const Subspace all = chain.front();
    while (true) {
        Subspace next = bracket_span(a, chain.back(), all);
        if (next.dim() == chain.back().dim()) break;
        chain.push_back(std::move(next));
        if (chain.back().dim() == 0) break;
    }
    return chain;
}

std::vector<Subspace> derived_series(const Algebra& a) {
    std::vector<Subspace> chain{whole_space(a)};
    while (true) {
        Subspace next = bracket_span(a, chain.back(), chain.back());
        if (next.dim() == chain.back().dim()) break;
        chain.push_back(std::move(next));
        if (chain.back().dim() == 0) break;
    }
    return chain;
}

SeriesReport series(const Algebra& a) {
    SeriesReport r;
    auto lcs = lower_central_series(a);
    auto der = derived_series(a);
    for (const auto& s : lcs) r.lower_central.push_back(s.dim());
    for (const auto& s : der) r.derived.push_back(s.dim());
    r.nilpotent = r.lower_central.back() == 0;
    r.solvable = r.derived.back() == 0;
    if (r.nilpotent) r.nilindex = r.lower_central.size() - 1;
    return r;
}

bool is_nilpotent(const Algebra& a) { return lower_central_series(a).back().dim() == 0; }
bool is_solvable(const Algebra& a) { return derived_series(a).back().dim() == 0; }

Subspace center(const Algebra& a) {
    const std::size_t n = a.dim();
    // z is central iff [z, e_j] = 0 for all j; stack the maps z -> [z, e_j].
    SparseMatrix sys(0, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<SparseMatrix::Row> rows(n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : a.bracket(i, j)) rows[t.index][i] += t.coeff;
        for (auto& r : rows)
            if (!r.empty()) sys.append_row(std::move(r));
    }
    return Subspace::span(n, nullspace_vectors(sys));
}

bool is_ideal(const Algebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    for (const auto& v : s.basis())
        for (std::size_t j = 0; j < n; ++j)
            if (!s.contains(a.bracket(v, unit_vector(n, j)))) return false;
    return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
    for (const auto& u : s.basis())
        for (const auto& v : s.basis())
            if (!s.contains(a.bracket(u, v))) return false;
    return true;
}

std::vector<std::size_t> generators(const Algebra& a) {
    auto lcs = lower_central_series(a);
    if (lcs.back().dim() != 0) throw Error(ErrorCode::NotNilpotent, "generators: algebra is not nilpotent");
    Subspace span = lcs.size() > 1 ? lcs[1] : Subspace(a.dim());
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (span.add(unit_vector(a.dim(), i))) gens.push_back(i);
    return gens;
}

bool super_lie_condition(const Algebra& a) {
    if (!a.is_super()) throw Error(ErrorCode::WrongKind, "super_lie_condition needs a Lie superalgebra");
    const std::size_t n = a.dim();
    Subspace even_even(n), odd_odd(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatVector v = to_vector(a.bracket(i, j), n);
            if (a.parity(i) == 0 && a.parity(j) == 0) even_even.add(v);
            if (a.parity(i) == 1 && a.parity(j) == 1) odd_odd.add(v);
        }
    return even_even.contains(odd_odd);
}

Algebra change_basis(const Algebra& a, const RatMatrix& basis, const std::string& name,
                     const std::vector<std::string>& names, std::size_t even_count) {
    const std::size_t n = a.dim();
    if (basis.rows() != n || basis.cols() != n || names.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "change_basis: shape");
    RatMatrix inv = inverse(basis);
    std::vector<std::string> even(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(even_count));
    std::vector<std::string> odd(names.begin() + static_cast<std::ptrdiff_t>(even_count), names.end());
    Algebra out(name, a.kind(), even, odd);
    auto cols = basis.columns();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i == j && out.parity(i) == 0) continue;
            RatVector v = inv.apply(a.bracket(cols[i], cols[j]));
            if (!is_zero(v)) out.set_bracket(i, j, v);
        }
    return out;
}

bool is_homomorphism(const Algebra& from, const Algebra& to, const RatMatrix& phi) {
    const std::size_t n = from.dim();
    auto cols = phi.columns();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatVector lhs = phi.apply(to_vector(from.bracket(i, j), n));
            RatVector rhs = to.bracket(cols[i], cols[j]);
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace torusforge
