#include "torusforge/construct.hpp"

#include <set>

#include "torusforge/deriv.hpp"
#include "torusforge/error.hpp"

namespace torusforge {

CommAssocAlgebra::CommAssocAlgebra(std::string name, std::vector<std::string> basis,
                                   const std::map<std::pair<std::size_t, std::size_t>, TermList>& products)
    : name_(std::move(name)), names_(std::move(basis)), full_(names_.size() * names_.size()) {
    const std::size_t n = dim();
    for (const auto& [key, value] : products) {
        auto [i, j] = key;
        if (i >= n || j >= n) throw Error(ErrorCode::DimensionMismatch, "product index out of range");
        TermList v = to_terms(to_vector(value, n));
        if (!full_[i * n + j].empty() || (i != j && !full_[j * n + i].empty()))
            throw Error(ErrorCode::ParseError, "duplicate product entry");
        full_[i * n + j] = v;
        full_[j * n + i] = v;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RatVector ij_k = product(to_vector(product(i, j), n), unit_vector(n, k));
                RatVector i_jk = product(unit_vector(n, i), to_vector(product(j, k), n));
                if (ij_k != i_jk)
                    throw Error(ErrorCode::ValidationError, "not associative at (" + names_[i] + "," +
                                                                names_[j] + "," + names_[k] + ")");
            }
}

RatVector CommAssocAlgebra::product(const RatVector& u, const RatVector& v) const {
    const std::size_t n = dim();
    RatVector out = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            Rational f = u[i] * v[j];
            for (const auto& t : product(i, j)) out[t.index] += f * t.coeff;
        }
    }
    return out;
}

std::map<std::pair<std::size_t, std::size_t>, TermList> CommAssocAlgebra::table() const {
    std::map<std::pair<std::size_t, std::size_t>, TermList> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j)
            if (!product(i, j).empty()) out[{i, j}] = product(i, j);
    return out;
}

Algebra tensor_current(const Algebra& l, const CommAssocAlgebra& c, const std::string& name) {
    if (l.is_super()) throw Error(ErrorCode::WrongKind, "tensor_current expects a plain Lie algebra");
    const std::size_t m = c.dim();
    std::vector<std::string> names;
    for (const auto& x : l.basis_names())
        for (const auto& y : c.basis_names()) names.push_back(x + "*" + y);
    Algebra out(name.empty() ? l.name() + "*" + c.name() : name, AlgebraKind::Lie, names);
    for (const auto& [key, value] : l.table()) {
        auto [i, j] = key;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                std::size_t u = i * m + a, v = j * m + b;
                if (u >= v) continue;
                TermList terms;
                for (const auto& lt : value)
                    for (const auto& ct : c.product(a, b))
                        terms.push_back({lt.coeff * ct.coeff, lt.index * m + ct.index});
                if (!terms.empty()) out.set_bracket(u, v, terms);
            }
    }
    auto report = validate(out);
    if (!report.valid())
        throw Error(ErrorCode::JacobiFailure, "tensor_current: " + report.violations.front().describe(out));
    return out;
}

Subspace ideal_closure(const Algebra& a, const std::vector<RatVector>& generators) {
    const std::size_t n = a.dim();
    Subspace s(n);
    std::vector<RatVector> queue;
    for (const auto& g : generators)
        if (s.add(g)) queue.push_back(g);
    while (!queue.empty()) {
        RatVector v = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            RatVector w = a.bracket(v, unit_vector(n, i));
            if (s.add(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

Algebra quotient(const Algebra& a, const Subspace& ideal, const std::string& name) {
    const std::size_t n = a.dim();
    if (ideal.ambient() != n) throw Error(ErrorCode::DimensionMismatch, "quotient: ideal ambient dimension");
    if (!is_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient: subspace is not an ideal");
    std::vector<bool> dropped(n, false);
    for (auto p : ideal.pivots()) dropped[p] = true;
    std::vector<std::size_t> kept, pos(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (!dropped[i]) {
            pos[i] = kept.size();
            kept.push_back(i);
        }
    std::vector<std::string> even, odd;
    for (auto i : kept) (a.parity(i) ? odd : even).push_back(a.basis_name(i));
    Algebra out(name.empty() ? a.name() + "/I" : name, a.kind(), even, odd);
    // Kept indices are increasing and parity-sorted, so pos[] is also the index in out.
    for (std::size_t x = 0; x < kept.size(); ++x)
        for (std::size_t y = x; y < kept.size(); ++y) {
            RatVector r = ideal.reduce(to_vector(a.bracket(kept[x], kept[y]), n));
            TermList terms;
            for (std::size_t k = 0; k < n; ++k)
                if (!r[k].is_zero()) terms.push_back({r[k], pos[k]});
            if (!terms.empty()) out.set_bracket(x, y, terms);
        }
    auto report = validate(out);
    if (!report.valid())
        throw Error(ErrorCode::JacobiFailure, "quotient: " + report.violations.front().describe(out));
    return out;
}

std::size_t assembled_index_a(const Algebra& a, const Algebra& b, std::size_t i) {
    return a.parity(i) == 0 ? i : b.even_dim() + i;
}

std::size_t assembled_index_b(const Algebra& a, const Algebra& b, std::size_t j) {
    return b.parity(j) == 0 ? a.even_dim() + j : a.dim() + j;
}

Algebra assemble(const Algebra& a, const Algebra& b, const CrossAction& action,
                 const std::vector<ExtraBracket>& extra, const std::string& name) {
    std::vector<std::string> even = a.even_basis(), odd = a.odd_basis();
    for (const auto& s : b.even_basis()) even.push_back(s);
    for (const auto& s : b.odd_basis()) odd.push_back(s);
    {
        std::set<std::string> seen;
        for (const auto& v : {even, odd})
            for (const auto& s : v)
                if (!seen.insert(s).second) throw Error(ErrorCode::ValidationError, "assemble: duplicate basis name " + s);
    }
    const AlgebraKind kind = (a.is_super() || b.is_super()) ? AlgebraKind::LieSuper : AlgebraKind::Lie;
    Algebra out(name.empty() ? a.name() + "+" + b.name() : name, kind, even, odd);
    auto ia = [&](std::size_t i) { return assembled_index_a(a, b, i); };
    auto ib = [&](std::size_t j) { return assembled_index_b(a, b, j); };
    auto map_terms = [](const TermList& v, auto&& f) {
        TermList out;
        for (const auto& t : v) out.push_back({t.coeff, f(t.index)});
        return out;
    };
    for (const auto& [key, value] : a.table()) out.set_bracket(ia(key.first), ia(key.second), map_terms(value, ia));
    for (const auto& [key, value] : b.table()) out.set_bracket(ib(key.first), ib(key.second), map_terms(value, ib));

    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<RatMatrix> acting(a.dim(), RatMatrix(b.dim(), b.dim()));
    for (const auto& e : action) {
        if (e.acting >= a.dim() || e.acted >= b.dim())
            throw Error(ErrorCode::DimensionMismatch, "assemble: cross action index out of range");
        if (!seen.insert({e.acting, e.acted}).second)
            throw Error(ErrorCode::ParseError, "assemble: duplicate cross action entry");
        out.set_bracket(ia(e.acting), ib(e.acted), map_terms(e.value, ib));
        for (const auto& t : e.value) acting[e.acting](t.index, e.acted) += t.coeff;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto check = is_derivation(b, acting[i], a.parity(i));
        if (!check) {
            std::string where = check.witness ? b.basis_name(check.witness->first) + "," +
                                                    b.basis_name(check.witness->second)
                                              : check.reason;
            throw Error(ErrorCode::JacobiFailure,
                        "assemble: action of " + a.basis_name(i) + " is not a derivation (" + where + ")");
        }
    }
    for (const auto& [i, j, value] : extra) {
        RatVector v = to_vector(out.bracket(i, j), out.dim()) + to_vector(value, out.dim());
        out.set_bracket(i, j, v);
    }
    auto report = validate(out);
    if (!report.valid())
        throw Error(ErrorCode::JacobiFailure, "assemble: " + report.violations.front().describe(out));
    return out;
}

std::vector<std::string> complement_names(const Algebra& n, std::size_t count, const std::string& stem) {
    std::set<std::string> used(n.basis_names().begin(), n.basis_names().end());
    std::vector<std::string> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::string s = stem + std::to_string(k + 1);
        while (used.count(s)) s += "'";
        used.insert(s);
        out.push_back(s);
    }
    return out;
}

Algebra semidirect_by_derivations(const Algebra& n, const std::vector<RatMatrix>& ds,
                                  const std::vector<std::string>& names, const std::string& name) {
    if (names.size() != ds.size()) throw Error(ErrorCode::DimensionMismatch, "semidirect: one name per derivation");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i].rows() != n.dim() || ds[i].cols() != n.dim())
            throw Error(ErrorCode::DimensionMismatch, "semidirect: derivation " + std::to_string(i) + " has wrong shape");
        auto check = is_derivation(n, ds[i], 0);
        if (!check) throw Error(ErrorCode::NotDerivation, "derivation " + std::to_string(i) + ": " + check.reason);
    }
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (!commutator(ds[i], ds[j]).is_zero())
                throw Error(ErrorCode::NotCommuting,
                            "derivations " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
    if (ds.empty()) {
        Algebra out = n;
        if (!name.empty()) out.set_name(name);
        return out;
    }
    Algebra comp("T", AlgebraKind::Lie, names);
    CrossAction action;
    // [n_c, x_i] = D_i(n_c), i.e. [x_i, n_c] = -D_i(n_c).
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t c = 0; c < n.dim(); ++c) {
            TermList v;
            for (std::size_t r = 0; r < n.dim(); ++r)
                if (!ds[i](r, c).is_zero()) v.push_back({-ds[i](r, c), r});
            if (!v.empty()) action.push_back({i, c, v});
        }
    // Assemble lists the first argument first; reorder so N comes first.
    Algebra joined = assemble(comp, n, action, {}, name.empty() ? n.name() + "_ext" : name);
    std::vector<std::string> even = n.even_basis();
    for (const auto& s : names) even.push_back(s);
    Algebra out(joined.name(), n.kind(), even, n.odd_basis());
    std::vector<std::size_t> to_out(joined.dim());
    for (std::size_t k = 0; k < joined.dim(); ++k) to_out[k] = *out.index_of(joined.basis_name(k));
    for (const auto& [key, value] : joined.table()) {
        TermList v;
        for (const auto& t : value) v.push_back({t.coeff, to_out[t.index]});
        out.set_bracket(to_out[key.first], to_out[key.second], v);
    }
    return out;
}

}  // namespace torusforge
