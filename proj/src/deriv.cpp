#include "torusforge/deriv.hpp"

#include "torusforge/error.hpp"

namespace torusforge {

std::vector<RatMatrix> DerivationSpace::all() const {
    std::vector<RatMatrix> v = even;
    v.insert(v.end(), odd.begin(), odd.end());
    return v;
}

std::vector<RatMatrix> derivations_of_parity(const Algebra& a, int parity) {
    const std::size_t n = a.dim();
    // Unknowns: entries d(r, c) with parity(r) = parity(c) + parity.
    std::vector<std::size_t> var_of(n * n, static_cast<std::size_t>(-1));
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.parity(r) == (a.parity(c) + parity) % 2) {
                var_of[r * n + c] = vars.size();
                vars.emplace_back(r, c);
            }
    if (vars.empty()) return {};

    SparseMatrix sys(0, vars.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i == j && a.parity(i) == 0) continue;
            const Rational sign = (a.parity(i) && parity) ? Rational(-1) : Rational(1);
            std::vector<SparseMatrix::Row> rows(n);
            auto add = [&](std::size_t k, std::size_t r, std::size_t c, const Rational& v) {
                std::size_t var = var_of[r * n + c];
                if (var == static_cast<std::size_t>(-1)) return;
                auto& row = rows[k];
                auto [it, ins] = row.emplace(var, v);
                if (!ins) it->second += v;
            };
            // d([e_i, e_j]) = sum_m c_ij^m d(e_m)
            for (const auto& t : a.bracket(i, j))
                for (std::size_t k = 0; k < n; ++k) add(k, k, t.index, t.coeff);
            // - [d e_i, e_j] = - sum_r d(r, i) [e_r, e_j]
            for (std::size_t r = 0; r < n; ++r)
                for (const auto& t : a.bracket(r, j)) add(t.index, r, i, -t.coeff);
            // - sign [e_i, d e_j]
            for (std::size_t r = 0; r < n; ++r)
                for (const auto& t : a.bracket(i, r)) add(t.index, r, j, -sign * t.coeff);
            for (auto& row : rows) {
                std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
                if (!row.empty()) sys.append_row(std::move(row));
            }
        }
    std::vector<RatMatrix> basis;
    for (const auto& v : nullspace_vectors(sys)) {
        RatMatrix m(n, n);
        for (std::size_t k = 0; k < vars.size(); ++k) m(vars[k].first, vars[k].second) = v[k];
        basis.push_back(std::move(m));
    }
    return basis;
}

DerivationSpace derivation_space(const Algebra& a) {
    DerivationSpace d;
    d.even = derivations_of_parity(a, 0);
    if (a.is_super()) d.odd = derivations_of_parity(a, 1);
    return d;
}

DerivationCheck is_derivation(const Algebra& a, const RatMatrix& d, int parity) {
    const std::size_t n = a.dim();
    DerivationCheck res;
    if (d.rows() != n || d.cols() != n) throw Error(ErrorCode::DimensionMismatch, "is_derivation: matrix shape");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!d(r, c).is_zero() && a.parity(r) != (a.parity(c) + parity) % 2) {
                res.ok = false;
                res.reason = "entry (" + a.basis_name(r) + "," + a.basis_name(c) + ") breaks the parity";
                return res;
            }
    auto cols = d.columns();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatVector lhs = d.apply(to_vector(a.bracket(i, j), n));
            RatVector t1 = a.bracket(cols[i], unit_vector(n, j));
            RatVector t2 = a.bracket(unit_vector(n, i), cols[j]);
            const Rational sign = (a.parity(i) && parity) ? Rational(-1) : Rational(1);
            RatVector defect = lhs - t1;
            axpy(defect, -sign, t2);
            if (!is_zero(defect)) {
                res.ok = false;
                res.witness = {i, j};
                res.defect = std::move(defect);
                res.reason = "Leibniz rule fails on (" + a.basis_name(i) + "," + a.basis_name(j) + ")";
                return res;
            }
        }
    return res;
}

RatMatrix left_multiplication(const Algebra& a, std::size_t i) {
    const std::size_t n = a.dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : a.bracket(i, j)) m(t.index, j) += t.coeff;
    return m;
}

std::vector<RatMatrix> matrix_span(const std::vector<RatMatrix>& ms, std::size_t rows, std::size_t cols) {
    Subspace s(rows * cols);
    for (const auto& m : ms) s.add(flatten(m));
    std::vector<RatMatrix> out;
    for (const auto& v : s.basis()) out.push_back(unflatten(v, rows, cols));
    return out;
}

std::vector<RatMatrix> inner_derivations(const Algebra& a) {
    std::vector<RatMatrix> ads;
    for (std::size_t i = 0; i < a.dim(); ++i) ads.push_back(left_multiplication(a, i));
    return matrix_span(ads, a.dim(), a.dim());
}

std::vector<RatMatrix> torus_centralizer(const Algebra& a, const std::vector<RatMatrix>& torus) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < torus.size(); ++k)
        if (!torus[k].is_diagonal() || !is_derivation(a, torus[k], 0))
            throw Error(ErrorCode::NotDerivation,
                        "torus element " + std::to_string(k) + " is not a diagonal derivation");
    std::vector<RatMatrix> der = derivation_space(a).all();

    // Route 1: sum_k c_k [D_k, t] = 0 for every t.
    SparseMatrix sys(0, der.size());
    for (const auto& t : torus) {
        std::vector<RatVector> comm;
        for (const auto& d : der) comm.push_back(flatten(commutator(d, t)));
        for (std::size_t e = 0; e < n * n; ++e) {
            SparseMatrix::Row row;
            for (std::size_t k = 0; k < der.size(); ++k)
                if (!comm[k][e].is_zero()) row.emplace(k, comm[k][e]);
            if (!row.empty()) sys.append_row(std::move(row));
        }
    }
    std::vector<RatMatrix> via_commutator;
    for (const auto& c : nullspace_vectors(sys)) {
        RatMatrix m(n, n);
        for (std::size_t k = 0; k < der.size(); ++k)
            if (!c[k].is_zero()) m += der[k] * c[k];
        via_commutator.push_back(std::move(m));
    }
    auto result = matrix_span(via_commutator, n, n);

    // Route 2: derivations preserving every joint eigenspace of T.
    auto same_root = [&](std::size_t r, std::size_t c) {
        for (const auto& t : torus)
            if (t(r, r) != t(c, c)) return false;
        return true;
    };
    SparseMatrix sys2(0, der.size());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (same_root(r, c)) continue;
            SparseMatrix::Row row;
            for (std::size_t k = 0; k < der.size(); ++k)
                if (!der[k](r, c).is_zero()) row.emplace(k, der[k](r, c));
            if (!row.empty()) sys2.append_row(std::move(row));
        }
    std::vector<RatMatrix> via_roots;
    for (const auto& c : nullspace_vectors(sys2)) {
        RatMatrix m(n, n);
        for (std::size_t k = 0; k < der.size(); ++k)
            if (!c[k].is_zero()) m += der[k] * c[k];
        via_roots.push_back(std::move(m));
    }
    if (matrix_span(via_roots, n, n) != result)
        throw std::logic_error("torus_centralizer: commutator and root-space routes disagree");
    return result;
}

bool nil_independent(const Algebra& a, const std::vector<RatMatrix>& family) {
    // Any common triangular form works; column images below the diagonal are the usual one here.
    bool upper = true, lower = true;
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (!is_derivation(a, family[k], 0))
            throw Error(ErrorCode::NotDerivation, "family element " + std::to_string(k) + " is not a derivation");
        upper = upper && family[k].is_upper_triangular();
        lower = lower && family[k].transpose().is_upper_triangular();
        if (!upper && !lower)
            throw Error(ErrorCode::NotTriangular, "family element " + std::to_string(k) + " breaks the common triangular form");
    }
    Subspace diags(a.dim());
    for (const auto& d : family)
        if (!diags.add(d.diagonal_entries())) return false;
    return true;
}

}  // namespace torusforge
