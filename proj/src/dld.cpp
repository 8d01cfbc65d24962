#include "torusforge/dld.hpp"

#include "torusforge/construct.hpp"
#include "torusforge/deriv.hpp"
#include "torusforge/error.hpp"
#include "torusforge/exactla.hpp"

namespace torusforge {

DldReport dld_check(const Algebra& a) {
    DldReport rep;
    const std::size_t n = a.dim();
    Torus t = diagonal_torus(a);
    rep.torus_dim = t.dim();
    auto der = derivation_space(a).all();

    Subspace torus_span(n), diag_span(n);
    for (const auto& m : t.basis) torus_span.add(m.diagonal_entries());
    for (std::size_t k = 0; k < der.size(); ++k) {
        RatVector dg = der[k].diagonal_entries();
        if (!rep.i_non_derivation && !is_derivation(a, RatMatrix::diagonal(dg), 0)) rep.i_non_derivation = k;
        diag_span.add(dg);
    }
    rep.diagonal_span_dim = diag_span.dim();
    rep.condition_i = !rep.i_non_derivation && diag_span == torus_span;

    RootDecomposition rd = root_decomposition(a, t);
    for (std::size_t w = 0; w < rd.roots.size(); ++w) {
        const auto& idx = rd.spaces[w];
        if (idx.size() < 2) continue;
        std::optional<BlockWitness> wit;
        for (std::size_t k = 0; k < der.size() && !wit; ++k)
            for (auto r : idx) {
                for (auto c : idx)
                    if (r != c && !der[k](r, c).is_zero()) {
                        wit = BlockWitness{k, rd.roots[w], r, c, der[k](r, c)};
                        break;
                    }
                if (wit) break;
            }
        if (wit) rep.ii_witnesses.push_back(*wit);
    }
    rep.condition_ii = rep.ii_witnesses.empty();

    for (std::size_t i = 0; i < n; ++i)
        if (is_zero(rd.root_of[i])) rep.zero_root_indices.push_back(i);
    rep.condition_iii = rep.zero_root_indices.empty();
    return rep;
}

ExtensionWitness build_extension(const Algebra& a, const std::vector<RatMatrix>& torus) {
    auto names = complement_names(a, torus.size());
    Algebra r = semidirect_by_derivations(a, torus, names, a.name() + "_ext");
    return ExtensionWitness{std::move(r), a.dim(), names, Torus{torus}};
}

ExtensionWitness build_maximal_extension(const Algebra& a) {
    Torus t = diagonal_torus(a);
    if (t.dim() == 0) throw Error(ErrorCode::ZeroTorus, "diagonal torus is zero; no extension");
    auto names = complement_names(a, t.dim());
    Algebra r = semidirect_by_derivations(a, t.basis, names, "R_" + a.name());
    return ExtensionWitness{std::move(r), a.dim(), names, std::move(t)};
}

Algebra leading_subalgebra(const Algebra& a, std::size_t m) {
    if (m > a.dim()) throw Error(ErrorCode::DimensionMismatch, "nilradical dimension exceeds algebra dimension");
    std::vector<std::string> even, odd;
    for (std::size_t i = 0; i < m; ++i) (a.parity(i) ? odd : even).push_back(a.basis_name(i));
    if (!odd.empty() && m < a.even_dim())
        throw Error(ErrorCode::PreconditionFailed, "leading block must respect the parity ordering");
    Algebra n(a.name() + "_N", a.kind(), even, odd);
    for (const auto& [key, value] : a.table()) {
        if (key.first >= m || key.second >= m) continue;
        TermList v;
        for (const auto& t : value) {
            if (t.index >= m) throw Error(ErrorCode::NotAnIdeal, "leading block is not a subalgebra");
            v.push_back(t);
        }
        n.set_bracket(key.first, key.second, v);
    }
    return n;
}

namespace {

RatMatrix restricted_ad(const Algebra& r, std::size_t x, std::size_t m) {
    return r.ad(x).block(0, 0, m, m);
}

}  // namespace

NilradicalReport verify_nilradical(const Algebra& r, std::size_t m) {
    NilradicalReport rep;
    const std::size_t n = r.dim();
    if (m > n) throw Error(ErrorCode::DimensionMismatch, "nilradical dimension exceeds algebra dimension");
    std::vector<RatVector> lead;
    for (std::size_t i = 0; i < m; ++i) lead.push_back(unit_vector(n, i));
    Subspace ns = Subspace::span(n, lead);
    rep.is_ideal = is_ideal(r, ns);
    if (!rep.is_ideal) {
        rep.diagnosis = "leading block is not an ideal";
        return rep;
    }
    Algebra nil = leading_subalgebra(r, m);
    rep.nilpotent = is_nilpotent(nil);
    rep.solvable = is_solvable(r);
    std::vector<RatMatrix> family;
    for (std::size_t x = m; x < n; ++x) family.push_back(restricted_ad(r, x, m));
    rep.nil_independent = nil_independent(nil, family);
    if (!rep.nilpotent)
        rep.diagnosis = "leading block is not nilpotent";
    else if (!rep.solvable)
        rep.diagnosis = "algebra is not solvable";
    else if (!rep.nil_independent)
        rep.diagnosis = "some complement element acts nilpotently";
    return rep;
}

namespace {

// Entries (r, c) at distance k from the diagonal in the triangular orientation.
struct Orientation {
    bool lower;
    long distance(std::size_t r, std::size_t c) const {
        return lower ? static_cast<long>(r) - static_cast<long>(c) : static_cast<long>(c) - static_cast<long>(r);
    }
};

// Basis of span(ms) intersected with matrices vanishing below distance k.
std::vector<RatMatrix> restrict_to_level(const std::vector<RatMatrix>& ms, const Orientation& o, long k) {
    if (ms.empty()) return {};
    const std::size_t n = ms.front().rows();
    SparseMatrix sys(0, ms.size());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (o.distance(r, c) >= k) continue;
            SparseMatrix::Row row;
            for (std::size_t a = 0; a < ms.size(); ++a)
                if (!ms[a](r, c).is_zero()) row.emplace(a, ms[a](r, c));
            if (!row.empty()) sys.append_row(std::move(row));
        }
    std::vector<RatMatrix> out;
    for (const auto& v : nullspace_vectors(sys)) {
        RatMatrix m(n, n);
        for (std::size_t a = 0; a < ms.size(); ++a)
            if (!v[a].is_zero()) m += ms[a] * v[a];
        out.push_back(std::move(m));
    }
    return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
    throw Error(ErrorCode::InconsistentCorrection, "normalize: " + what);
}

}  // namespace

Normalization normalize_extension(const Algebra& r, std::size_t m) {
    const std::size_t dim = r.dim();
    if (r.is_super()) throw Error(ErrorCode::WrongKind, "normalize_extension expects a Lie algebra");
    auto nr = verify_nilradical(r, m);
    if (!nr) throw Error(ErrorCode::PreconditionFailed, "normalize: " + nr.diagnosis);
    Algebra nil = leading_subalgebra(r, m);
    if (!dld_check(nil).overall())
        throw Error(ErrorCode::PreconditionFailed, "normalize: nilradical is not d-locally diagonalizable");
    Torus torus = diagonal_torus(nil);
    const std::size_t s = dim - m;
    if (torus.dim() != s)
        throw Error(ErrorCode::PreconditionFailed, "normalize: complement dimension differs from the torus dimension");

    std::vector<std::string> names;
    for (std::size_t k = 0; k < dim; ++k) names.push_back(r.basis_name(k));
    RatMatrix p = RatMatrix::identity(dim);
    Algebra cur = r;
    auto transport = [&]() { cur = change_basis(r, p, r.name(), names, dim); };

    // Recombine the complement so that diag(ad x_j |N) = t_j.
    {
        RatMatrix diag_cols(m, s), target(m, s);
        for (std::size_t j = 0; j < s; ++j) {
            diag_cols.set_column(j, restricted_ad(cur, m + j, m).diagonal_entries());
            target.set_column(j, torus.basis[j].diagonal_entries());
        }
        // diag_cols * C = target
        RatMatrix c(s, s);
        for (std::size_t j = 0; j < s; ++j) {
            auto col = solve(diag_cols, target.column(j));
            if (!col) inconsistent("complement diagonals do not span the torus");
            c.set_column(j, *col);
        }
        RatMatrix q = RatMatrix::identity(dim);
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b) q(m + a, m + b) = c(a, b);
        p = p * q;
        transport();
    }

    std::vector<RatMatrix> ads;
    for (std::size_t j = 0; j < s; ++j) ads.push_back(restricted_ad(cur, m + j, m));
    bool all_lower = true, all_upper = true;
    for (const auto& a : ads) {
        all_lower = all_lower && a.transpose().is_upper_triangular();
        all_upper = all_upper && a.is_upper_triangular();
    }
    if (!all_lower && !all_upper) inconsistent("complement does not act triangularly");
    const Orientation orient{all_lower};

    const auto der = derivation_space(nil).even;
    std::vector<RatMatrix> inner;
    for (std::size_t b = 0; b < m; ++b) inner.push_back(nil.ad(b));

    for (long k = 1; k < static_cast<long>(m); ++k) {
        ads.clear();
        for (std::size_t j = 0; j < s; ++j) ads.push_back(restricted_ad(cur, m + j, m));
        // Level-k defect of ad x_j - t_j.
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t rr = 0; rr < m; ++rr)
            for (std::size_t cc = 0; cc < m; ++cc)
                if (orient.distance(rr, cc) == k) cells.emplace_back(rr, cc);
        bool clean = true;
        for (std::size_t j = 0; j < s && clean; ++j)
            for (auto [rr, cc] : cells)
                if (!ads[j](rr, cc).is_zero()) {
                    clean = false;
                    break;
                }
        if (clean) continue;

        auto xs = restrict_to_level(der, orient, k);
        // Shifts v with ad_v |N at level >= k, as coefficient vectors over N.
        std::vector<RatVector> vs;
        {
            auto lvl = restrict_to_level(inner, orient, k);
            Subspace vspace(m);
            // Recover v from ad_v: solve sum_b v_b ad(e_b) = M.
            RatMatrix stack(m * m, m);
            for (std::size_t b = 0; b < m; ++b) stack.set_column(b, flatten(inner[b]));
            for (const auto& mat : lvl) {
                auto v = solve(stack, flatten(mat));
                if (v) vspace.add(*v);
            }
            vs = vspace.basis();
        }
        const std::size_t nx = xs.size(), nv = vs.size();
        // Unknowns: c_a (a < nx), then w_{j,b} for each complement j.
        SparseMatrix sys(0, nx + s * nv);
        RatVector rhs;
        std::vector<RatMatrix> adv;
        for (const auto& v : vs) {
            RatMatrix mat(m, m);
            for (std::size_t b = 0; b < m; ++b)
                if (!v[b].is_zero()) mat += inner[b] * v[b];
            adv.push_back(std::move(mat));
        }
        for (std::size_t j = 0; j < s; ++j) {
            const RatMatrix& t = torus.basis[j];
            for (auto [rr, cc] : cells) {
                SparseMatrix::Row row;
                Rational shift = t(rr, rr) - t(cc, cc);
                for (std::size_t a = 0; a < nx; ++a) {
                    Rational v = shift * xs[a](rr, cc);
                    if (!v.is_zero()) row.emplace(a, v);
                }
                for (std::size_t b = 0; b < nv; ++b)
                    if (!adv[b](rr, cc).is_zero()) row.emplace(nx + j * nv + b, adv[b](rr, cc));
                sys.append_row(std::move(row));
                rhs.push_back(-ads[j](rr, cc));
            }
        }
        auto sol = solve(sys, rhs);
        if (!sol) inconsistent("no correction at filtration level " + std::to_string(k));
        RatMatrix x(m, m);
        for (std::size_t a = 0; a < nx; ++a)
            if (!(*sol)[a].is_zero()) x += xs[a] * (*sol)[a];
        RatMatrix phi = exp_nilpotent(x);
        RatMatrix q = RatMatrix::identity(dim);
        for (std::size_t rr = 0; rr < m; ++rr)
            for (std::size_t cc = 0; cc < m; ++cc) q(rr, cc) = phi(rr, cc);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t b = 0; b < nv; ++b) {
                const Rational& w = (*sol)[nx + j * nv + b];
                if (w.is_zero()) continue;
                for (std::size_t rr = 0; rr < m; ++rr) q(rr, m + j) += w * vs[b][rr];
            }
        p = p * q;
        transport();
    }

    for (std::size_t j = 0; j < s; ++j)
        if (restricted_ad(cur, m + j, m) != torus.basis[j]) inconsistent("complement action not diagonalized");

    // Central shifts: c_ij + t_j(v_i) - t_i(v_j) = 0 with v_i in Z(N).
    {
        Subspace z = center(nil);
        const auto& zb = z.basis();
        const std::size_t nz = zb.size();
        SparseMatrix sys(0, s * nz);
        RatVector rhs;
        bool any = false;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j) {
                RatVector c = to_vector(cur.bracket(m + i, m + j), dim);
                for (std::size_t k = m; k < dim; ++k)
                    if (!c[k].is_zero()) inconsistent("complement does not close modulo the nilradical");
                for (std::size_t e = 0; e < m; ++e) {
                    SparseMatrix::Row row;
                    for (std::size_t b = 0; b < nz; ++b) {
                        Rational tv = torus.basis[j](e, e) * zb[b][e];
                        Rational ti = torus.basis[i](e, e) * zb[b][e];
                        if (!tv.is_zero()) row[i * nz + b] += tv;
                        if (!ti.is_zero()) row[j * nz + b] -= ti;
                    }
                    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
                    sys.append_row(std::move(row));
                    rhs.push_back(-c[e]);
                    any = any || !c[e].is_zero();
                }
            }
        if (any) {
            auto sol = solve(sys, rhs);
            if (!sol) inconsistent("complement brackets cannot be absorbed by central shifts");
            RatMatrix q = RatMatrix::identity(dim);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t b = 0; b < nz; ++b) {
                    const Rational& w = (*sol)[i * nz + b];
                    if (w.is_zero()) continue;
                    for (std::size_t e = 0; e < m; ++e) q(e, m + i) += w * zb[b][e];
                }
            p = p * q;
            transport();
        }
    }

    // Final contract.
    for (std::size_t i = m; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (!cur.bracket(i, j).empty()) inconsistent("complement brackets remain");
    for (std::size_t j = 0; j < s; ++j)
        if (restricted_ad(cur, m + j, m) != torus.basis[j]) inconsistent("complement action changed");
    if (leading_subalgebra(cur, m).table() != nil.table()) inconsistent("nilradical table changed");
    if (!is_homomorphism(cur, r, p)) throw std::logic_error("normalize: basis change is not an isomorphism");
    return Normalization{std::move(cur), std::move(p)};
}

OuterDerivations has_outer_derivations(const Algebra& r) {
    std::size_t der = derivation_space(r).dim();
    std::size_t inner = inner_derivations(r).size();
    return {der > inner, der - inner};
}

}  // namespace torusforge
