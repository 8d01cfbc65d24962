#include "torusforge/exactla.hpp"

#include <algorithm>
#include <set>

#include "torusforge/error.hpp"

namespace torusforge {

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw Error(ErrorCode::PreconditionFailed, "matrix is singular");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        Rational p = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
                if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Poly characteristic_polynomial(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        RatMatrix amk = m * mk;
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

namespace {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

// Positive rational multiple of p with coprime integer coefficients; Sturm signs are unchanged.
IntPoly primitive(const Poly& p) {
    mpz_class l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    IntPoly out;
    for (const auto& c : p.coeffs()) {
        out.push_back((c * Rational(l)).numerator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

Poly to_poly(const IntPoly& p) {
    std::vector<Rational> c;
    for (const auto& x : p) c.emplace_back(x);
    return Poly(std::move(c));
}

int sign_at(const IntPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

int sign_changes(const std::vector<IntPoly>& chain, const mpz_class& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Integer roots of a squarefree polynomial inside (lo, hi], located by bisection on Sturm counts.
void integer_roots(const std::vector<IntPoly>& chain, const mpz_class& lo, const mpz_class& hi, int vlo,
                   std::vector<mpz_class>& out) {
    int vhi = sign_changes(chain, hi);
    if (vlo == vhi) return;
    if (hi - lo == 1) {
        if (sign_at(chain[0], hi) == 0) out.push_back(hi);
        return;
    }
    mpz_class mid = lo + (hi - lo) / 2;
    integer_roots(chain, lo, mid, vlo, out);
    integer_roots(chain, mid, hi, sign_changes(chain, mid), out);
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::PreconditionFailed, "roots of the zero polynomial");
    Poly q = squarefree_part(p);
    const int n = q.degree();
    if (n <= 0) return {};
    // y = a_n x turns the cleared-denominator polynomial into a monic integer one,
    // whose rational roots are integers
    mpz_class l = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> c;
    for (const auto& x : q.coeffs()) c.push_back((x * Rational(l)).numerator());
    const mpz_class lead = c.back();
    std::vector<Rational> mc(n + 1);
    mc[n] = Rational(1);
    mpz_class pw = 1, bound = 0;
    for (int k = n - 1; k >= 0; --k) {
        // coefficient of y^k is c_k a_n^{n-1-k}
        mpz_class v = c[k] * pw;
        pw *= lead;
        // Fujiwara: every root satisfies |y| <= 2 max |v_k|^{1/(n-k)}
        mpz_class r;
        mpz_class av = abs(v);
        mpz_root(r.get_mpz_t(), av.get_mpz_t(), static_cast<unsigned long>(n - k));
        r += 1;
        if (r > bound) bound = r;
        mc[k] = Rational(v);
    }
    bound = 2 * bound;
    std::vector<IntPoly> chain{primitive(Poly(mc))};
    chain.push_back(primitive(to_poly(chain[0]).derivative()));
    while (chain.back().size() > 1) {
        Poly r = divmod(to_poly(chain[chain.size() - 2]), to_poly(chain.back())).second;
        if (r.is_zero()) break;
        chain.push_back(primitive(Poly() - r));
    }
    const mpz_class lo = -bound - 1;
    const int vlo = sign_changes(chain, lo);
    if (vlo - sign_changes(chain, bound) < n)
        throw Error(ErrorCode::IrrationalSpectrum, "characteristic polynomial has a non-real root: " + q.str());
    std::vector<mpz_class> ys;
    integer_roots(chain, lo, bound, vlo, ys);
    if (static_cast<int>(ys.size()) < n)
        throw Error(ErrorCode::IrrationalSpectrum, "characteristic polynomial has an irrational factor: " + q.str());
    std::vector<Rational> roots;
    for (const auto& y : ys) roots.emplace_back(mpq_class(y, lead));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> rational_eigenvalues(const RatMatrix& m) {
    if (m.is_upper_triangular() || m.transpose().is_upper_triangular()) {
        std::set<Rational> s;
        for (const auto& d : m.diagonal_entries()) s.insert(d);
        return {s.begin(), s.end()};
    }
    return rational_roots(characteristic_polynomial(m));
}

bool is_nilpotent_matrix(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "nilpotency of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return true;
    // m^(2^k) with 2^k >= n
    RatMatrix p = m;
    std::size_t e = 1;
    while (e < n && !p.is_zero()) {
        p = p * p;
        e *= 2;
    }
    return p.is_zero();
}

bool is_semisimple(const RatMatrix& m) {
    Poly q = squarefree_part(characteristic_polynomial(m));
    return q(m).is_zero();
}

JordanChevalley jordan_chevalley(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "Jordan-Chevalley of non-square matrix");
    rational_eigenvalues(m);  // throws on irrational spectrum
    const std::size_t n = m.rows();
    Poly q = squarefree_part(characteristic_polynomial(m));
    Poly dq = q.derivative();
    RatMatrix s = m;
    for (std::size_t iter = 0; iter <= n + 1; ++iter) {
        RatMatrix qs = q(s);
        if (qs.is_zero()) return {s, m - s};
        s = s - qs * inverse(dq(s));
    }
    throw Error(ErrorCode::PreconditionFailed, "Newton iteration for the semisimple part did not converge");
}

RatMatrix exp_nilpotent(const RatMatrix& d) {
    if (!d.is_square() || !is_nilpotent_matrix(d))
        throw Error(ErrorCode::NotNilpotent, "exp_nilpotent: matrix is not nilpotent");
    const std::size_t n = d.rows();
    RatMatrix sum = RatMatrix::identity(n), term = RatMatrix::identity(n);
    for (long k = 1; k <= static_cast<long>(n); ++k) {
        term = term * d * Rational(1, k);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

}  // namespace torusforge
