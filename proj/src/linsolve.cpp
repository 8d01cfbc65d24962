#include "torusforge/linsolve.hpp"

#include <algorithm>

#include "torusforge/error.hpp"

namespace torusforge {

SparseMatrix SparseMatrix::from_dense(const RatMatrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) s.rows_[r].emplace(c, m(r, c));
    return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
    if (v.is_zero()) return;
    auto& row = rows_.at(r);
    auto [it, inserted] = row.emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

std::size_t SparseMatrix::append_row(Row row) {
    rows_.push_back(std::move(row));
    return rows_.size() - 1;
}

RatMatrix SparseMatrix::to_dense() const {
    RatMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) m(r, c) = v;
    return m;
}

bool SparseMatrix::is_zero() const {
    for (const auto& row : rows_)
        if (!row.empty()) return false;
    return true;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw Error(ErrorCode::DimensionMismatch, "sparse product");
    SparseMatrix p(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto& out = p.rows_[i];
        for (const auto& [k, av] : a.rows_[i])
            for (const auto& [j, bv] : b.rows_[k]) {
                auto [it, inserted] = out.emplace(j, av * bv);
                if (!inserted) it->second += av * bv;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return p;
}

RowEchelon::IntRow RowEchelon::to_primitive(const SparseMatrix::Row& row) {
    IntRow out;
    mpz_class l = 1;
    for (const auto& [c, v] : row)
        if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        if (v.is_zero()) continue;
        mpz_class x = v.numerator() * (l / v.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        out.emplace_back(c, std::move(x));
    }
    if (g > 1)
        for (auto& [c, x] : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// r <- a*r - b*p, then strip content and normalise the leading sign.
IntRow combine(const IntRow& r, const mpz_class& a, const IntRow& p, const mpz_class& b) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            mpz_class v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    mpz_class g = 0;
    for (const auto& [c, x] : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& [c, x] : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace

bool RowEchelon::insert(const SparseMatrix::Row& row) {
    IntRow r = to_primitive(row);
    while (!r.empty()) {
        std::size_t lead = r.front().first;
        if (lead >= cols_) throw Error(ErrorCode::DimensionMismatch, "row wider than system");
        const auto& piv = by_pivot_[lead];
        if (!piv) {
            if (r.front().second < 0)
                for (auto& [c, x] : r) x = -x;
            by_pivot_[lead] = std::move(r);
            ++rank_;
            return true;
        }
        const mpz_class& p = piv->front().second;
        mpz_class a = r.front().second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
        r = combine(r, p / g, *piv, a / g);
    }
    return false;
}

bool RowEchelon::insert(const RatVector& row) {
    SparseMatrix::Row s;
    for (std::size_t c = 0; c < row.size(); ++c)
        if (!row[c].is_zero()) s.emplace(c, row[c]);
    return insert(s);
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
    std::vector<std::size_t> p;
    for (std::size_t c = 0; c < cols_; ++c)
        if (by_pivot_[c]) p.push_back(c);
    return p;
}

std::vector<std::pair<std::size_t, SparseMatrix::Row>> RowEchelon::reduced_rows() const {
    std::vector<std::pair<std::size_t, SparseMatrix::Row>> rows;
    std::vector<std::size_t> slot(cols_, static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!by_pivot_[c]) continue;
        const auto& ir = *by_pivot_[c];
        Rational lead(ir.front().second);
        SparseMatrix::Row row;
        for (const auto& [col, x] : ir) row.emplace(col, Rational(x) / lead);
        slot[c] = rows.size();
        rows.emplace_back(c, std::move(row));
    }
    for (std::size_t k = rows.size(); k-- > 0;) {
        const std::size_t p = rows[k].first;
        const auto& prow = rows[k].second;
        for (std::size_t i = 0; i < k; ++i) {
            auto& row = rows[i].second;
            auto it = row.find(p);
            if (it == row.end()) continue;
            Rational f = it->second;
            for (const auto& [c, v] : prow) {
                auto [jt, ins] = row.emplace(c, -f * v);
                if (!ins) {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
        }
    }
    return rows;
}

std::size_t rank(const SparseMatrix& m) {
    RowEchelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.rank();
}

std::size_t rank(const RatMatrix& m) { return rank(SparseMatrix::from_dense(m)); }

std::vector<RatVector> nullspace_vectors(const SparseMatrix& m) {
    const std::size_t n = m.cols();
    // Reverse column order so that elimination pivots on the rightmost columns.
    RowEchelon e(n);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseMatrix::Row rev;
        for (const auto& [c, v] : m.row(r)) rev.emplace(n - 1 - c, v);
        e.insert(rev);
    }
    auto rows = e.reduced_rows();
    std::vector<bool> is_pivot(n, false);
    for (const auto& [p, row] : rows) is_pivot[p] = true;

    std::vector<RatVector> basis;
    // Free reversed columns in descending order == original columns ascending.
    for (std::size_t f = n; f-- > 0;) {
        if (is_pivot[f]) continue;
        RatVector v(n);
        v[n - 1 - f] = 1;
        for (const auto& [p, row] : rows) {
            auto it = row.find(f);
            if (it != row.end()) v[n - 1 - p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVector> nullspace_vectors(const RatMatrix& m) {
    return nullspace_vectors(SparseMatrix::from_dense(m));
}

RatMatrix nullspace(const RatMatrix& m) {
    return RatMatrix::from_columns(nullspace_vectors(m), m.cols());
}

std::optional<RatVector> solve(const SparseMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs size");
    const std::size_t n = m.cols();
    RowEchelon e(n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseMatrix::Row row = m.row(r);
        if (!b[r].is_zero()) row.emplace(n, b[r]);
        e.insert(row);
    }
    RatVector x(n);
    for (const auto& [p, row] : e.reduced_rows()) {
        if (p == n) return std::nullopt;
        auto it = row.find(n);
        if (it != row.end()) x[p] = it->second;
    }
    return x;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    return solve(SparseMatrix::from_dense(m), b);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RatVector>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.add(v);
    return s;
}

RatVector Subspace::reduce(const RatVector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace: vector size");
    RatVector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Rational f = r[pivots_[k]];
        if (!f.is_zero()) axpy(r, -f, basis_[k]);
    }
    return r;
}

bool Subspace::add(const RatVector& v) {
    RatVector r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p == r.size()) return false;
    Rational lead = r[p];
    for (auto& x : r) x /= lead;
    for (auto& row : basis_) {
        Rational f = row[p];
        if (!f.is_zero()) axpy(row, -f, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

}  // namespace torusforge
