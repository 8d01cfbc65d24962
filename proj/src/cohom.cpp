#include "torusforge/cohom.hpp"

#include <cstdlib>

#include "torusforge/deriv.hpp"
#include "torusforge/dld.hpp"
#include "torusforge/error.hpp"
#include "torusforge/torus.hpp"

namespace torusforge {

std::optional<std::size_t> dimension_guard(unsigned k) {
    if (const char* env = std::getenv("TORUSFORGE_MAX_DIM"); env && *env) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::size_t>(v);
    }
    if (k == 2) return 24;
    if (k == 3) return 14;
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t n) {
    // Lexicographic rank of a k-subset of {0..n-1}.
    const std::size_t k = tuple.size();
    mpz_class idx = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = (i == 0 ? 0 : prev + 1); v < tuple[i]; ++v) idx += binomial(n - v - 1, k - i - 1);
        prev = tuple[i];
    }
    return idx.get_ui();
}

SparseMatrix cochain_differential(const Algebra& a, unsigned k) {
    const std::size_t n = a.dim();
    const auto rows_t = tuples(n, k + 1);
    const std::size_t cols = binomial(n, k).get_ui() * n;
    SparseMatrix d(0, cols);
    for (const auto& big : rows_t) {
        std::vector<SparseMatrix::Row> out(n);
        auto put = [&](std::size_t b, std::size_t col, const Rational& v) {
            auto [it, ins] = out[b].emplace(col, v);
            if (!ins) it->second += v;
        };
        // sum_i (-1)^i [x_i, c(..x_i omitted..)]
        for (std::size_t i = 0; i <= k; ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t q = 0; q <= k; ++q)
                if (q != i) rest.push_back(big[q]);
            const std::size_t base = tuple_index(rest, n) * n;
            const Rational sign = (i % 2) ? Rational(-1) : Rational(1);
            for (std::size_t av = 0; av < n; ++av)
                for (const auto& t : a.bracket(big[i], av)) put(t.index, base + av, sign * t.coeff);
        }
        // sum_{i<j} (-1)^{i+j} c([x_i, x_j], ..)
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                const auto& br = a.bracket(big[i], big[j]);
                if (br.empty()) continue;
                std::vector<std::size_t> rest;
                for (std::size_t q = 0; q <= k; ++q)
                    if (q != i && q != j) rest.push_back(big[q]);
                for (const auto& t : br) {
                    bool clash = false;
                    std::size_t pos = 0;
                    for (auto r : rest) {
                        if (r == t.index) clash = true;
                        if (r < t.index) ++pos;
                    }
                    if (clash) continue;
                    std::vector<std::size_t> tup = rest;
                    tup.insert(tup.begin() + static_cast<std::ptrdiff_t>(pos), t.index);
                    const std::size_t base = tuple_index(tup, n) * n;
                    Rational sign = ((i + j + pos) % 2) ? Rational(-1) : Rational(1);
                    for (std::size_t av = 0; av < n; ++av) put(av, base + av, sign * t.coeff);
                }
            }
        for (auto& r : out) {
            std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
            d.append_row(std::move(r));
        }
    }
    return d;
}

namespace {

void require_lie(const Algebra& a) {
    if (a.is_super()) throw Error(ErrorCode::WrongKind, "cohomology of Lie superalgebras is not supported");
}

}  // namespace

bool differential_squares_to_zero(const Algebra& a, unsigned k) {
    require_lie(a);
    if (k == 0) return true;
    return (cochain_differential(a, k) * cochain_differential(a, k - 1)).is_zero();
}

std::size_t cohomology_dim(const Algebra& a, unsigned k) {
    require_lie(a);
    if (k > 3) throw Error(ErrorCode::Usage, "cohomology degree must be 0..3");
    if (auto g = dimension_guard(k); g && a.dim() > *g)
        throw Error(ErrorCode::DimensionGuard, "dim " + std::to_string(a.dim()) + " exceeds the degree-" +
                                                   std::to_string(k) + " guard " + std::to_string(*g));
    const std::size_t n = a.dim();
    const std::size_t ck = binomial(n, k).get_ui() * n;
    std::size_t nullity = ck - rank(cochain_differential(a, k));
    std::size_t prev = k == 0 ? 0 : rank(cochain_differential(a, k - 1));
    return nullity - prev;
}

Fingerprint fingerprint(const Algebra& a, std::optional<std::size_t> nilradical_dim) {
    Fingerprint f;
    f.dim = a.dim();
    auto s = series(a);
    f.lower_central = s.lower_central;
    f.derived = s.derived;
    f.center = center(a).dim();
    auto der = derivation_space(a);
    f.der_even = der.even.size();
    f.der_odd = der.odd.size();
    f.inner = inner_derivations(a).size();
    if (!a.is_super()) {
        f.h1 = cohomology_dim(a, 1);
        if (auto g = dimension_guard(2); !g || a.dim() <= *g) f.h2 = cohomology_dim(a, 2);
    }
    if (nilradical_dim) f.nilradical_rank = rank_of(leading_subalgebra(a, *nilradical_dim));
    return f;
}

Comparison compare(const Fingerprint& a, const Fingerprint& b) {
    auto differ = [](const auto& x, const auto& y) { return x != y; };
    auto opt_differ = [](const auto& x, const auto& y) { return x && y && *x != *y; };
    if (differ(a.dim, b.dim)) return {true, "dim"};
    if (differ(a.derived, b.derived)) return {true, "derived"};
    if (differ(a.lower_central, b.lower_central)) return {true, "lower_central"};
    if (differ(a.center, b.center)) return {true, "center"};
    if (differ(a.der_even, b.der_even)) return {true, "der_even"};
    if (differ(a.der_odd, b.der_odd)) return {true, "der_odd"};
    if (differ(a.inner, b.inner)) return {true, "inner"};
    if (opt_differ(a.h1, b.h1)) return {true, "h1"};
    if (opt_differ(a.h2, b.h2)) return {true, "h2"};
    if (opt_differ(a.nilradical_rank, b.nilradical_rank)) return {true, "nilradical_rank"};
    return {};
}

Comparison compare(const Algebra& a, const Algebra& b) { return compare(fingerprint(a), fingerprint(b)); }

}  // namespace torusforge
