#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusforge/algebra.hpp"

namespace torusforge {

/// Desk-scale dimension limit for degree k; TORUSFORGE_MAX_DIM overrides it when set.
std::optional<std::size_t> dimension_guard(unsigned k);

/// Cochain index: position of the sorted tuple among k-subsets in lexicographic order.
std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t n);
std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t k);

/// d_k : C^k(A, A) -> C^{k+1}(A, A); column (tuple, a) = tuple_index * n + a.
SparseMatrix cochain_differential(const Algebra& a, unsigned k);

/// True iff d_k o d_{k-1} = 0.
bool differential_squares_to_zero(const Algebra& a, unsigned k);

/// dim H^k(A, A) = nullity(d_k) - rank(d_{k-1}).
std::size_t cohomology_dim(const Algebra& a, unsigned k);

struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lower_central;
    std::vector<std::size_t> derived;
    std::size_t center = 0;
    std::size_t der_even = 0;
    std::size_t der_odd = 0;
    std::size_t inner = 0;
    std::optional<std::size_t> h1;
    std::optional<std::size_t> h2;
    std::optional<std::size_t> nilradical_rank;
};

/// H^2 is included when the guard admits it; nilradical_rank when m is given.
Fingerprint fingerprint(const Algebra& a, std::optional<std::size_t> nilradical_dim = std::nullopt);

struct Comparison {
    bool distinguished = false;
    std::string field;  // first differing field, empty when inconclusive
};

/// Field order: dim, derived, lower_central, center, der_even, der_odd, inner, h1, h2, nilradical_rank.
Comparison compare(const Fingerprint& a, const Fingerprint& b);
Comparison compare(const Algebra& a, const Algebra& b);

}  // namespace torusforge
