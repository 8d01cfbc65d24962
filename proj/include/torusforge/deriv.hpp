#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusforge/algebra.hpp"

namespace torusforge {

/// Der(A) = Der(A)_0 + Der(A)_1, each part given by a canonical basis.
struct DerivationSpace {
    std::vector<RatMatrix> even;
    std::vector<RatMatrix> odd;
    std::size_t dim() const { return even.size() + odd.size(); }
    std::vector<RatMatrix> all() const;
};

DerivationSpace derivation_space(const Algebra& a);

/// Basis of the homogeneous superderivations of the given parity.
std::vector<RatMatrix> derivations_of_parity(const Algebra& a, int parity);

struct DerivationCheck {
    bool ok = true;
    /// First basis pair (i, j) where d([x,y]) = [d x, y] + (-1)^{|x||d|} [x, d y] fails.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    RatVector defect;
    std::string reason;
    explicit operator bool() const { return ok; }
};

DerivationCheck is_derivation(const Algebra& a, const RatMatrix& d, int parity = 0);

/// Left multiplication y -> [x, y]; a superderivation of parity |x|.
RatMatrix left_multiplication(const Algebra& a, std::size_t i);

/// Canonical basis of span{ad_x}; its size is dim A - dim Z(A).
std::vector<RatMatrix> inner_derivations(const Algebra& a);

/// Derivations commuting with every element of the diagonal torus T. Throws
/// NotDerivation if an element of T is not a diagonal derivation.
std::vector<RatMatrix> torus_centralizer(const Algebra& a, const std::vector<RatMatrix>& torus);

/// Nil-independence decided through diagonals; the family must be jointly
/// upper or jointly lower triangular.
/// Throws NotDerivation / NotTriangular naming the offending index.
bool nil_independent(const Algebra& a, const std::vector<RatMatrix>& family);

/// Linear span of matrices (flattened), returned as canonical matrices.
std::vector<RatMatrix> matrix_span(const std::vector<RatMatrix>& ms, std::size_t rows, std::size_t cols);

}  // namespace torusforge
