#pragma once

#include <map>
#include <string>
#include <vector>

#include "torusforge/algebra.hpp"

namespace torusforge {

/// Weight equations w(i) + w(j) - w(k) = 0, one per nonzero structure constant (i,j) -> k.
struct SSystem {
    std::vector<std::string> variables;  // alpha1.. for even, beta1.. for odd basis elements
    std::vector<std::vector<long>> rows;
    std::size_t rank() const;
    SparseMatrix matrix() const;
    std::string row_string(std::size_t r) const;
};

SSystem build_s_system(const Algebra& a);

struct Torus {
    std::vector<RatMatrix> basis;  // diagonal derivations
    std::size_t dim() const { return basis.size(); }
};

/// Fundamental solutions of the S-system as diagonal matrices (integer, content 1, leading entry > 0).
Torus diagonal_torus(const Algebra& a);

using Root = RatVector;

struct RootDecomposition {
    std::vector<Root> root_of;                  // per basis index
    std::vector<Root> roots;                    // W, graded-lex order
    std::vector<std::vector<std::size_t>> spaces;  // basis indices of each root in W
    std::vector<Root> simple;                   // Psi
    std::vector<Root> primitive;                // Psi_1
    bool generators_known = true;               // false when A is not nilpotent
    bool lattice_integral = true;               // every root is an integer combination of Psi_1
    std::size_t root_index(const Root& r) const;  // position in W, or npos
    bool has_zero_root() const;
};

/// Graded-lex comparison: total degree first, then lexicographic.
bool graded_lex_less(const Root& a, const Root& b);

RootDecomposition root_decomposition(const Algebra& a, const Torus& t);

std::size_t rank_of(const Algebra& a);

}  // namespace torusforge
