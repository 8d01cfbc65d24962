#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusforge/algebra.hpp"
#include "torusforge/torus.hpp"

namespace torusforge {

struct BlockWitness {
    std::size_t derivation;  // index into the Der(A) basis
    Root root;
    std::size_t row, col;    // off-diagonal entry inside the root block
    Rational value;
};

struct DldReport {
    // (i): diagonals of derivations generate the torus
    bool condition_i = true;
    std::optional<std::size_t> i_non_derivation;  // derivation whose diagonal part is no derivation
    std::size_t diagonal_span_dim = 0;
    std::size_t torus_dim = 0;
    // (ii): derivations are diagonal on every root space; one witness per failing root
    bool condition_ii = true;
    std::vector<BlockWitness> ii_witnesses;
    // (iii): 0 is not a root
    bool condition_iii = true;
    std::vector<std::size_t> zero_root_indices;

    bool overall() const { return condition_i && condition_ii && condition_iii; }
};

DldReport dld_check(const Algebra& a);

struct ExtensionWitness {
    Algebra algebra;
    std::size_t nilradical_dim;
    std::vector<std::string> complement;
    Torus torus;
};

/// A + T for T = diagonal_torus(A). Throws ZeroTorus when T = 0.
ExtensionWitness build_maximal_extension(const Algebra& a);

/// Extension by an explicit commuting family of diagonal derivations.
ExtensionWitness build_extension(const Algebra& a, const std::vector<RatMatrix>& torus);

struct NilradicalReport {
    bool is_ideal = false;
    bool nilpotent = false;
    bool solvable = false;
    bool nil_independent = false;
    std::string diagnosis;
    bool ok() const { return is_ideal && nilpotent && solvable && nil_independent; }
    explicit operator bool() const { return ok(); }
};

/// Restriction of A to its first m basis vectors (which must span a subalgebra).
Algebra leading_subalgebra(const Algebra& a, std::size_t m);

NilradicalReport verify_nilradical(const Algebra& r, std::size_t m);

struct Normalization {
    Algebra algebra;
    RatMatrix iso;  // columns: normalized basis in the input's coordinates
};

Normalization normalize_extension(const Algebra& r, std::size_t m);

struct OuterDerivations {
    bool present;
    std::size_t count;
};

OuterDerivations has_outer_derivations(const Algebra& r);

}  // namespace torusforge
