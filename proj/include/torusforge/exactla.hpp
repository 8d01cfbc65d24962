#pragma once

#include <vector>

#include "torusforge/linsolve.hpp"
#include "torusforge/matrix.hpp"
#include "torusforge/poly.hpp"

namespace torusforge {

/// Throws PreconditionFailed when m is singular.
RatMatrix inverse(const RatMatrix& m);

/// det(x I - m), monic, via Faddeev-LeVerrier.
Poly characteristic_polynomial(const RatMatrix& m);

/// Distinct rational roots of p in increasing order. Throws
/// IrrationalSpectrum if p has an irreducible factor of degree > 1.
std::vector<Rational> rational_roots(const Poly& p);

/// Distinct eigenvalues of m, all of which must be rational.
std::vector<Rational> rational_eigenvalues(const RatMatrix& m);

/// True iff m^n = 0 for an n x n matrix.
bool is_nilpotent_matrix(const RatMatrix& m);

/// True iff the minimal polynomial of m is squarefree.
bool is_semisimple(const RatMatrix& m);

struct JordanChevalley {
    RatMatrix semisimple;
    RatMatrix nilpotent;
};

/// Unique splitting m = S + N with S semisimple, N nilpotent and SN = NS.
/// S is obtained by Newton iteration S <- S - q(S) q'(S)^{-1} on the
/// squarefree part q of the characteristic polynomial.
JordanChevalley jordan_chevalley(const RatMatrix& m);

/// Finite exponential series of a nilpotent matrix; throws NotNilpotent.
RatMatrix exp_nilpotent(const RatMatrix& d);

}  // namespace torusforge
