#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "torusforge/algebra.hpp"

namespace torusforge {

/// Commutative associative algebra; the symmetric product table is checked on construction.
class CommAssocAlgebra {
public:
    CommAssocAlgebra() = default;
    CommAssocAlgebra(std::string name, std::vector<std::string> basis,
                     const std::map<std::pair<std::size_t, std::size_t>, TermList>& products);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const TermList& product(std::size_t i, std::size_t j) const { return full_[i * dim() + j]; }
    RatVector product(const RatVector& u, const RatVector& v) const;
    /// Entries with i <= j.
    std::map<std::pair<std::size_t, std::size_t>, TermList> table() const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<TermList> full_;
};

/// [x_i (x) a, x_j (x) b] = [x_i, x_j] (x) ab, basis ordered i-major.
Algebra tensor_current(const Algebra& l, const CommAssocAlgebra& c, const std::string& name = "");

Subspace ideal_closure(const Algebra& a, const std::vector<RatVector>& generators);

/// Structure constants on the coordinates that are not pivots of the ideal's echelon basis.
Algebra quotient(const Algebra& a, const Subspace& ideal, const std::string& name = "");

/// [a_i, b_j] = value (in B) for a_i in A, b_j in B.
struct CrossEntry {
    std::size_t acting;
    std::size_t acted;
    TermList value;
};
using CrossAction = std::vector<CrossEntry>;

/// Extra bracket in the assembled basis, added on top of the block table.
using ExtraBracket = std::tuple<std::size_t, std::size_t, TermList>;

/// A + B with A acting on B. The result lists A's even basis, B's even basis, then the odd ones.
Algebra assemble(const Algebra& a, const Algebra& b, const CrossAction& action,
                 const std::vector<ExtraBracket>& extra = {}, const std::string& name = "");

/// Index of A's / B's basis element i inside the assembled algebra.
std::size_t assembled_index_a(const Algebra& a, const Algebra& b, std::size_t i);
std::size_t assembled_index_b(const Algebra& a, const Algebra& b, std::size_t j);

/// N + span{x_i} with [n, x_i] = D_i(n) and [x_i, x_j] = 0. The x_i follow N's even basis.
Algebra semidirect_by_derivations(const Algebra& n, const std::vector<RatMatrix>& ds,
                                  const std::vector<std::string>& names, const std::string& name = "");

/// Names t1..ts avoiding those already in use (a prime is appended on collision).
std::vector<std::string> complement_names(const Algebra& n, std::size_t count, const std::string& stem = "t");

}  // namespace torusforge
