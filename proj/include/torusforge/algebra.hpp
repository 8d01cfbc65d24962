#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusforge/linsolve.hpp"
#include "torusforge/matrix.hpp"

namespace torusforge {

enum class AlgebraKind { Lie, LieSuper };

std::string to_string(AlgebraKind kind);

/// One term c * e_k of a bracket value.
struct Term {
    Rational coeff;
    std::size_t index;
    friend bool operator==(const Term&, const Term&) = default;
};
using TermList = std::vector<Term>;

TermList to_terms(const RatVector& v);
RatVector to_vector(const TermList& terms, std::size_t dim);

/// A Lie algebra or Lie superalgebra given by structure constants.
///
/// Basis indices run over the even basis first and then the odd basis. Only
/// one orientation of every unordered pair {i, j} is stored (keyed i <= j);
/// the other is induced by [x, y] = -(-1)^{|x||y|} [y, x]. A diagonal key
/// (i, i) is meaningful only when e_i is odd; `validate` reports it otherwise.
class Algebra {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, TermList>;

    Algebra() = default;
    Algebra(std::string name, AlgebraKind kind, std::vector<std::string> even_basis,
            std::vector<std::string> odd_basis = {});

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    AlgebraKind kind() const { return kind_; }
    bool is_super() const { return kind_ == AlgebraKind::LieSuper; }

    std::size_t dim() const { return names_.size(); }
    std::size_t even_dim() const { return even_dim_; }
    std::size_t odd_dim() const { return names_.size() - even_dim_; }
    /// 0 for even basis elements, 1 for odd ones.
    int parity(std::size_t i) const { return i < even_dim_ ? 0 : 1; }

    const std::vector<std::string>& basis_names() const { return names_; }
    std::vector<std::string> even_basis() const;
    std::vector<std::string> odd_basis() const;
    const std::string& basis_name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Sets [e_i, e_j] = value, storing the canonical orientation.
    void set_bracket(std::size_t i, std::size_t j, const RatVector& value);
    void set_bracket(std::size_t i, std::size_t j, const TermList& value);

    /// Canonical stored entries.
    const Table& table() const { return table_; }

    /// [e_i, e_j] with the (super-)antisymmetric completion applied.
    const TermList& bracket(std::size_t i, std::size_t j) const { return full_[i * dim() + j]; }
    RatVector bracket(const RatVector& u, const RatVector& v) const;

    /// Matrix of ad_x : y -> [y, x]; column j is [e_j, x].
    RatMatrix ad(std::size_t i) const;
    RatMatrix ad(const RatVector& x) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.name_ == b.name_ && a.kind_ == b.kind_ && a.names_ == b.names_ &&
               a.even_dim_ == b.even_dim_ && a.table_ == b.table_;
    }

private:
    void rebuild_pair(std::size_t i, std::size_t j);

    std::string name_;
    AlgebraKind kind_ = AlgebraKind::Lie;
    std::vector<std::string> names_;
    std::size_t even_dim_ = 0;
    Table table_;
    std::vector<TermList> full_;
};

struct Violation {
    enum class Kind { Antisymmetry, Grading, Jacobi };
    Kind kind;
    std::size_t i, j, k;  // k unused for non-Jacobi violations
    RatVector defect;
    std::string describe(const Algebra& a) const;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks storage, grading and the (super-)Jacobi identity on every basis
/// triple.
ValidationReport validate(const Algebra& a);

/// Signed Jacobiator of three basis elements; zero iff the identity holds.
RatVector jacobiator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k);

struct SeriesReport {
    std::vector<std::size_t> lower_central;
    std::vector<std::size_t> derived;
    bool nilpotent = false;
    bool solvable = false;
    std::optional<std::size_t> nilindex;
};

/// span{[u, v] : u in U, v in V}
Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& v);
Subspace whole_space(const Algebra& a);
std::vector<Subspace> lower_central_series(const Algebra& a);
std::vector<Subspace> derived_series(const Algebra& a);
SeriesReport series(const Algebra& a);
bool is_nilpotent(const Algebra& a);
bool is_solvable(const Algebra& a);

Subspace center(const Algebra& a);
bool is_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

/// Smallest-index basis elements spanning A / A^2; throws NotNilpotent.
std::vector<std::size_t> generators(const Algebra& a);

/// [A_1, A_1] is contained in [A_0, A_0]; throws WrongKind for plain Lie input.
bool super_lie_condition(const Algebra& a);

/// Structure constants of `a` rewritten in a new basis whose vectors are the
/// columns of `basis` (expressed in the old basis). Names and parities are
/// taken from `names`/`even_count`.
Algebra change_basis(const Algebra& a, const RatMatrix& basis, const std::string& name,
                     const std::vector<std::string>& names, std::size_t even_count);

/// True iff the invertible map phi (columns = images of the basis of `from`)
/// satisfies phi([x, y]_from) = [phi x, phi y]_to on all basis pairs.
bool is_homomorphism(const Algebra& from, const Algebra& to, const RatMatrix& phi);

}  // namespace torusforge
