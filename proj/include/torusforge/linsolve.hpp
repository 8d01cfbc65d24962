#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torusforge/matrix.hpp"

namespace torusforge {

/// Row-major sparse matrix used for large structured systems (Leibniz
/// equations, cochain differentials).
class SparseMatrix {
public:
    using Row = std::map<std::size_t, Rational>;

    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    static SparseMatrix from_dense(const RatMatrix& m);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, const Rational& v);
    std::size_t append_row(Row row);
    const Row& row(std::size_t r) const { return rows_[r]; }

    RatMatrix to_dense() const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t cols_;
    std::vector<Row> rows_;
};

/// Incremental fraction-free row reduction. Rows are kept as primitive
/// integer vectors; each insertion cancels leading entries by integer
/// cross-multiplication followed by content removal, so no fractions appear
/// until the reduced form is requested.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols), by_pivot_(cols) {}

    bool insert(const SparseMatrix::Row& row);
    bool insert(const RatVector& row);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rank_; }
    std::vector<std::size_t> pivot_columns() const;

    /// Fully reduced rows (leading entry 1, zero in every other pivot column),
    /// ordered by pivot column.
    std::vector<std::pair<std::size_t, SparseMatrix::Row>> reduced_rows() const;

private:
    using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;
    static IntRow to_primitive(const SparseMatrix::Row& row);

    std::size_t cols_;
    std::vector<std::optional<IntRow>> by_pivot_;
    std::size_t rank_ = 0;
};

std::size_t rank(const RatMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// Canonical nullspace basis. Pivots are chosen from the rightmost column, so
/// the free parameters are the earliest variables; basis vector k has a 1 in
/// the k-th free coordinate and 0 in every other free coordinate. Vectors are
/// ordered by their free coordinate.
std::vector<RatVector> nullspace_vectors(const SparseMatrix& m);
std::vector<RatVector> nullspace_vectors(const RatMatrix& m);
/// Same basis returned as the columns of a cols x k matrix.
RatMatrix nullspace(const RatMatrix& m);

/// One solution of m x = b (free coordinates set to zero), or nullopt.
std::optional<RatVector> solve(const SparseMatrix& m, const RatVector& b);
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Linear subspace of Q^n held in reduced row echelon form (leftmost pivots).
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<RatVector>& vectors);

    bool add(const RatVector& v);
    RatVector reduce(const RatVector& v) const;
    bool contains(const RatVector& v) const { return torusforge::is_zero(reduce(v)); }
    bool contains(const Subspace& other) const;

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<RatVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<RatVector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace torusforge
