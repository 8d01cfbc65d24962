#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "torusforge/rational.hpp"

namespace torusforge {

using RatVector = std::vector<Rational>;

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
void axpy(RatVector& y, const Rational& a, const RatVector& x);

/// Dense exact matrix, row-major. Column j holds the image of basis vector j
/// when the matrix is read as a linear map.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(std::span<const Rational> diag);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatVector column(std::size_t c) const;
    std::vector<RatVector> columns() const;
    void set_column(std::size_t c, const RatVector& v);
    RatVector diagonal_entries() const;

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_upper_triangular() const;

    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    RatVector apply(const RatVector& v) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    /// Human-readable rendering, one row per line.
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);
RatMatrix power(const RatMatrix& m, unsigned k);
/// Flattens a square matrix row-major; used when matrices are treated as vectors.
RatVector flatten(const RatMatrix& m);
RatMatrix unflatten(const RatVector& v, std::size_t rows, std::size_t cols);

}  // namespace torusforge
