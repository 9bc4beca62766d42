#pragma once

#include "singindex/polynomial.hpp"
#include "singindex/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace singindex {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(std::span<const Rational> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Rational> data() const noexcept { return data_; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator*(const Rational& c) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  bool is_symmetric() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  Rational trace() const;
  Rational determinant() const;
  std::size_t rank() const;
  /// Columns forming a basis of the column space, chosen as pivot columns.
  RationalMatrix column_space_basis() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const noexcept { return static_cast<long>(positive) - static_cast<long>(negative); }
  bool operator==(const Inertia&) const = default;
};

/// Inertia of a symmetric rational matrix by exact congruent diagonalisation.
/// Throws RejectedInput when the matrix is not symmetric.
Inertia symmetric_signature(const RationalMatrix& m);

/// Dense matrix of polynomials sharing one context.
class PolyMatrix {
 public:
  PolyMatrix(const Context& ctx, std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Context& context() const noexcept { return ctx_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Polynomial>& entries() const noexcept { return data_; }

  PolyMatrix transpose() const;
  PolyMatrix submatrix(std::span<const std::size_t> row_set, std::span<const std::size_t> col_set) const;

 private:
  Context ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// Determinant of a square polynomial matrix (division-free).
Polynomial determinant(const PolyMatrix& m);

/// All k x k minors, ordered lexicographically by (row set, column set).
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

/// Matrix of partial derivatives d f_i / d x_j.
PolyMatrix jacobian_matrix(std::span<const Polynomial> fs);

/// det(d f_i / d x_j) for a square system.
Polynomial jacobian_det(std::span<const Polynomial> fs);

/// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace singindex
