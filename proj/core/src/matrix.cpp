#include "singindex/matrix.hpp"

#include "singindex/error.hpp"

#include <map>
#include <utility>

namespace singindex {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw RejectedInput("matrix entry count does not match its shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw RejectedInput("matrix product shape mismatch");
  RationalMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw RejectedInput("matrix sum shape mismatch");
  RationalMatrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += other.data_[i];
  return s;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const {
  RationalMatrix s(*this);
  for (auto& x : s.data_) x *= c;
  return s;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw RejectedInput("matrix-vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw RejectedInput("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw RejectedInput("determinant of a non-square matrix");
  RationalMatrix a(*this);
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> row_echelon(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(row, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix a(*this);
  return row_echelon(a).size();
}

RationalMatrix RationalMatrix::column_space_basis() const {
  RationalMatrix a(*this);
  const auto pivots = row_echelon(a);
  RationalMatrix basis(rows_, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) basis(r, j) = (*this)(r, pivots[j]);
  return basis;
}

Inertia symmetric_signature(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw RejectedInput("signature requires a symmetric matrix");
  RationalMatrix a(m);
  const std::size_t n = a.rows();
  Inertia inertia;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; use an off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        inertia.zero += n - k;
        return inertia;
      }
      // e_i -> e_i + e_j makes the (i,i) entry 2 a(i,j) != 0.
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Rational pivot = a(k, k);
    if (pivot > 0)
      ++inertia.positive;
    else
      ++inertia.negative;
    // Schur complement of the pivot; stays symmetric.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = a(k, r) = 0;
  }
  return inertia;
}

PolyMatrix::PolyMatrix(const Context& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ctx)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw RejectedInput("matrix entry count does not match its shape");
  if (data_.empty()) throw RejectedInput("empty polynomial matrix");
  ctx_ = data_.front().context();
  for (const auto& p : data_)
    if (!same_context(p.context(), ctx_)) throw RejectedInput("matrix entries live in different contexts");
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> row_set, std::span<const std::size_t> col_set) const {
  PolyMatrix s(ctx_, row_set.size(), col_set.size());
  for (std::size_t r = 0; r < row_set.size(); ++r)
    for (std::size_t c = 0; c < col_set.size(); ++c) s(r, c) = (*this)(row_set[r], col_set[c]);
  return s;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw RejectedInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.context(), 1);
  // Laplace expansion along rows, memoised on the set of used columns.
  std::map<unsigned long, Polynomial> memo;
  memo.emplace(0UL, Polynomial::constant(m.context(), 1));
  for (std::size_t row = 0; row < n; ++row) {
    std::map<unsigned long, Polynomial> next;
    for (const auto& [mask, minor] : memo) {
      if (minor.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1UL << c)) continue;
        if (m(row, c).is_zero()) continue;
        // Sign: number of used columns to the right of c.
        std::size_t right = 0;
        for (std::size_t j = c + 1; j < n; ++j)
          if (mask & (1UL << j)) ++right;
        Polynomial t = minor * m(row, c);
        if (right % 2) t = -t;
        auto [it, inserted] = next.try_emplace(mask | (1UL << c), t);
        if (!inserted) it->second += t;
      }
    }
    memo = std::move(next);
  }
  auto it = memo.find((1UL << n) - 1);
  return it == memo.end() ? Polynomial(m.context()) : it->second;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw RejectedInput("minor size " + std::to_string(k) + " out of range");
  std::vector<Polynomial> out;
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(determinant(m.submatrix(rs, cs)));
  return out;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> fs) {
  if (fs.empty()) throw RejectedInput("jacobian of an empty system");
  const Context& ctx = fs.front().context();
  PolyMatrix j(ctx, fs.size(), ctx->size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!same_context(fs[i].context(), ctx)) throw RejectedInput("system mixes variable contexts");
    for (std::size_t v = 0; v < ctx->size(); ++v) j(i, v) = fs[i].derivative(v);
  }
  return j;
}

Polynomial jacobian_det(std::span<const Polynomial> fs) {
  if (fs.empty() || fs.size() != fs.front().nvars())
    throw RejectedInput("jacobian determinant needs a square system");
  return determinant(jacobian_matrix(fs));
}

}  // namespace singindex
