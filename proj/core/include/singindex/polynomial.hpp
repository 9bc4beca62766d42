#pragma once

#include "singindex/monomial.hpp"
#include "singindex/rational.hpp"

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace singindex {

/// Ordered list of variable names shared by every polynomial of a computation.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a variable name, or -1.
  std::ptrdiff_t index_of(std::string_view name) const;

  bool operator==(const VariableContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using Context = std::shared_ptr<const VariableContext>;

Context make_context(std::vector<std::string> names);
bool same_context(const Context& a, const Context& b);

/// Sparse multivariate polynomial over Q. Terms are kept sorted by descending
/// lexicographic monomial order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(Context ctx);
  Polynomial(Context ctx, std::vector<Term> terms);

  static Polynomial constant(Context ctx, const Rational& c);
  static Polynomial variable(Context ctx, std::size_t i);
  static Polynomial term(Context ctx, Monomial m, const Rational& c);

  const Context& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Lowest total degree of a term (the order at the origin); -1 for zero.
  int order() const noexcept;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;
  /// Replaces x_i by images[i]; images may live in another context.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Drops every term of total degree >= bound.
  Polynomial truncated(unsigned bound) const;
  /// Same terms in another context with the same number of variables.
  Polynomial with_context(Context ctx) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  struct Sorted {};
  Polynomial(Context ctx, std::vector<Term> sorted_terms, Sorted);

  void require_same_context(const Polynomial& other) const;

  Context ctx_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Exact a op b. Throws RejectedInput on a context mismatch.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Integer linear substitution x -> A x with A given row-major (n x n).
std::vector<Polynomial> linear_images(const Context& ctx, std::span<const Rational> matrix);

}  // namespace singindex
