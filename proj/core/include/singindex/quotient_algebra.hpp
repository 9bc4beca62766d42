#pragma once

#include "singindex/ideal.hpp"
#include "singindex/standard_basis.hpp"

#include <optional>
#include <span>
#include <vector>

namespace singindex::gb {

/// Finite-dimensional algebra O/I with its standard-monomial basis and the
/// structure constants of multiplication.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(StandardBasis sb);

  const StandardBasis& standard_basis() const noexcept { return sb_; }
  const Context& context() const noexcept { return sb_.context(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  /// For local algebras: m^bound vanishes; every basis monomial has degree < bound.
  unsigned truncation_degree() const noexcept { return bound_; }

  /// Unique representative of p supported on the basis monomials.
  Polynomial normal_form(const Polynomial& p) const;
  std::vector<Rational> coordinates(const Polynomial& p) const;
  Polynomial element(std::span<const Rational> coords) const;

  /// Coordinates of basis[i] * basis[j].
  const std::vector<Rational>& product(std::size_t i, std::size_t j) const;
  std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b) const;

 private:
  StandardBasis sb_;
  std::vector<Monomial> basis_;
  unsigned bound_ = 0;
  std::vector<std::vector<Rational>> table_;  // row-major upper triangle, symmetric
};

/// Throws NotIsolated when the colength is infinite.
QuotientAlgebra quotient_algebra(const Ideal& ideal, const Options& options = {});

}  // namespace singindex::gb
