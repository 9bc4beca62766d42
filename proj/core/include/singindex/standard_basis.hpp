#pragma once

#include "singindex/ideal.hpp"
#include "singindex/monomial.hpp"
#include "singindex/polynomial.hpp"

#include <memory>
#include <vector>

namespace singindex::gb {

/// Gröbner basis (global order) or standard basis (local order) of an ideal.
/// Elements are monic with respect to the order and no leading monomial
/// divides another. Global bases are fully reduced.
class StandardBasis {
 public:
  StandardBasis(std::vector<Polynomial> elements, MonomialOrder order, Locality locality, Context ctx);

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
  const MonomialOrder& order() const noexcept { return order_; }
  Locality locality() const noexcept { return locality_; }
  const Context& context() const noexcept { return ctx_; }

  /// Global: the unique reduced normal form. Local: Mora's weak normal form h,
  /// so that u*p - h lies in the ideal for a unit u and no leading monomial
  /// divides LM(h). In both cases p is in the ideal iff the result is zero.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Local bases only: the unique representative of p in the local ring
  /// modulo the ideal, assuming m^bound lies in the ideal. Every term of the
  /// result is a standard monomial of degree < bound.
  Polynomial truncated_normal_form(const Polynomial& p, unsigned bound) const;

 private:
  struct Prepared;
  std::shared_ptr<const Prepared> prepared_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  MonomialOrder order_;
  Locality locality_;
  Context ctx_;
};

/// Buchberger (global order) or Mora's tangent cone algorithm (local order).
/// The order must match the ideal's locality. S-pairs are processed by the
/// normal strategy with ties broken by generator index.
StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& order, const Options& options = {});

/// Uses degrevlex for global ideals and negdegrevlex for local ones.
StandardBasis standard_basis(const Ideal& ideal, const Options& options = {});

/// Leading monomials contain a pure power of every variable.
bool is_zero_dimensional(const StandardBasis& sb);

/// Monomials outside the leading ideal, sorted by degree and then
/// degrevlex-descending (so 1 comes first). Throws NotIsolated when the
/// basis is not zero-dimensional.
std::vector<Monomial> standard_monomials(const StandardBasis& sb);

Colength colength(const StandardBasis& sb);
Colength colength(const Ideal& ideal, const Options& options = {});

}  // namespace singindex::gb
