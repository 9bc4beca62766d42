#include "singindex/quotient_algebra.hpp"

#include "singindex/error.hpp"

#include <algorithm>

namespace singindex::gb {

QuotientAlgebra::QuotientAlgebra(StandardBasis sb) : sb_(std::move(sb)) {
  basis_ = standard_monomials(sb_);
  // No standard monomial of degree bound => m^bound is inside the ideal
  // (graded pieces of the tangent cone vanish from there on).
  for (const auto& m : basis_) bound_ = std::max(bound_, m.degree() + 1);

  const std::size_t n = basis_.size();
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Polynomial prod = Polynomial::term(context(), basis_[i] * basis_[j], 1);
      table_[i * n + j] = coordinates(prod);
      table_[j * n + i] = table_[i * n + j];
    }
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::find(basis_.begin(), basis_.end(), m);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

Polynomial QuotientAlgebra::normal_form(const Polynomial& p) const {
  if (basis_.empty()) return Polynomial(context());
  if (sb_.locality() == Locality::Local) return sb_.truncated_normal_form(p, bound_);
  return sb_.normal_form(p);
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& p) const {
  const Polynomial nf = normal_form(p);
  std::vector<Rational> coords(basis_.size());
  for (const auto& [m, c] : nf.terms()) {
    auto idx = index_of(m);
    if (!idx) throw InternalError("normal form left a non-standard monomial");
    coords[*idx] = c;
  }
  return coords;
}

Polynomial QuotientAlgebra::element(std::span<const Rational> coords) const {
  if (coords.size() != basis_.size()) throw RejectedInput("coordinate vector has the wrong dimension");
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) terms.emplace_back(basis_[i], coords[i]);
  return Polynomial(context(), std::move(terms));
}

const std::vector<Rational>& QuotientAlgebra::product(std::size_t i, std::size_t j) const {
  return table_.at(i * basis_.size() + j);
}

std::vector<Rational> QuotientAlgebra::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
  const std::size_t n = basis_.size();
  if (a.size() != n || b.size() != n) throw RejectedInput("coordinate vector has the wrong dimension");
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Rational c = a[i] * b[j];
      const auto& p = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (p[k] != 0) out[k] += c * p[k];
    }
  }
  return out;
}

QuotientAlgebra quotient_algebra(const Ideal& ideal, const Options& options) {
  StandardBasis sb = standard_basis(ideal, options);
  if (!is_zero_dimensional(sb)) throw NotIsolated("quotient algebra is infinite-dimensional");
  return QuotientAlgebra(std::move(sb));
}

}  // namespace singindex::gb
