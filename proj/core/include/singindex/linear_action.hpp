#pragma once

#include "singindex/matrix.hpp"
#include "singindex/quotient_algebra.hpp"

#include <vector>

namespace singindex::smooth {

/// Finite group acting linearly on the variables, x -> A x. Built from
/// generator matrices; every element is enumerated.
class LinearAction {
 public:
  /// Throws RejectedInput if a generator is singular, has the wrong shape,
  /// has order above max_order, or the generated group exceeds max_order.
  explicit LinearAction(std::size_t nvars, std::vector<RationalMatrix> generators = {}, std::size_t max_order = 512);

  static LinearAction trivial(std::size_t nvars) { return LinearAction(nvars); }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<RationalMatrix>& generators() const noexcept { return generators_; }
  const std::vector<RationalMatrix>& elements() const noexcept { return elements_; }

  /// p(A x).
  Polynomial transform(const Polynomial& p, const RationalMatrix& a) const;

  /// Matrix of p -> p(A x) on the basis of Q. Requires an invariant ideal.
  RationalMatrix representation(const gb::QuotientAlgebra& q, const RationalMatrix& a) const;

  /// Every generator maps the ideal into itself (checked in the local ring).
  bool preserves(const gb::QuotientAlgebra& q) const;

  /// Averaging idempotent (1/|G|) sum_g rho(g) on Q.
  RationalMatrix averaging_projector(const gb::QuotientAlgebra& q) const;

 private:
  std::size_t nvars_;
  std::vector<RationalMatrix> generators_;
  std::vector<RationalMatrix> elements_;
};

}  // namespace singindex::smooth
