#include "singindex/linear_action.hpp"

#include "singindex/error.hpp"

#include <algorithm>

namespace singindex::smooth {

LinearAction::LinearAction(std::size_t nvars, std::vector<RationalMatrix> generators, std::size_t max_order)
    : nvars_(nvars), generators_(std::move(generators)) {
  const RationalMatrix id = RationalMatrix::identity(nvars_);
  for (const auto& g : generators_) {
    if (g.rows() != nvars_ || g.cols() != nvars_)
      throw RejectedInput("action matrix must be " + std::to_string(nvars_) + " x " + std::to_string(nvars_));
    if (g.determinant() == 0) throw RejectedInput("action matrix is singular");
    RationalMatrix power = g;
    std::size_t k = 1;
    while (!(power == id)) {
      if (++k > max_order) throw RejectedInput("action matrix does not have finite order within the cap");
      power = power * g;
    }
  }
  elements_.push_back(id);
  for (std::size_t head = 0; head < elements_.size(); ++head)
    for (const auto& g : generators_) {
      RationalMatrix next = elements_[head] * g;
      if (std::find(elements_.begin(), elements_.end(), next) != elements_.end()) continue;
      if (elements_.size() >= max_order) throw RejectedInput("generated group exceeds the order cap");
      elements_.push_back(std::move(next));
    }
}

Polynomial LinearAction::transform(const Polynomial& p, const RationalMatrix& a) const {
  if (p.nvars() != nvars_) throw RejectedInput("polynomial does not match the action's variable count");
  const auto images = linear_images(p.context(), a.data());
  return p.substitute(images);
}

RationalMatrix LinearAction::representation(const gb::QuotientAlgebra& q, const RationalMatrix& a) const {
  const std::size_t d = q.dimension();
  RationalMatrix rho(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = q.coordinates(transform(Polynomial::term(q.context(), q.basis()[j], 1), a));
    for (std::size_t i = 0; i < d; ++i) rho(i, j) = col[i];
  }
  return rho;
}

bool LinearAction::preserves(const gb::QuotientAlgebra& q) const {
  // Generators of the ideal are the standard basis elements.
  for (const auto& g : generators_)
    for (const auto& f : q.standard_basis().elements())
      if (!q.normal_form(transform(f, g)).is_zero()) return false;
  return true;
}

RationalMatrix LinearAction::averaging_projector(const gb::QuotientAlgebra& q) const {
  const std::size_t d = q.dimension();
  RationalMatrix sum(d, d);
  for (const auto& g : elements_) sum = sum + representation(q, g);
  return sum * Rational(1, static_cast<unsigned long>(elements_.size()));
}

}  // namespace singindex::smooth
