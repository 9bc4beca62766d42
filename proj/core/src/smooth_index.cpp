#include "singindex/smooth_index.hpp"

#include "singindex/error.hpp"

#include <numeric>

namespace singindex::smooth {

namespace {

void require_square(const std::vector<Polynomial>& ps, const char* what) {
  if (ps.empty()) throw RejectedInput(std::string(what) + " has no components");
  const Context& ctx = ps.front().context();
  if (ps.size() != ctx->size())
    throw RejectedInput(std::string(what) + " needs one component per variable (" + std::to_string(ctx->size()) +
                        "), got " + std::to_string(ps.size()));
  for (const auto& p : ps)
    if (!same_context(p.context(), ctx)) throw RejectedInput(std::string(what) + " mixes variable contexts");
}

IndexResult from_colength(const gb::Colength& c) {
  IndexResult r;
  r.colength = c;
  if (c.is_infinite()) {
    r.status = PointStatus::NotIsolated;
  } else {
    r.value = static_cast<std::int64_t>(c.value());
    r.status = r.value == 0 ? PointStatus::Nonsingular : PointStatus::Isolated;
  }
  return r;
}

}  // namespace

void VectorFieldGerm::validate() const { require_square(components, "vector field"); }

void OneFormGerm::validate() const { require_square(coefficients, "1-form"); }

const Context& SectionCollection::context() const {
  if (groups.empty()) throw RejectedInput("collection has no groups");
  return groups.front().context();
}

void SectionCollection::validate() const {
  if (groups.empty()) throw RejectedInput("collection has no groups");
  if (groups.size() != partition.size()) throw RejectedInput("collection needs one matrix per partition part");
  const std::size_t n = context()->size();
  const std::size_t total = std::accumulate(partition.begin(), partition.end(), std::size_t{0});
  if (total != n)
    throw RejectedInput("partition sums to " + std::to_string(total) + " but the space has dimension " +
                        std::to_string(n));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::size_t k = partition[i];
    if (k < 1 || k > rank) throw RejectedInput("partition part out of range 1..m");
    if (groups[i].rows() != rank || groups[i].cols() != rank - k + 1)
      throw RejectedInput("group " + std::to_string(i) + " must be a " + std::to_string(rank) + " x " +
                          std::to_string(rank - k + 1) + " matrix");
    if (!same_context(groups[i].context(), context())) throw RejectedInput("collection mixes variable contexts");
  }
}

std::int64_t IndexResult::index() const {
  if (status == PointStatus::NotIsolated) throw NotIsolated("singular point is not algebraically isolated");
  return value;
}

IndexResult palamodov_index(const VectorFieldGerm& x, const gb::Options& options) {
  x.validate();
  return from_colength(gb::colength(gb::Ideal(x.components), options));
}

IndexResult collection_index(const SectionCollection& c, const gb::Options& options) {
  c.validate();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < c.groups.size(); ++i) {
    const std::size_t k = c.rank - c.partition[i] + 1;
    for (auto& m : minors(c.groups[i], k)) gens.push_back(std::move(m));
  }
  return from_colength(gb::colength(gb::Ideal(gens), options));
}

IndexResult complex_form_index(const OneFormGerm& w, const gb::Options& options) {
  w.validate();
  return from_colength(gb::colength(gb::Ideal(w.coefficients), options));
}

std::int64_t real_part_index(std::int64_t complex_index, std::size_t n) {
  return n % 2 == 0 ? complex_index : -complex_index;
}

namespace {

RationalMatrix gram_of(const gb::QuotientAlgebra& q, std::span<const Rational> phi) {
  const std::size_t d = q.dimension();
  RationalMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const auto& p = q.product(i, j);
      Rational v = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (p[k] != 0) v += p[k] * phi[k];
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

Rational evaluate_functional(std::span<const Rational> phi, std::span<const Rational> v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += phi[i] * v[i];
  return s;
}

}  // namespace

ELKForm elk_form(const VectorFieldGerm& f, const gb::Options& options) {
  f.validate();
  if (f.field != GroundField::Real) throw RejectedInput("the signature formula needs a real germ (field \"R\")");
  gb::StandardBasis sb = gb::standard_basis(gb::Ideal(f.components), options);
  if (!gb::is_zero_dimensional(sb))
    throw NotIsolated("complexified germ has a non-isolated zero; the signature formula does not apply");
  gb::QuotientAlgebra q(std::move(sb));
  if (q.dimension() == 0) throw RejectedInput("F(0) != 0: there is no singular point to build a form on");

  auto j = q.coordinates(jacobian_det(f.components));
  std::size_t pivot = j.size();
  for (std::size_t i = j.size(); i-- > 0;)
    if (j[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == j.size()) throw InternalError("Jacobian class vanishes in the local algebra; inconsistent input");

  std::vector<Rational> phi(q.dimension());
  phi[pivot] = Rational(static_cast<unsigned long>(q.dimension())) / j[pivot];
  RationalMatrix gram = gram_of(q, phi);
  return ELKForm{std::move(q), std::move(j), std::move(phi), std::move(gram), pivot};
}

ELKForm elk_form_with_functional(const ELKForm& base, std::span<const Rational> functional) {
  if (functional.size() != base.algebra.dimension()) throw RejectedInput("functional has the wrong dimension");
  if (evaluate_functional(functional, base.jacobian_class) <= 0) throw RejectedInput("functional must be positive on the Jacobian class");
  ELKForm out = base;
  out.functional.assign(functional.begin(), functional.end());
  out.gram = gram_of(out.algebra, out.functional);
  return out;
}

IndexResult elk_index(const VectorFieldGerm& f, const gb::Options& options) {
  f.validate();
  if (f.field != GroundField::Real) throw RejectedInput("the signature formula needs a real germ (field \"R\")");
  const gb::Colength c = gb::colength(gb::Ideal(f.components), options);
  IndexResult r = from_colength(c);
  if (r.status == PointStatus::NotIsolated)
    throw NotIsolated("complexified germ has a non-isolated zero; the signature formula does not apply");
  if (r.status == PointStatus::Nonsingular) return r;
  const ELKForm form = elk_form(f, options);
  r.value = symmetric_signature(form.gram).signature();
  return r;
}

std::size_t invariant_dimension(const gb::QuotientAlgebra& q, const LinearAction& action) {
  if (action.nvars() != q.context()->size()) throw RejectedInput("action acts on the wrong number of variables");
  if (!action.preserves(q)) throw RejectedInput("the ideal is not invariant under the group action");
  Rational sum = 0;
  for (const auto& g : action.elements()) sum += action.representation(q, g).trace();
  const Rational dim = sum / static_cast<unsigned long>(action.order());
  return static_cast<std::size_t>(to_int64(dim));
}

std::int64_t invariant_signature(const ELKForm& form, const LinearAction& action) {
  const auto& q = form.algebra;
  if (action.nvars() != q.context()->size()) throw RejectedInput("action acts on the wrong number of variables");
  if (!action.preserves(q)) throw RejectedInput("the ideal is not invariant under the group action");
  const RationalMatrix w = action.averaging_projector(q).column_space_basis();
  const RationalMatrix restricted = w.transpose() * form.gram * w;
  return symmetric_signature(restricted).signature();
}

}  // namespace singindex::smooth
