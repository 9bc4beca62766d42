#pragma once

#include "singindex/linear_action.hpp"
#include "singindex/matrix.hpp"
#include "singindex/quotient_algebra.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace singindex::smooth {

enum class GroundField { Real, Complex };

/// X = sum X_i d/dx_i; one component per variable.
struct VectorFieldGerm {
  std::vector<Polynomial> components;
  GroundField field = GroundField::Complex;

  void validate() const;
};

/// omega = sum A_i dx_i; one coefficient per variable.
struct OneFormGerm {
  std::vector<Polynomial> coefficients;
  GroundField field = GroundField::Complex;

  void validate() const;
};

/// Collection of sections of the trivial rank-m bundle over (C^n, 0):
/// group i holds m - k_i + 1 sections as the columns of an m-row matrix.
struct SectionCollection {
  std::size_t rank = 0;
  std::vector<std::size_t> partition;
  std::vector<PolyMatrix> groups;

  const Context& context() const;
  void validate() const;
};

enum class PointStatus {
  Isolated,     // finite positive colength
  Nonsingular,  // the ideal is the whole ring: no singular point at all
  NotIsolated,  // infinite colength
};

struct IndexResult {
  PointStatus status = PointStatus::Isolated;
  gb::Colength colength = gb::Colength::finite(0);
  std::int64_t value = 0;  // meaningful unless NotIsolated

  bool isolated() const noexcept { return status != PointStatus::NotIsolated; }
  /// Throws NotIsolated for non-isolated points.
  std::int64_t index() const;
};

/// Index of a holomorphic vector field as the colength of (X_1, ..., X_n).
IndexResult palamodov_index(const VectorFieldGerm& x, const gb::Options& options = {});

/// Colength of the ideal of (m - k_i + 1)-minors of all groups.
IndexResult collection_index(const SectionCollection& c, const gb::Options& options = {});

/// Index of a holomorphic 1-form: colength of (A_1, ..., A_n). This equals
/// (-1)^n times the index of the real part on R^{2n}.
IndexResult complex_form_index(const OneFormGerm& w, const gb::Options& options = {});

/// Index of the real 1-form Re(omega) on R^{2n} recovered from the complex one.
std::int64_t real_part_index(std::int64_t complex_index, std::size_t n);

/// Residue pairing on Q_F realised as B(a, b) = phi(a b).
struct ELKForm {
  gb::QuotientAlgebra algebra;
  std::vector<Rational> jacobian_class;
  std::vector<Rational> functional;  // values on the basis
  RationalMatrix gram;
  std::size_t pivot = 0;  // basis index the default functional reads off
};

/// Builds the form with the default functional: read the coefficient of the
/// last basis monomial occurring in the Jacobian class, scaled so that
/// phi(J) = dim Q. Requires the real ground field and a finite, non-zero
/// colength.
ELKForm elk_form(const VectorFieldGerm& f, const gb::Options& options = {});

/// Same algebra with an arbitrary functional; requires phi(J) > 0.
ELKForm elk_form_with_functional(const ELKForm& base, std::span<const Rational> functional);

/// Local degree of F as the signature of the residue pairing. A germ with
/// F(0) != 0 has index 0 (status Nonsingular).
IndexResult elk_index(const VectorFieldGerm& f, const gb::Options& options = {});

/// dim of the G-invariant part of Q: (1/|G|) sum_g trace(rho(g)).
std::size_t invariant_dimension(const gb::QuotientAlgebra& q, const LinearAction& action);

/// Signature of the pairing restricted to the G-invariant subspace.
std::int64_t invariant_signature(const ELKForm& form, const LinearAction& action);

}  // namespace singindex::smooth
