#pragma once

#include "singindex/ideal.hpp"
#include "singindex/smooth_index.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace singindex::icis {

/// Complete intersection V = {f_1 = ... = f_{N-n} = 0} in (C^N, 0). An empty
/// equation list stands for the smooth ambient space itself.
struct ICISGerm {
  Context context;
  std::vector<Polynomial> equations;

  std::size_t ambient_dim() const { return context->size(); }
  std::size_t dim() const { return ambient_dim() - equations.size(); }
  void validate() const;
};

/// One colength computation backing a reported number.
struct Certificate {
  std::string label;
  std::size_t generators = 0;
  gb::Colength colength = gb::Colength::finite(0);
};

using CertificateLog = std::vector<Certificate>;

/// Collection of 1-forms on C^N: group i holds n - k_i + 1 forms, sum k_i = n.
struct FormCollection {
  std::vector<std::size_t> partition;
  std::vector<std::vector<smooth::OneFormGerm>> groups;
};

/// Colength of (f, maximal minors of the Jacobian of f). Finite iff V has an
/// isolated singular point (zero when V is smooth at 0).
gb::Colength singular_locus_colength(const ICISGerm& v, const gb::Options& options = {}, CertificateLog* log = nullptr);

/// dim O/(f, (N-n+1)-minors of the matrix stacking df_1, ..., df_{N-n}, omega).
gb::Colength gsv_index_1form(const ICISGerm& v, const smooth::OneFormGerm& w, const gb::Options& options = {},
                             CertificateLog* log = nullptr);

/// dim O/(f, (N-k_i+1)-minors of (df_1, ..., df_{N-n}, omega^(i)_1, ...)).
gb::Colength gsv_index_collection(const ICISGerm& v, const FormCollection& c, const gb::Options& options = {},
                                  CertificateLog* log = nullptr);

struct MilnorResult {
  std::int64_t mu = 0;
  std::uint64_t seed = 0;
  std::uint64_t certifying_seed = 0;
  /// Linear forms of the accepted chain, as integer coefficient rows.
  std::vector<std::vector<int>> slices;
  CertificateLog chain;
};

/// Milnor number by the Lê-Greuel recursion along generic hyperplane slices
/// X_n = V, X_{j-1} = X_j cap {l_{n-j+1} = 0}:
///   mu(X_j) + mu(X_{j-1}) = dim O/(f, l_1..l_{n-j}, maximal minors of (df, dl_1, ..., dl_{n-j+1})),
///   mu(X_0) = dim O/(f, l_1, ..., l_n) - 1.
/// Linear forms have integer coefficients in [-9, 9] drawn from a seeded RNG.
/// A chain with an infinite colength is redrawn (at most 5 draws); the value
/// is recomputed from an independent seed and must agree. Throws
/// GenericityFailure otherwise.
MilnorResult milnor_number(const ICISGerm& v, std::uint64_t seed, const gb::Options& options = {});

/// ind_rad(omega; V, 0) = ind_GSV(omega; V, 0) - mu.
std::int64_t radial_index_1form(const ICISGerm& v, const smooth::OneFormGerm& w, std::uint64_t seed,
                                const gb::Options& options = {});

/// ind_rad(X; V, 0) = ind_GSV(X; V, 0) - (-1)^n mu for a vector field.
std::int64_t radial_index_vf_from_gsv(std::int64_t gsv, std::int64_t mu, std::size_t n);

/// Homological index of a 1-form; coincides with the GSV index on an ICIS.
gb::Colength homological_index_1form(const ICISGerm& v, const smooth::OneFormGerm& w,
                                     const gb::Options& options = {}, CertificateLog* log = nullptr);

enum class Quantity { Gsv, Milnor, Radial, Homological };

struct ICISIndexReport {
  std::optional<std::int64_t> gsv;
  std::optional<std::int64_t> milnor;
  std::optional<std::int64_t> radial;
  std::optional<std::int64_t> homological;
  gb::Colength singular_locus = gb::Colength::finite(0);
  bool gsv_isolated = true;
  std::vector<std::vector<int>> milnor_slices;
  CertificateLog certificates;
  std::vector<std::string> notes;

  /// Re-asserts radial = gsv - milnor and homological = gsv.
  void check() const;
};

/// Computes the requested quantities for a 1-form on V. Radial implies GSV
/// and Milnor. When the GSV colength is infinite the report carries
/// gsv_isolated = false and no numeric values.
ICISIndexReport icis_report(const ICISGerm& v, const smooth::OneFormGerm& w, const std::vector<Quantity>& wants,
                            std::uint64_t seed, const gb::Options& options = {});

}  // namespace singindex::icis
