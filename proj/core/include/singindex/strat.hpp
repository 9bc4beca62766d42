#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace singindex::strat {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Finite poset of strata: i < j means V_i lies in the closure of V_j.
/// Built from cover (or any order) relations; the transitive closure is kept.
class StratPoset {
 public:
  StratPoset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  /// Chain 0 < 1 < ... < size-1.
  static StratPoset chain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
  bool leq(std::size_t i, std::size_t j) const { return i == j || less_[i][j]; }
  /// Unique maximal element, if any.
  std::ptrdiff_t top() const;
  /// Stable topological order; ties resolved by label, then index.
  const std::vector<std::size_t>& linear_extension() const noexcept { return extension_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> less_;
  std::vector<std::size_t> extension_;
};

/// Incidence function n_ij on comparable pairs, n_ii = 1, 0 elsewhere.
class SliceData {
 public:
  /// Throws RejectedInput if a diagonal entry differs from 1 or an
  /// incomparable pair carries a non-zero value.
  SliceData(StratPoset poset, IntMatrix values);

  const StratPoset& poset() const noexcept { return poset_; }
  const IntMatrix& values() const noexcept { return values_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return values_[i][j]; }

 private:
  StratPoset poset_;
  IntMatrix values_;
};

enum class IndexKind { Radial, EulerObstruction, PHN };

struct IndexVector {
  IndexKind kind;
  std::vector<std::int64_t> values;
};

/// The unique m with sum_{i <= j <= k} n_ij m_jk = delta_ik.
IntMatrix mobius_inverse(const SliceData& d);

/// ind_rad(omega; V, 0) = sum_i n_{i,top} Eu(omega; closure V_i, 0).
std::int64_t radial_from_eu(const SliceData& d, const IndexVector& eu);

/// Radial index of every stratum closure: rad_k = sum_{i <= k} n_ik Eu_i.
IndexVector radial_vector_from_eu(const SliceData& d, const IndexVector& eu);

/// Eu(omega; V, 0) = sum_i m_{i,top} ind_rad(omega; closure V_i, 0).
std::int64_t eu_from_radial(const SliceData& d, const IndexVector& rad);

/// Local Euler obstruction of every stratum closure, inverse of radial_vector_from_eu.
IndexVector eu_vector_from_radial(const SliceData& d, const IndexVector& rad);

/// ind_rad(dl; M^{j-i+1}_{m-i+1,n-i+1}, 0) = (-1)^{(m+n)(j-i)} C(m-i, m-j), 1 <= i <= j <= min(m,n).
std::int64_t det_n(int m, int n, int i, int j);

/// Its Moebius inverse (-1)^{(m+n+1)(j-i)} C(m-i, m-j).
std::int64_t det_m(int m, int n, int i, int j);

/// Chain of strata V_1 < ... < V_t of the determinantal variety M^t_{m,n}
/// with n_ij = det_n(m, n, i, j). Strata are 0-based in the result.
SliceData determinantal_slice_data(int m, int n, int t);

/// sum_i n_{it} phn_i + (-1)^{dimV - 1} chibar, with nvals = (n_{1t}, ..., n_{tt}).
std::int64_t radial_from_phn(int t, const std::vector<std::int64_t>& nvals, const IndexVector& phn, int dim_v,
                             std::int64_t chibar);

/// sum_i m_{it} (rad_i + (-1)^{dim V_i} chibar_i), with mvals = (m_{1t}, ..., m_{tt}).
std::int64_t phn_from_radial(int t, const std::vector<std::int64_t>& mvals, const IndexVector& rad,
                             const std::vector<std::int64_t>& chibars, const std::vector<int>& dims);

/// Eu(V, x) * local index == claimed.
bool proportionality_check(std::int64_t eu_v, std::int64_t local, std::int64_t claimed);

std::int64_t binomial(int n, int k);

}  // namespace singindex::strat
