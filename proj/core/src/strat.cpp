#include "singindex/strat.hpp"

#include "singindex/error.hpp"

#include <algorithm>

namespace singindex::strat {

StratPoset::StratPoset(std::vector<std::string> labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw RejectedInput("poset has no strata");
  less_.assign(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : relations) {
    if (i >= n || j >= n) throw RejectedInput("cover relation refers to an unknown stratum");
    if (i == j) throw RejectedInput("cover relation (" + std::to_string(i) + "," + std::to_string(i) + ") is reflexive");
    less_[i][j] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (less_[i][i]) throw RejectedInput("strata relations contain a cycle through '" + labels_[i] + "'");

  // Kahn's algorithm picking the smallest (label, index) available stratum.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less_[i][j]) ++indegree[j];
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || indegree[i] != 0) continue;
      if (pick == n || labels_[i] < labels_[pick]) pick = i;
    }
    done[pick] = true;
    extension_.push_back(pick);
    for (std::size_t j = 0; j < n; ++j)
      if (less_[pick][j]) --indegree[j];
  }
}

StratPoset StratPoset::chain(std::vector<std::string> labels) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) rel.emplace_back(i, i + 1);
  return StratPoset(std::move(labels), rel);
}

std::ptrdiff_t StratPoset::top() const {
  for (std::size_t q = 0; q < size(); ++q) {
    bool all_below = true;
    for (std::size_t i = 0; i < size() && all_below; ++i) all_below = leq(i, q);
    if (all_below) return static_cast<std::ptrdiff_t>(q);
  }
  return -1;
}

SliceData::SliceData(StratPoset poset, IntMatrix values) : poset_(std::move(poset)), values_(std::move(values)) {
  const std::size_t n = poset_.size();
  if (values_.size() != n) throw RejectedInput("slice data must be a square matrix over the strata");
  for (std::size_t i = 0; i < n; ++i) {
    if (values_[i].size() != n) throw RejectedInput("slice data must be a square matrix over the strata");
    if (values_[i][i] != 1)
      throw RejectedInput("n_ii must be 1 (stratum '" + poset_.labels()[i] + "' has " + std::to_string(values_[i][i]) + ")");
    for (std::size_t j = 0; j < n; ++j)
      if (!poset_.leq(i, j) && values_[i][j] != 0)
        throw RejectedInput("n_ij given for incomparable strata (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

IntMatrix mobius_inverse(const SliceData& d) {
  const auto& poset = d.poset();
  const std::size_t n = poset.size();
  const auto& order = poset.linear_extension();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  // For fixed k, solve sum_{i <= j <= k} n_ij m_jk = delta_ik top-down in i.
  for (std::size_t k = 0; k < n; ++k) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t i = *it;
      if (!poset.leq(i, k)) continue;
      std::int64_t acc = i == k ? 1 : 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && poset.leq(i, j) && poset.leq(j, k)) acc -= d(i, j) * m[j][k];
      m[i][k] = acc;  // n_ii = 1
    }
  }
  return m;
}

namespace {

void require(const IndexVector& v, IndexKind kind, std::size_t size, const char* what) {
  if (v.kind != kind) throw RejectedInput(std::string(what) + ": index vector has the wrong tag");
  if (v.values.size() != size) throw RejectedInput(std::string(what) + ": index vector has the wrong length");
}

std::size_t require_top(const StratPoset& p) {
  const auto q = p.top();
  if (q < 0) throw RejectedInput("the poset has no top stratum (V must be irreducible)");
  return static_cast<std::size_t>(q);
}

}  // namespace

std::int64_t radial_from_eu(const SliceData& d, const IndexVector& eu) {
  require(eu, IndexKind::EulerObstruction, d.poset().size(), "radial_from_eu");
  const std::size_t q = require_top(d.poset());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.poset().size(); ++i) sum += d(i, q) * eu.values[i];
  return sum;
}

IndexVector radial_vector_from_eu(const SliceData& d, const IndexVector& eu) {
  const std::size_t n = d.poset().size();
  require(eu, IndexKind::EulerObstruction, n, "radial_vector_from_eu");
  IndexVector rad{IndexKind::Radial, std::vector<std::int64_t>(n, 0)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (d.poset().leq(i, k)) rad.values[k] += d(i, k) * eu.values[i];
  return rad;
}

std::int64_t eu_from_radial(const SliceData& d, const IndexVector& rad) {
  require(rad, IndexKind::Radial, d.poset().size(), "eu_from_radial");
  const std::size_t q = require_top(d.poset());
  const IntMatrix m = mobius_inverse(d);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.poset().size(); ++i) sum += m[i][q] * rad.values[i];
  return sum;
}

IndexVector eu_vector_from_radial(const SliceData& d, const IndexVector& rad) {
  const std::size_t n = d.poset().size();
  require(rad, IndexKind::Radial, n, "eu_vector_from_radial");
  const IntMatrix m = mobius_inverse(d);
  IndexVector eu{IndexKind::EulerObstruction, std::vector<std::int64_t>(n, 0)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (d.poset().leq(i, k)) eu.values[k] += m[i][k] * rad.values[i];
  return eu;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void require_det_range(int m, int n, int i, int j) {
  if (m < 1 || n < 1 || i < 1 || i > j || j > std::min(m, n))
    throw RejectedInput("determinantal indices need 1 <= i <= j <= min(m, n)");
}

}  // namespace

std::int64_t det_n(int m, int n, int i, int j) {
  require_det_range(m, n, i, j);
  const int sign = ((m + n) * (j - i)) % 2 == 0 ? 1 : -1;
  return sign * binomial(m - i, m - j);
}

std::int64_t det_m(int m, int n, int i, int j) {
  require_det_range(m, n, i, j);
  const int sign = ((m + n + 1) * (j - i)) % 2 == 0 ? 1 : -1;
  return sign * binomial(m - i, m - j);
}

SliceData determinantal_slice_data(int m, int n, int t) {
  if (t < 1 || t > std::min(m, n)) throw RejectedInput("determinantal t must lie in 1..min(m, n)");
  std::vector<std::string> labels;
  for (int i = 1; i <= t; ++i) labels.push_back("V" + std::to_string(i));
  StratPoset poset = StratPoset::chain(std::move(labels));
  IntMatrix vals(static_cast<std::size_t>(t), std::vector<std::int64_t>(static_cast<std::size_t>(t), 0));
  for (int i = 1; i <= t; ++i)
    for (int j = i; j <= t; ++j) vals[i - 1][j - 1] = det_n(m, n, i, j);
  return SliceData(std::move(poset), std::move(vals));
}

std::int64_t radial_from_phn(int t, const std::vector<std::int64_t>& nvals, const IndexVector& phn, int dim_v,
                             std::int64_t chibar) {
  if (t < 1) throw RejectedInput("t must be positive");
  require(phn, IndexKind::PHN, static_cast<std::size_t>(t), "radial_from_phn");
  if (nvals.size() != static_cast<std::size_t>(t)) throw RejectedInput("radial_from_phn: need t values n_{it}");
  std::int64_t sum = 0;
  for (int i = 0; i < t; ++i) sum += nvals[i] * phn.values[i];
  return sum + ((dim_v - 1) % 2 == 0 ? chibar : -chibar);
}

std::int64_t phn_from_radial(int t, const std::vector<std::int64_t>& mvals, const IndexVector& rad,
                             const std::vector<std::int64_t>& chibars, const std::vector<int>& dims) {
  if (t < 1) throw RejectedInput("t must be positive");
  const auto ut = static_cast<std::size_t>(t);
  require(rad, IndexKind::Radial, ut, "phn_from_radial");
  if (mvals.size() != ut || chibars.size() != ut || dims.size() != ut)
    throw RejectedInput("phn_from_radial: m-values, chibar and dims need length t");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < ut; ++i) {
    const std::int64_t corrected = rad.values[i] + (dims[i] % 2 == 0 ? chibars[i] : -chibars[i]);
    sum += mvals[i] * corrected;
  }
  return sum;
}

bool proportionality_check(std::int64_t eu_v, std::int64_t local, std::int64_t claimed) {
  return claimed == eu_v * local;
}

}  // namespace singindex::strat
