#include "singindex/error.hpp"
#include "singindex/strat.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace singindex;
using namespace singindex::strat;
using namespace singindex::testing;

namespace {

struct RandomPoset {
  StratPoset poset;
  IntMatrix n;
};

// Random order on k strata consistent with index order; optionally with a top.
RandomPoset random_poset(Rng& rng, std::size_t k, bool with_top) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("V" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (uniform(rng, 0, 2) == 0) rel.emplace_back(i, j);
  if (with_top)
    for (std::size_t i = 0; i + 1 < k; ++i) rel.emplace_back(i, k - 1);
  StratPoset p(labels, rel);
  IntMatrix n(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i == j) n[i][j] = 1;
      else if (p.less(i, j)) n[i][j] = uniform(rng, -5, 5);
  return {p, n};
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t k = a.size();
  IntMatrix c(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) c[i][l] += a[i][j] * b[j][l];
  return c;
}

IntMatrix identity(std::size_t k) {
  IntMatrix id(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
  return id;
}

std::vector<std::int64_t> random_vector(Rng& rng, std::size_t k) {
  std::vector<std::int64_t> v(k);
  for (auto& x : v) x = uniform(rng, -20, 20);
  return v;
}

}  // namespace

TEST(StratPoset, TransitiveClosureAndTop) {
  StratPoset p({"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.less(2, 0));
  EXPECT_EQ(p.top(), 2);
  StratPoset anti({"a", "b"}, {});
  EXPECT_EQ(anti.top(), -1);
  EXPECT_THROW(StratPoset({"a", "b"}, {{0, 1}, {1, 0}}), RejectedInput);
}

TEST(StratPoset, LinearExtensionIsDeterministic) {
  StratPoset p({"c", "a", "b"}, {});
  EXPECT_EQ(p.linear_extension(), (std::vector<std::size_t>{1, 2, 0}));
  StratPoset q({"c", "a", "b"}, {{0, 1}});
  const auto& ext = q.linear_extension();
  EXPECT_LT(std::find(ext.begin(), ext.end(), 0) - ext.begin(), std::find(ext.begin(), ext.end(), 1) - ext.begin());
}

TEST(Mobius, Examples) {
  StratPoset anti({"a", "b", "c"}, {});
  EXPECT_EQ(mobius_inverse(SliceData(anti, identity(3))), identity(3));
  for (int a : {-3, 0, 1, 7}) {
    const auto m = mobius_inverse(SliceData(StratPoset::chain({"0", "1"}), {{1, a}, {0, 1}}));
    EXPECT_EQ(m[0][1], -a);
  }
}

TEST(Mobius, Errors) {
  const auto chain = StratPoset::chain({"0", "1"});
  EXPECT_THROW(SliceData(chain, IntMatrix{{2, 1}, {0, 1}}), RejectedInput);
  StratPoset anti({"a", "b"}, {});
  EXPECT_THROW(SliceData(anti, IntMatrix{{1, 4}, {0, 1}}), RejectedInput);
}

TEST(Mobius, RandomPosetsInvertBothSides) {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const auto k = static_cast<std::size_t>(uniform(rng, 1, 7));
    const auto rp = random_poset(rng, k, false);
    const auto m = mobius_inverse(SliceData(rp.poset, rp.n));
    EXPECT_EQ(product(rp.n, m), identity(k));
    EXPECT_EQ(product(m, rp.n), identity(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!rp.poset.leq(i, j)) EXPECT_EQ(m[i][j], 0);
  }
}

TEST(Determinantal, ClosedFormValues) {
  EXPECT_EQ(det_n(3, 4, 2, 2), 1);
  EXPECT_EQ(det_n(2, 2, 1, 2), 1);
  EXPECT_EQ(det_n(2, 3, 1, 2), -1);
  EXPECT_EQ(det_n(3, 3, 1, 3), 1);
  EXPECT_EQ(det_n(3, 4, 1, 3), 1);
  EXPECT_EQ(det_n(3, 4, 1, 2), -2);
  EXPECT_EQ(det_m(2, 2, 1, 2), -1);
  EXPECT_EQ(det_m(2, 3, 1, 2), 1);
  EXPECT_THROW(det_n(2, 2, 2, 1), RejectedInput);
  EXPECT_THROW(det_n(2, 3, 1, 3), RejectedInput);
  EXPECT_THROW(det_n(2, 2, 0, 1), RejectedInput);
}

TEST(Determinantal, PairIsMutuallyInverse) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const int top = std::min(m, n);
      for (int i = 1; i <= top; ++i)
        for (int k = i; k <= top; ++k) {
          std::int64_t s = 0;
          for (int j = i; j <= k; ++j) s += det_n(m, n, i, j) * det_m(m, n, j, k);
          EXPECT_EQ(s, i == k ? 1 : 0) << m << "," << n << "," << i << "," << k;
        }
    }
}

TEST(Determinantal, MobiusOfSliceDataMatchesClosedForm) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 5}, {4, 4}})
    for (int t = 1; t <= std::min(m, n); ++t) {
      const auto d = determinantal_slice_data(m, n, t);
      const auto inv = mobius_inverse(d);
      for (int i = 1; i <= t; ++i)
        for (int j = i; j <= t; ++j)
          EXPECT_EQ(inv[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)], det_m(m, n, i, j));
    }
}

TEST(RadialFromEu, Examples) {
  const SliceData single(StratPoset::chain({"V"}), {{1}});
  EXPECT_EQ(radial_from_eu(single, {IndexKind::EulerObstruction, {5}}), 5);
  const SliceData two(StratPoset::chain({"0", "1"}), {{1, 1}, {0, 1}});
  EXPECT_EQ(radial_from_eu(two, {IndexKind::EulerObstruction, {3, 4}}), 7);
  EXPECT_THROW(radial_from_eu(two, {IndexKind::Radial, {3, 4}}), RejectedInput);
  EXPECT_THROW(radial_from_eu(two, {IndexKind::EulerObstruction, {3}}), RejectedInput);
}

TEST(EuFromRadial, SingleStratumIsIdentity) {
  const SliceData single(StratPoset::chain({"V"}), {{1}});
  for (int k : {-4, 0, 1, 9}) EXPECT_EQ(eu_from_radial(single, {IndexKind::Radial, {k}}), k);
}

TEST(EuFromRadial, RequiresTop) {
  StratPoset anti({"a", "b"}, {});
  EXPECT_THROW(eu_from_radial(SliceData(anti, identity(2)), {IndexKind::Radial, {1, 2}}), RejectedInput);
}

TEST(EuFromRadial, RoundTripOnRandomPosets) {
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    const auto k = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto rp = random_poset(rng, k, true);
    const SliceData d(rp.poset, rp.n);
    const IndexVector eu{IndexKind::EulerObstruction, random_vector(rng, k)};
    const auto rad = radial_vector_from_eu(d, eu);
    EXPECT_EQ(rad.kind, IndexKind::Radial);
    EXPECT_EQ(rad.values.back(), radial_from_eu(d, eu));
    EXPECT_EQ(eu_vector_from_radial(d, rad).values, eu.values);
    EXPECT_EQ(eu_from_radial(d, rad), eu.values.back());
  }
}

TEST(EuFromRadial, DeterminantalConsistencyWithPHN) {
  // With PHN indices p_i and chibar = 0 on every stratum, the radial indices
  // of the stratum closures are sum_i n_ik p_i; Eu recovered from them must
  // reassemble to the same top radial index.
  const int m = 3, n = 3, t = 3;
  const auto d = determinantal_slice_data(m, n, t);
  const std::vector<std::int64_t> phn{2, -1, 4};
  std::vector<std::int64_t> rad;
  for (int k = 1; k <= t; ++k) {
    std::vector<std::int64_t> col;
    for (int i = 1; i <= k; ++i) col.push_back(det_n(m, n, i, k));
    rad.push_back(radial_from_phn(k, col, {IndexKind::PHN, {phn.begin(), phn.begin() + k}}, 2 * k, 0));
  }
  const IndexVector radv{IndexKind::Radial, rad};
  const auto eu = eu_vector_from_radial(d, radv);
  EXPECT_EQ(radial_from_eu(d, eu), rad.back());
  EXPECT_EQ(eu.values, phn);
}

TEST(PHN, Examples) {
  EXPECT_EQ(radial_from_phn(1, {1}, {IndexKind::PHN, {7}}, 2, 0), 7);
  // rad = phn + (-1)^{dim-1} chibar, so phn = rad + (-1)^{dim} chibar.
  for (int dim : {1, 2, 3}) {
    const auto rad = radial_from_phn(1, {1}, {IndexKind::PHN, {5}}, dim, 3);
    EXPECT_EQ(phn_from_radial(1, {1}, {IndexKind::Radial, {rad}}, {3}, {dim}), 5);
  }
  const auto n12 = det_n(2, 2, 1, 2);
  const std::int64_t p1 = 3, p2 = -2, chibar = 4;
  const int dim_v = 3;
  EXPECT_EQ(radial_from_phn(2, {n12, 1}, {IndexKind::PHN, {p1, p2}}, dim_v, chibar), n12 * p1 + p2 + chibar);
  EXPECT_THROW(radial_from_phn(2, {n12, 1}, {IndexKind::Radial, {p1, p2}}, dim_v, chibar), RejectedInput);
  EXPECT_THROW(radial_from_phn(2, {n12}, {IndexKind::PHN, {p1, p2}}, dim_v, chibar), RejectedInput);
}

TEST(PHN, ZeroChibarIsPureMobius) {
  const auto d = determinantal_slice_data(2, 3, 2);
  const auto m = mobius_inverse(d);
  const std::vector<std::int64_t> rad{4, -3};
  EXPECT_EQ(phn_from_radial(2, {m[0][1], m[1][1]}, {IndexKind::Radial, rad}, {0, 0}, {4, 6}), m[0][1] * 4 + m[1][1] * -3);
}

TEST(PHN, RoundTripOnDeterminantalChains) {
  Rng rng(5);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}})
    for (int trial = 0; trial < 10; ++trial) {
      const int t = uniform(rng, 1, std::min(m, n));
      const auto phn = random_vector(rng, static_cast<std::size_t>(t));
      std::vector<std::int64_t> chibars, rad;
      std::vector<int> dims;
      for (int k = 1; k <= t; ++k) {
        chibars.push_back(uniform(rng, -6, 6));
        dims.push_back(k * (m + n - k));
        std::vector<std::int64_t> col;
        for (int i = 1; i <= k; ++i) col.push_back(det_n(m, n, i, k));
        rad.push_back(radial_from_phn(k, col, {IndexKind::PHN, {phn.begin(), phn.begin() + k}}, dims.back(),
                                      chibars.back()));
      }
      std::vector<std::int64_t> mcol;
      for (int i = 1; i <= t; ++i) mcol.push_back(det_m(m, n, i, t));
      EXPECT_EQ(phn_from_radial(t, mcol, {IndexKind::Radial, rad}, chibars, dims), phn.back());
    }
}

TEST(Proportionality, Examples) {
  EXPECT_TRUE(proportionality_check(1, 4, 4));
  EXPECT_TRUE(proportionality_check(2, 3, 6));
  EXPECT_FALSE(proportionality_check(2, 3, 5));
}
