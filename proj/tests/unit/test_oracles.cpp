#include "singindex/oracle/boundary_degree.hpp"
#include "singindex/oracle/gset.hpp"
#include "singindex/oracle/macaulay.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace singindex;
using namespace singindex::oracle;
using namespace singindex::testing;

TEST(MacaulayOracle, MonomialIdeals) {
  auto c = vars({"x", "y", "z"});
  EXPECT_EQ(macaulay_colength(Ps(c, {"x", "y", "z"})), std::optional<std::size_t>(1));
  EXPECT_EQ(macaulay_colength(Ps(c, {"x^2", "y^3", "z"})), std::optional<std::size_t>(6));
  EXPECT_EQ(macaulay_colength(Ps(c, {"x^2", "y^2", "z^2"})), std::optional<std::size_t>(8));
  EXPECT_EQ(macaulay_colength(Ps(c, {"x^2", "x*y", "y^2", "z"})), std::optional<std::size_t>(3));
}

TEST(MacaulayOracle, TruncationIsMonotoneAndStabilises) {
  auto c = vars({"x", "y"});
  const auto gens = Ps(c, {"x^2 + y^3", "x*y"});
  std::size_t prev = 0;
  for (unsigned d = 1; d <= 8; ++d) {
    const auto v = truncated_colength(gens, d);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_EQ(truncated_colength(gens, 1), 1u);
  EXPECT_EQ(truncated_colength(gens, 8), 5u);
}

TEST(MacaulayOracle, NonIsolatedKeepsGrowing) {
  auto c = vars({"x", "y"});
  EXPECT_FALSE(macaulay_colength(Ps(c, {"x*y"}), 12).has_value());
}

TEST(MacaulayOracle, UnitIdealIsZero) {
  auto c = vars({"x", "y"});
  EXPECT_EQ(macaulay_colength(Ps(c, {"1 + x", "y"})), std::optional<std::size_t>(0));
}

TEST(MacaulayOracle, TranslatedPoint) {
  auto c = vars({"x", "y"});
  const auto gens = Ps(c, {"(x - 1)^2", "y*(y - 2)"});
  EXPECT_EQ(macaulay_colength_at(gens, {Rational(1), Rational(0)}), std::optional<std::size_t>(2));
  EXPECT_EQ(macaulay_colength_at(gens, {Rational(1), Rational(2)}), std::optional<std::size_t>(2));
  EXPECT_EQ(macaulay_colength_at(gens, {Rational(0), Rational(0)}), std::optional<std::size_t>(0));
}

TEST(BoundaryDegreeOracle, PlanarExamples) {
  auto c = vars({"x", "y"});
  const Rational eps(1, 8);
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x", "y"}), eps), std::optional<int>(1));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x", "-y"}), eps), std::optional<int>(-1));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x^2", "y"}), eps), std::optional<int>(0));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x^3", "y"}), eps), std::optional<int>(1));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x^2 - y^2", "2*x*y"}), eps), std::optional<int>(2));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x^2 - y^2", "-2*x*y"}), eps), std::optional<int>(-2));
}

TEST(BoundaryDegreeOracle, PowersOfZ) {
  Context rc;
  auto c = vars({"z"});
  for (int k = 1; k <= 4; ++k) {
    const auto parts = realify(Ps(c, {"z^" + std::to_string(k)}), rc);
    EXPECT_EQ(stable_boundary_degree({parts[0].re, parts[0].im}, Rational(1, 8)), std::optional<int>(k));
  }
}

TEST(BoundaryDegreeOracle, SpatialExamples) {
  auto c = vars({"x", "y", "z"});
  const Rational eps(1, 8);
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x", "y", "z"}), eps), std::optional<int>(1));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x", "y^3", "-z"}), eps), std::optional<int>(-1));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"x^2", "y", "z"}), eps), std::optional<int>(0));
  EXPECT_EQ(stable_boundary_degree(Ps(c, {"-x", "-y", "-z"}), eps), std::optional<int>(-1));
}

TEST(GSetOracle, CosetSpacesAreTransitive) {
  burnside::FiniteGroup s3(3, {{1, 0, 2}, {1, 2, 0}});
  for (const auto& h : all_subgroups(s3)) {
    const auto set = coset_space(s3, h);
    EXPECT_EQ(set.points * h.size(), s3.order());
    std::vector<bool> reached(set.points, false);
    for (std::size_t g = 0; g < s3.order(); ++g) reached[set.action[g][0]] = true;
    EXPECT_TRUE(std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }));
  }
}

TEST(GSetOracle, ActionIsAHomomorphism) {
  burnside::FiniteGroup d4(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  const auto subs = all_subgroups(d4);
  const auto set = product(coset_space(d4, subs[1]), coset_space(d4, subs[2]));
  for (std::size_t a = 0; a < d4.order(); ++a)
    for (std::size_t b = 0; b < d4.order(); ++b)
      for (std::size_t x = 0; x < set.points; ++x)
        EXPECT_EQ(set.action[d4.multiply(a, b)][x], set.action[a][set.action[b][x]]);
}

TEST(GSetOracle, OrbitCountsOfProducts) {
  burnside::FiniteGroup z2(2, {{1, 0}});
  const auto classes = conjugacy_classes_of_subgroups(z2);
  ASSERT_EQ(classes.size(), 2u);
  std::vector<burnside::ElementSet> reps{classes[0].front(), classes[1].front()};
  const auto free = coset_space(z2, reps[0]);
  EXPECT_EQ(orbit_type_counts(z2, product(free, free), reps), (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(orbit_type_counts(z2, disjoint_union(free, coset_space(z2, reps[1])), reps),
            (std::vector<std::int64_t>{1, 1}));
}

TEST(GSetOracle, SubgroupCounts) {
  burnside::FiniteGroup s4(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  EXPECT_EQ(all_subgroups(s4).size(), 30u);
  EXPECT_EQ(conjugacy_classes_of_subgroups(s4).size(), 11u);
  burnside::FiniteGroup z4(4, {{1, 2, 3, 0}});
  EXPECT_EQ(all_subgroups(z4).size(), 3u);
}

TEST(GSetOracle, InductionSize) {
  burnside::FiniteGroup s3(3, {{1, 0, 2}, {1, 2, 0}});
  burnside::FiniteGroup tau(3, {{1, 0, 2}});
  const auto emb = s3.embedding_of(tau);
  const auto pt = coset_space(tau, {0, 1});
  EXPECT_EQ(induce(s3, emb, pt).points, 3u);
  EXPECT_EQ(induce(s3, emb, coset_space(tau, {0})).points, 6u);
  EXPECT_EQ(restrict_to(coset_space(s3, {0}), emb).points, 6u);
}

TEST(DescartesOracle, DiagonalAndHyperbolic) {
  const auto h = descartes_inertia(RationalMatrix(2, 2, {0, 1, 1, 0}));
  EXPECT_EQ(h.positive, 1);
  EXPECT_EQ(h.negative, 1);
  const auto d = descartes_inertia(RationalMatrix(3, 3, {2, 0, 0, 0, 0, 0, 0, 0, -5}));
  EXPECT_EQ(d.positive, 1);
  EXPECT_EQ(d.negative, 1);
  EXPECT_EQ(d.zero, 1);
}
