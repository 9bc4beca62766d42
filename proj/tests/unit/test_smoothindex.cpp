#include "singindex/error.hpp"
#include "singindex/linear_action.hpp"
#include "singindex/oracle/boundary_degree.hpp"
#include "singindex/oracle/macaulay.hpp"
#include "singindex/smooth_index.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace singindex;
using namespace singindex::smooth;
using namespace singindex::testing;

namespace {

VectorFieldGerm vf(const Context& c, std::vector<std::string> comps, GroundField f = GroundField::Complex) {
  return VectorFieldGerm{Ps(c, comps), f};
}

VectorFieldGerm real_vf(const Context& c, std::vector<std::string> comps) { return vf(c, comps, GroundField::Real); }

OneFormGerm form(const Context& c, std::vector<std::string> coeffs) { return OneFormGerm{Ps(c, coeffs)}; }

PolyMatrix column(const Context& c, std::vector<std::string> entries) {
  const auto n = entries.size();
  return PolyMatrix(n, 1, Ps(c, entries));
}

// Holomorphic F viewed as a real map of C^n = R^{2n}, components interleaved.
VectorFieldGerm realified_field(const std::vector<Polynomial>& fs) {
  Context rc;
  const auto parts = realify(fs, rc);
  VectorFieldGerm out{{}, GroundField::Real};
  for (const auto& p : parts) {
    out.components.push_back(p.re);
    out.components.push_back(p.im);
  }
  return out;
}

// Re(sum A_k dz_k) = sum Re A_k dx_k - Im A_k dy_k.
VectorFieldGerm real_part_form(const std::vector<Polynomial>& as) {
  Context rc;
  const auto parts = realify(as, rc);
  VectorFieldGerm out{{}, GroundField::Real};
  for (const auto& p : parts) {
    out.components.push_back(p.re);
    out.components.push_back(-p.im);
  }
  return out;
}

RationalMatrix mat(std::size_t n, std::vector<int> entries) {
  std::vector<Rational> e(entries.begin(), entries.end());
  return RationalMatrix(n, n, e);
}

long oracle_signature(const RationalMatrix& m) {
  const auto in = descartes_inertia(m);
  return in.positive - in.negative;
}

}  // namespace

TEST(Palamodov, Examples) {
  auto c = vars({"z1", "z2"});
  EXPECT_EQ(palamodov_index(vf(c, {"z1", "z2"})).index(), 1);
  EXPECT_EQ(palamodov_index(vf(c, {"z1^2", "z2^3"})).index(), 6);
  EXPECT_EQ(palamodov_index(vf(c, {"z1^2 - z2", "z2^2"})).index(), 4);
  EXPECT_EQ(oracle::macaulay_colength(Ps(c, {"z1^2 - z2", "z2^2"})), std::optional<std::size_t>(4));
}

TEST(Palamodov, NonIsolatedAndNonsingular) {
  auto c = vars({"z1", "z2"});
  const auto r = palamodov_index(vf(c, {"z1*z2", "z1*z2"}));
  EXPECT_EQ(r.status, PointStatus::NotIsolated);
  EXPECT_THROW(r.index(), NotIsolated);
  const auto ns = palamodov_index(vf(c, {"1 + z1", "z2"}));
  EXPECT_EQ(ns.status, PointStatus::Nonsingular);
  EXPECT_EQ(ns.index(), 0);
}

TEST(Palamodov, ComponentCountMustMatch) {
  auto c = vars({"z1", "z2"});
  EXPECT_THROW(palamodov_index(vf(c, {"z1"})), RejectedInput);
}

TEST(ELK, Examples) {
  auto c = vars({"x", "y"});
  EXPECT_EQ(elk_index(real_vf(c, {"x", "y"})).index(), 1);
  EXPECT_EQ(elk_index(real_vf(c, {"x^2 - y^2", "2*x*y"})).index(), 2);
  const auto r = elk_index(real_vf(c, {"x^3", "y"}));
  EXPECT_EQ(r.index(), 1);
  EXPECT_EQ(r.colength.value(), 3u);
}

TEST(ELK, AgreesWithBoundaryDegreeOracle) {
  auto c = vars({"x", "y"});
  for (const auto& comps : std::vector<std::vector<std::string>>{
           {"x", "y"}, {"x^2 - y^2", "2*x*y"}, {"x^3", "y"}, {"x^2", "y"}, {"x", "-y"}, {"x^3 - 3*x*y^2", "-3*x^2*y + y^3"}}) {
    const auto f = real_vf(c, comps);
    const auto deg = oracle::stable_boundary_degree(f.components, Rational(1, 8));
    ASSERT_TRUE(deg.has_value()) << comps[0];
    EXPECT_EQ(elk_index(f).index(), *deg) << comps[0] << ", " << comps[1];
  }
  auto c3 = vars({"x", "y", "z"});
  const auto f3 = real_vf(c3, {"x", "y^3", "-z"});
  EXPECT_EQ(elk_index(f3).index(), *oracle::stable_boundary_degree(f3.components, Rational(1, 8)));
}

TEST(ELK, RequiresRealField) {
  auto c = vars({"x", "y"});
  EXPECT_THROW(elk_index(vf(c, {"x", "y"})), RejectedInput);
}

TEST(ELK, GramSymmetricAndNondegenerate) {
  auto c = vars({"x", "y"});
  for (const auto& comps : std::vector<std::vector<std::string>>{{"x^2 + y^3", "x*y"}, {"x^3", "y^2"}, {"x^2 - y^3", "y^4"}}) {
    const auto e = elk_form(real_vf(c, comps));
    EXPECT_TRUE(e.gram.is_symmetric());
    EXPECT_NE(e.gram.determinant(), 0);
    Rational phi_j = 0;
    for (std::size_t i = 0; i < e.functional.size(); ++i) phi_j += e.functional[i] * e.jacobian_class[i];
    EXPECT_EQ(phi_j, Rational(static_cast<long>(e.algebra.dimension())));
    EXPECT_EQ(symmetric_signature(e.gram).signature(), oracle_signature(e.gram));
  }
}

TEST(ELK, PalamodovEqualsELKForPositiveDefiniteGradient) {
  auto c = vars({"x", "y", "z"});
  const auto grad = Ps(c, {"2*x + y", "x + 2*y", "2*z"});
  EXPECT_EQ(palamodov_index(VectorFieldGerm{grad}).index(), 1);
  EXPECT_EQ(elk_index(VectorFieldGerm{grad, GroundField::Real}).index(), 1);
}

TEST(ELK, RealificationOfHolomorphicSystemIsColength) {
  const std::vector<std::vector<std::string>> systems{
      {"z1^2", "z2"}, {"z1^2 - z2^2", "z1*z2"}, {"z1^3", "z2^2"}, {"z1^2 + z2^3", "z1*z2"}, {"z1^2 - z2", "z2^2"},
      {"z1 + z2^2", "z2^3"}};
  auto c = vars({"z1", "z2"});
  int checked = 0;
  for (const auto& s : systems) {
    const auto fs = Ps(c, s);
    const auto mu = palamodov_index(VectorFieldGerm{fs});
    ASSERT_LE(mu.index(), 8);
    EXPECT_EQ(elk_index(realified_field(fs)).index(), mu.index()) << s[0] << ", " << s[1];
    ++checked;
  }
  auto c1 = vars({"z"});
  for (int k = 1; k <= 4; ++k) {
    const auto fs = Ps(c1, {"z^" + std::to_string(k)});
    EXPECT_EQ(elk_index(realified_field(fs)).index(), k);
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(ELK, RealPartOfHolomorphicFormHasSignMinusOneToTheN) {
  auto c1 = vars({"z"});
  const auto w = Ps(c1, {"z"});
  EXPECT_EQ(complex_form_index(OneFormGerm{w}).index(), 1);
  EXPECT_EQ(elk_index(real_part_form(w)).index(), -1);
  EXPECT_EQ(real_part_index(1, 1), -1);

  auto c2 = vars({"z1", "z2"});
  for (const auto& s : std::vector<std::vector<std::string>>{{"z1", "z2"}, {"z1^2", "z2"}, {"z1^2 + z2^3", "z1*z2"}}) {
    const auto as = Ps(c2, s);
    const auto ci = complex_form_index(OneFormGerm{as}).index();
    EXPECT_EQ(elk_index(real_part_form(as)).index(), real_part_index(ci, 2));
  }
  auto c3 = vars({"z1", "z2", "z3"});
  const auto as = Ps(c3, {"z1", "z2^2", "z3"});
  EXPECT_EQ(elk_index(real_part_form(as)).index(), -2);
  EXPECT_EQ(real_part_index(2, 3), -2);
}

TEST(ELK, SignatureIndependentOfFunctional) {
  Rng rng(31);
  auto c = vars({"x", "y"});
  for (const auto& comps : std::vector<std::vector<std::string>>{
           {"x^3", "y"}, {"x^2 - y^2", "2*x*y"}, {"x^2 + y^3", "x*y"}, {"x^3 - 3*x*y^2", "y^2 - x"}}) {
    const auto base = elk_form(real_vf(c, comps));
    const auto expected = symmetric_signature(base.gram).signature();
    int done = 0;
    while (done < 3) {
      std::vector<Rational> phi(base.functional.size());
      for (auto& v : phi) v = uniform(rng, -7, 7);
      Rational phi_j = 0;
      for (std::size_t i = 0; i < phi.size(); ++i) phi_j += phi[i] * base.jacobian_class[i];
      if (phi_j == 0) continue;
      if (phi_j < 0)
        for (auto& v : phi) v = -v;
      const auto other = elk_form_with_functional(base, phi);
      EXPECT_EQ(symmetric_signature(other.gram).signature(), expected);
      ++done;
    }
  }
}

TEST(ELK, FunctionalMustBePositiveOnJacobian) {
  auto c = vars({"x", "y"});
  const auto base = elk_form(real_vf(c, {"x^3", "y"}));
  std::vector<Rational> neg(base.functional);
  for (auto& v : neg) v = -v;
  EXPECT_THROW(elk_form_with_functional(base, neg), RejectedInput);
}

TEST(Collection, Examples) {
  auto c2 = vars({"z1", "z2"});
  auto c3 = vars({"z1", "z2", "z3"});
  SectionCollection single{3, {3}, {column(c3, {"z1", "z2", "z3"})}};
  EXPECT_EQ(collection_index(single).index(), 1);

  SectionCollection two{2, {1, 1}, {PolyMatrix(2, 2, Ps(c2, {"z1", "0", "0", "1"})), PolyMatrix(2, 2, Ps(c2, {"1", "0", "0", "z2"}))}};
  EXPECT_EQ(collection_index(two).index(), 1);

  SectionCollection powers{
      2, {1, 1}, {PolyMatrix(2, 2, Ps(c2, {"z1^2", "0", "0", "1"})), PolyMatrix(2, 2, Ps(c2, {"1", "0", "0", "z2^3"}))}};
  EXPECT_EQ(collection_index(powers).index(), 6);
}

TEST(Collection, SingleGroupEqualsPalamodov) {
  auto c = vars({"z1", "z2"});
  for (const auto& s : std::vector<std::vector<std::string>>{{"z1^2 - z2", "z2^2"}, {"z1^2 + z2^3", "z1*z2"}, {"z1", "z2^5"}}) {
    SectionCollection col{2, {2}, {column(c, s)}};
    EXPECT_EQ(collection_index(col).colength, palamodov_index(vf(c, s)).colength);
  }
}

TEST(Collection, PartitionMustSumToN) {
  auto c = vars({"z1", "z2"});
  SectionCollection bad{2, {1}, {PolyMatrix(2, 2, Ps(c, {"z1", "0", "0", "1"}))}};
  EXPECT_THROW(collection_index(bad), RejectedInput);
  SectionCollection wrong_cols{2, {2}, {PolyMatrix(2, 2, Ps(c, {"z1", "0", "0", "1"}))}};
  EXPECT_THROW(collection_index(wrong_cols), RejectedInput);
}

TEST(ComplexForm, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> names, coeffs;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back("z" + std::to_string(i));
      coeffs.push_back("z" + std::to_string(i));
    }
    auto c = vars(names);
    EXPECT_EQ(complex_form_index(form(c, coeffs)).index(), 1);
  }
  auto c = vars({"z1", "z2"});
  const auto dz1 = complex_form_index(form(c, {"1", "0"}));
  EXPECT_EQ(dz1.status, PointStatus::Nonsingular);
  EXPECT_EQ(dz1.index(), 0);
  EXPECT_EQ(complex_form_index(form(c, {"z1^2", "z2"})).index(), 2);
  EXPECT_EQ(complex_form_index(form(c, {"z1*z2", "0"})).status, PointStatus::NotIsolated);
}

TEST(InvariantDimension, Examples) {
  auto c = vars({"x", "y"});
  const auto q = gb::quotient_algebra(gb::Ideal(Ps(c, {"x^2", "y^2"})));
  EXPECT_EQ(invariant_dimension(q, LinearAction::trivial(2)), 4u);
  EXPECT_EQ(invariant_dimension(q, LinearAction(2, {mat(2, {0, 1, 1, 0})})), 3u);
  EXPECT_EQ(invariant_dimension(q, LinearAction(2, {mat(2, {-1, 0, 0, -1})})), 2u);
}

TEST(InvariantDimension, AtMostDimension) {
  auto c = vars({"x", "y"});
  const auto q = gb::quotient_algebra(gb::Ideal(Ps(c, {"x^3", "y^3"})));
  for (const auto& g : {mat(2, {0, 1, 1, 0}), mat(2, {-1, 0, 0, 1}), mat(2, {0, -1, 1, 0}), mat(2, {-1, 0, 0, -1})}) {
    const LinearAction a(2, {g});
    ASSERT_TRUE(a.preserves(q));
    EXPECT_LE(invariant_dimension(q, a), q.dimension());
  }
  const LinearAction rot(2, {mat(2, {0, -1, 1, 0})});
  EXPECT_EQ(rot.order(), 4u);
}

TEST(InvariantDimension, NonInvariantIdealRejected) {
  auto c = vars({"x", "y"});
  const auto q = gb::quotient_algebra(gb::Ideal(Ps(c, {"x^2", "y^3"})));
  const LinearAction swap(2, {mat(2, {0, 1, 1, 0})});
  EXPECT_FALSE(swap.preserves(q));
  EXPECT_THROW(invariant_dimension(q, swap), RejectedInput);
}

TEST(LinearAction, RejectsInfiniteOrderAndSingular) {
  EXPECT_THROW(LinearAction(2, {mat(2, {1, 1, 0, 1})}), RejectedInput);
  EXPECT_THROW(LinearAction(2, {mat(2, {1, 0, 0, 0})}), RejectedInput);
  EXPECT_THROW(LinearAction(2, {mat(3, {1, 0, 0, 0, 1, 0, 0, 0, 1})}), RejectedInput);
}

TEST(InvariantSignature, Examples) {
  auto c = vars({"x", "y"});
  const auto f = real_vf(c, {"x^3", "y"});
  const auto e = elk_form(f);
  EXPECT_EQ(invariant_signature(e, LinearAction::trivial(2)), elk_index(f).index());

  const auto lin = elk_form(real_vf(c, {"x", "y"}));
  EXPECT_EQ(invariant_signature(lin, LinearAction(2, {mat(2, {0, 1, 1, 0})})), 1);
  EXPECT_EQ(invariant_signature(lin, LinearAction(2, {mat(2, {-1, 0, 0, -1})})), 1);
}

TEST(InvariantSignature, WorkedZ2CaseAgainstProjectionOracle) {
  // (x^3, y) with x -> -x: basis {1, x, x^2}; the invariant part {1, x^2}
  // carries the hyperbolic pairing, so the signature is 0.
  auto c = vars({"x", "y"});
  const auto e = elk_form(real_vf(c, {"x^3", "y"}));
  const LinearAction g(2, {mat(2, {-1, 0, 0, 1})});
  const auto p = g.averaging_projector(e.algebra);
  const auto restricted = p.transpose() * e.gram * p;
  EXPECT_EQ(oracle_signature(restricted), 0);
  EXPECT_EQ(invariant_signature(e, g), 0);
  EXPECT_EQ(invariant_dimension(e.algebra, g), 2u);
}

TEST(InvariantSignature, MatchesProjectionOracleOnFamilies) {
  auto c = vars({"x", "y"});
  const std::vector<std::pair<std::vector<std::string>, RationalMatrix>> cases{
      {{"x^2", "y^2"}, mat(2, {0, 1, 1, 0})},
      {{"x^2 - y^2", "2*x*y"}, mat(2, {-1, 0, 0, -1})},
      {{"x^3", "y^3"}, mat(2, {0, 1, 1, 0})},
      {{"x^5", "y"}, mat(2, {-1, 0, 0, 1})},
      {{"x^2 + y^4", "x*y"}, mat(2, {1, 0, 0, -1})}};
  for (const auto& [comps, m] : cases) {
    const auto e = elk_form(real_vf(c, comps));
    const LinearAction g(2, {m});
    ASSERT_TRUE(g.preserves(e.algebra));
    const auto p = g.averaging_projector(e.algebra);
    EXPECT_EQ(invariant_signature(e, g), oracle_signature(p.transpose() * e.gram * p)) << comps[0];
  }
}
