#include "singindex/error.hpp"
#include "singindex/matrix.hpp"
#include "singindex/parse.hpp"
#include "singindex/polynomial.hpp"
#include "singindex/rational.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace singindex;
using namespace singindex::testing;

TEST(Rational, CanonicalForm) {
  const Rational q = parse_rational("-4/6");
  EXPECT_EQ(q, Rational(-2, 3));
  EXPECT_GT(q.get_den(), 0);
  EXPECT_EQ(parse_rational("0/5").get_den(), 1);
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_int64(parse_rational("12/4")), 3);
  EXPECT_THROW(to_int64(Rational(1, 2)), RejectedInput);
  EXPECT_THROW(parse_rational("1/0"), RejectedInput);
}

TEST(PolyArith, Examples) {
  auto c = vars({"x", "y"});
  const auto a = P(c, "x + y"), b = P(c, "x - y");
  EXPECT_EQ(poly_arith(a, b, ArithOp::Add), P(c, "2*x"));
  EXPECT_EQ(poly_arith(a, b, ArithOp::Mul), P(c, "x^2 - y^2"));
  EXPECT_TRUE(poly_arith(a, Polynomial(c), ArithOp::Mul).is_zero());
  EXPECT_EQ(poly_arith(a, b, ArithOp::Sub), P(c, "2*y"));
}

TEST(PolyArith, ContextMismatchRejected) {
  auto c1 = vars({"x", "y"});
  auto c2 = vars({"x", "z"});
  EXPECT_THROW(poly_arith(P(c1, "x"), P(c2, "x"), ArithOp::Add), RejectedInput);
}

TEST(PolyArith, RingAxiomsOnRandomPolynomials) {
  Rng rng(11);
  auto c = vars({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_polynomial(c, rng, 0, 4, 5);
    const auto q = random_polynomial(c, rng, 0, 4, 5);
    const auto r = random_polynomial(c, rng, 0, 4, 5);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Parse, Grammar) {
  auto c = vars({"x", "y", "z"});
  const auto p = P(c, "x^2 + 2/3*x*y - z");
  EXPECT_EQ(p.coefficient(Monomial{2, 0, 0}), 1);
  EXPECT_EQ(p.coefficient(Monomial{1, 1, 0}), Rational(2, 3));
  EXPECT_EQ(p.coefficient(Monomial{0, 0, 1}), -1);
  EXPECT_EQ(P(c, "-(x + y)^2"), P(c, "-x^2 - 2*x*y - y^2"));
  EXPECT_EQ(P(c, "(x + y)/2"), P(c, "1/2*x + 1/2*y"));
}

TEST(Parse, RejectsUnknownVariableWithOffset) {
  auto c = vars({"x", "y"});
  try {
    P(c, "x + w");
    FAIL() << "expected RejectedInput";
  } catch (const RejectedInput& e) {
    EXPECT_NE(std::string(e.what()).find("offset 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(P(c, "x / 0"), RejectedInput);
  EXPECT_THROW(P(c, "x / y"), RejectedInput);
  EXPECT_THROW(P(c, "x +"), RejectedInput);
}

TEST(JacobianDet, Examples) {
  auto c = vars({"x", "y"});
  EXPECT_EQ(jacobian_det(Ps(c, {"x", "y"})), P(c, "1"));
  EXPECT_EQ(jacobian_det(Ps(c, {"x^2", "y^3"})), P(c, "6*x*y^2"));
  EXPECT_EQ(jacobian_det(Ps(c, {"x^2 - y^2", "2*x*y"})), P(c, "4*x^2 + 4*y^2"));
  EXPECT_THROW(jacobian_det(Ps(c, {"x"})), RejectedInput);
}

TEST(JacobianDet, CompositionWithLinearMap) {
  Rng rng(5);
  auto c = vars({"x", "y", "z"});
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 3; ++i) f.push_back(random_polynomial(c, rng, 1, 3, 3));
    const auto l = random_unimodular(3, rng);
    const auto lhs = jacobian_det(compose_linear(f, l));
    const auto rhs = jacobian_det(f).substitute(linear_substitution(c, l)) * l.determinant();
    for (int s = 0; s < 4; ++s) {
      const std::vector<Rational> pt{Rational(uniform(rng, -5, 5)), Rational(uniform(rng, -5, 5)) / 3,
                                     Rational(uniform(rng, -5, 5))};
      EXPECT_EQ(lhs.evaluate(pt), rhs.evaluate(pt));
    }
  }
}

TEST(Minors, Examples) {
  auto c = vars({"x", "y", "z"});
  PolyMatrix m(2, 3, Ps(c, {"2*x", "2*y", "2*z", "0", "0", "1"}));
  const auto ms = minors(m, 2);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_TRUE(ms[0].is_zero());
  EXPECT_EQ(ms[1], P(c, "2*x"));
  EXPECT_EQ(ms[2], P(c, "2*y"));

  PolyMatrix id(2, 2, Ps(c, {"1", "0", "0", "1"}));
  EXPECT_EQ(minors(id, 2), Ps(c, {"1"}));
  EXPECT_EQ(minors(m, 1), m.entries());
  EXPECT_THROW(minors(m, 3), RejectedInput);
  EXPECT_THROW(minors(m, 0), RejectedInput);
}

TEST(Minors, CountAndTransposeInvariance) {
  Rng rng(3);
  auto c = vars({"x", "y"});
  for (std::size_t rows = 1; rows <= 3; ++rows)
    for (std::size_t cols = 1; cols <= 4; ++cols) {
      std::vector<Polynomial> e;
      for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(random_polynomial(c, rng, 0, 2, 2));
      PolyMatrix m(rows, cols, e);
      for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        auto a = minors(m, k);
        auto b = minors(m.transpose(), k);
        ASSERT_EQ(a.size(), combinations(rows, k).size() * combinations(cols, k).size());
        ASSERT_EQ(a.size(), b.size());
        auto key = [](const Polynomial& p) {
          const auto s = p.to_string();
          const auto t = (-p).to_string();
          return std::min(s, t);
        };
        std::vector<std::string> ka, kb;
        for (auto& p : a) ka.push_back(key(p));
        for (auto& p : b) kb.push_back(key(p));
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        EXPECT_EQ(ka, kb);
      }
    }
}

TEST(SymmetricSignature, Examples) {
  const std::vector<Rational> d1{1, -1}, d2{2, 3, 5};
  EXPECT_EQ(symmetric_signature(RationalMatrix::diagonal(d1)), (Inertia{1, 1, 0}));
  EXPECT_EQ(symmetric_signature(RationalMatrix::diagonal(d2)), (Inertia{3, 0, 0}));
  EXPECT_EQ(symmetric_signature(RationalMatrix(2, 2, {0, 1, 1, 0})), (Inertia{1, 1, 0}));
  EXPECT_EQ(symmetric_signature(RationalMatrix(2, 2, {0, 0, 0, 0})), (Inertia{0, 0, 2}));
  EXPECT_THROW(symmetric_signature(RationalMatrix(2, 2, {0, 1, 2, 0})), RejectedInput);
}

TEST(SymmetricSignature, CongruenceInvarianceAndDescartesOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // Sparse entries make zero pivots and degenerate forms common.
        const int v = uniform(rng, 0, 2) == 0 ? uniform(rng, -3, 3) : 0;
        m(i, j) = v;
        m(j, i) = v;
      }
    const auto in = symmetric_signature(m);
    const auto oracle = descartes_inertia(m);
    EXPECT_EQ(static_cast<long>(in.positive), oracle.positive);
    EXPECT_EQ(static_cast<long>(in.negative), oracle.negative);
    EXPECT_EQ(static_cast<long>(in.zero), oracle.zero);
    const auto u = random_unimodular(n, rng);
    EXPECT_EQ(symmetric_signature(u.transpose() * m * u), in);
  }
}

TEST(Polynomial, EvaluateDerivativeTruncate) {
  auto c = vars({"x", "y"});
  const auto p = P(c, "x^3*y + 2*x - 7");
  const std::vector<Rational> pt{Rational(2), Rational(1, 2)};
  EXPECT_EQ(p.evaluate(pt), Rational(4 + 4 - 7));
  EXPECT_EQ(p.derivative(0), P(c, "3*x^2*y + 2"));
  EXPECT_EQ(p.truncated(2), P(c, "2*x - 7"));
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.order(), 0);
}
