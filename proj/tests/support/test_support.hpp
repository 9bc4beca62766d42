#pragma once

#include "singindex/matrix.hpp"
#include "singindex/parse.hpp"
#include "singindex/polynomial.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace singindex::testing {

inline Context vars(std::vector<std::string> names) { return make_context(std::move(names)); }

inline Polynomial P(const Context& ctx, const std::string& text) { return parse_polynomial(text, ctx); }

inline std::vector<Polynomial> Ps(const Context& ctx, const std::vector<std::string>& texts) {
  return parse_polynomials(texts, ctx);
}

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random polynomial with `terms` terms of total degree in [min_deg, max_deg].
inline Polynomial random_polynomial(const Context& ctx, Rng& rng, unsigned min_deg, unsigned max_deg,
                                    unsigned terms, int coeff = 5) {
  Polynomial p(ctx);
  const std::size_t n = ctx->size();
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned d = static_cast<unsigned>(uniform(rng, static_cast<int>(min_deg), static_cast<int>(max_deg)));
    Monomial m(n);
    for (unsigned k = 0; k < d; ++k) m[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))] += 1;
    int c = 0;
    while (c == 0) c = uniform(rng, -coeff, coeff);
    p += Polynomial::term(ctx, m, Rational(c));
  }
  return p;
}

/// Integer matrix with determinant +-1, as a product of elementary operations.
inline RationalMatrix random_unimodular(std::size_t n, Rng& rng, int steps = 6) {
  RationalMatrix a = RationalMatrix::identity(n);
  if (n < 2) {
    if (uniform(rng, 0, 1)) a(0, 0) = -1;
    return a;
  }
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const int c = uniform(rng, -2, 2);
    for (std::size_t k = 0; k < n; ++k) a(i, k) += c * a(j, k);
  }
  return a;
}

/// Images x_i -> sum_j a_ij x_j.
inline std::vector<Polynomial> linear_substitution(const Context& ctx, const RationalMatrix& a) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial p(ctx);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) p += Polynomial::variable(ctx, j) * a(i, j);
    images.push_back(p);
  }
  return images;
}

inline std::vector<Polynomial> compose_linear(const std::vector<Polynomial>& fs, const RationalMatrix& a) {
  const auto images = linear_substitution(fs.front().context(), a);
  std::vector<Polynomial> out;
  for (const auto& f : fs) out.push_back(f.substitute(images));
  return out;
}

/// Complex polynomial as a pair (real part, imaginary part) over real variables.
struct ComplexPoly {
  Polynomial re;
  Polynomial im;
};

/// Realification: z_k = x_k + i y_k with real variables ordered x1, y1, x2, y2, ...
/// (the complex orientation). Returns the real and imaginary parts of each f.
inline std::vector<ComplexPoly> realify(const std::vector<Polynomial>& fs, Context& real_ctx) {
  const auto& ctx = fs.front().context();
  const std::size_t n = ctx->size();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("x" + std::to_string(k + 1));
    names.push_back("y" + std::to_string(k + 1));
  }
  real_ctx = make_context(names);
  std::vector<ComplexPoly> out;
  for (const auto& f : fs) {
    ComplexPoly acc{Polynomial(real_ctx), Polynomial(real_ctx)};
    for (const auto& [m, c] : f.terms()) {
      ComplexPoly t{Polynomial::constant(real_ctx, c), Polynomial(real_ctx)};
      for (std::size_t k = 0; k < n; ++k)
        for (std::uint32_t e = 0; e < m[k]; ++e) {
          const Polynomial x = Polynomial::variable(real_ctx, 2 * k);
          const Polynomial y = Polynomial::variable(real_ctx, 2 * k + 1);
          t = ComplexPoly{t.re * x - t.im * y, t.re * y + t.im * x};
        }
      acc.re += t.re;
      acc.im += t.im;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// Inertia by Descartes' rule of signs on the characteristic polynomial
/// (exact for symmetric matrices, whose eigenvalues are real).
struct DescartesInertia {
  long positive = 0;
  long negative = 0;
  long zero = 0;
};

inline DescartesInertia descartes_inertia(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: char poly coefficients c_n = 1, c_{n-k}.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  DescartesInertia out;
  std::size_t low = 0;
  while (low <= n && c[low] == 0) ++low;
  out.zero = static_cast<long>(low);
  auto changes = [&](bool negate) {
    long count = 0;
    int prev = 0;
    for (std::size_t k = low; k <= n; ++k) {
      int s = sgn(c[k]);
      if (negate && (k % 2 == 1)) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  out.positive = changes(false);
  out.negative = changes(true);
  return out;
}

}  // namespace singindex::testing
