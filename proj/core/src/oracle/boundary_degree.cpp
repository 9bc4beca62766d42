#include "singindex/oracle/boundary_degree.hpp"

#include "singindex/error.hpp"

#include <array>
#include <map>

namespace singindex::oracle {

namespace {

using V2 = std::array<Rational, 2>;
using V3 = std::array<Rational, 3>;

struct Degenerate {};

const std::vector<V2> kDirections2{{Rational(1), Rational(3, 7)}, {Rational(-2, 9), Rational(1)},
                                   {Rational(5, 11), Rational(-1)}, {Rational(-1), Rational(-13, 17)}};
const std::vector<V3> kDirections3{{Rational(1), Rational(3, 7), Rational(5, 11)},
                                   {Rational(-2, 9), Rational(1), Rational(7, 19)},
                                   {Rational(5, 13), Rational(-1), Rational(-3, 23)},
                                   {Rational(-11, 29), Rational(-13, 17), Rational(1)}};

Rational cross(const V2& a, const V2& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational det3(const V3& a, const V3& b, const V3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

int crossings2(const std::vector<V2>& loop, const V2& d) {
  int total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const V2& p = loop[i];
    const V2& q = loop[(i + 1) % loop.size()];
    const V2 e{q[0] - p[0], q[1] - p[1]};
    // t d = p + s e
    const Rational den = cross(d, e);
    if (den == 0) {
      if (cross(d, p) == 0) throw Degenerate{};
      continue;
    }
    const Rational s = -cross(d, p) / den;
    const Rational t = cross(p, e) / den;
    if (s < 0 || s > 1) continue;
    if (s == 0 || s == 1 || t == 0) throw Degenerate{};
    if (t < 0) continue;
    total += den > 0 ? 1 : -1;
  }
  return total;
}

int crossings3(const std::vector<std::array<V3, 3>>& triangles, const V3& d) {
  int total = 0;
  for (const auto& [a, b, c] : triangles) {
    const V3 e1{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const V3 e2{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    // t d - u e1 - v e2 = a
    const Rational den = det3(e1, e2, d);
    if (den == 0) continue;
    const V3 md{-d[0], -d[1], -d[2]};
    const V3 ma{-a[0], -a[1], -a[2]};
    const Rational m = det3(e1, e2, md);
    const Rational u = det3(ma, e2, md) / m;
    const Rational v = det3(e1, ma, md) / m;
    const Rational t = det3(e1, e2, ma) / m;
    if (u < 0 || v < 0 || u + v > 1) continue;
    if (u == 0 || v == 0 || u + v == 1) throw Degenerate{};
    if (t <= 0) {
      if (t == 0) throw Degenerate{};
      continue;
    }
    total += den > 0 ? 1 : -1;
  }
  return total;
}

std::optional<int> degree2(const std::vector<Polynomial>& f, const Rational& eps, unsigned r) {
  std::vector<V2> corners{{-eps, -eps}, {eps, -eps}, {eps, eps}, {-eps, eps}};
  std::vector<V2> loop;
  for (std::size_t side = 0; side < 4; ++side) {
    const V2& p = corners[side];
    const V2& q = corners[(side + 1) % 4];
    for (unsigned k = 0; k < r; ++k) {
      const Rational s(k, r);
      const std::array<Rational, 2> pt{p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])};
      V2 img{f[0].evaluate(pt), f[1].evaluate(pt)};
      if (img[0] == 0 && img[1] == 0) return std::nullopt;
      loop.push_back(img);
    }
  }
  for (const auto& d : kDirections2) {
    try {
      return crossings2(loop, d);
    } catch (const Degenerate&) {
    }
  }
  return std::nullopt;
}

std::optional<int> degree3(const std::vector<Polynomial>& f, const Rational& eps, unsigned r) {
  std::map<std::array<Rational, 3>, V3> cache;
  bool hit_zero = false;
  auto image = [&](const std::array<Rational, 3>& pt) -> V3 {
    auto it = cache.find(pt);
    if (it != cache.end()) return it->second;
    V3 v{f[0].evaluate(pt), f[1].evaluate(pt), f[2].evaluate(pt)};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) hit_zero = true;
    cache.emplace(pt, v);
    return v;
  };
  std::vector<std::array<V3, 3>> tris;
  for (std::size_t axis = 0; axis < 3; ++axis)
    for (int side : {-1, 1}) {
      const std::size_t u = (axis + 1) % 3, w = (axis + 2) % 3;
      auto point = [&](unsigned i, unsigned j) {
        std::array<Rational, 3> pt;
        pt[axis] = eps * side;
        pt[u] = -eps + Rational(2 * i, r) * eps;
        pt[w] = -eps + Rational(2 * j, r) * eps;
        return pt;
      };
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) {
          V3 a = image(point(i, j)), b = image(point(i + 1, j)), c = image(point(i + 1, j + 1)),
             d = image(point(i, j + 1));
          // (e_u, e_w, e_axis) is positively oriented, so u-then-w faces outward when side = +1.
          if (side > 0) {
            tris.push_back({a, b, c});
            tris.push_back({a, c, d});
          } else {
            tris.push_back({a, c, b});
            tris.push_back({a, d, c});
          }
        }
    }
  if (hit_zero) return std::nullopt;
  for (const auto& d : kDirections3) {
    try {
      return crossings3(tris, d);
    } catch (const Degenerate&) {
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> boundary_degree(const std::vector<Polynomial>& f, const Rational& eps, unsigned resolution) {
  if (eps <= 0 || resolution == 0) throw RejectedInput("eps and resolution must be positive");
  const std::size_t n = f.size();
  if (n == 0 || f.front().nvars() != n) throw RejectedInput("boundary degree needs a square system");
  if (n == 2) return degree2(f, eps, resolution);
  if (n == 3) return degree3(f, eps, resolution);
  throw RejectedInput("boundary degree supports 2 or 3 variables");
}

std::optional<int> stable_boundary_degree(const std::vector<Polynomial>& f, const Rational& eps,
                                          const std::vector<unsigned>& resolutions) {
  std::optional<int> common;
  for (auto r : resolutions) {
    auto d = boundary_degree(f, eps, r);
    if (!d || (common && *common != *d)) return std::nullopt;
    common = d;
  }
  return common;
}

}  // namespace singindex::oracle
