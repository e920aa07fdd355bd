// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "chowkit/convex.hpp"
#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

Point axpy(const Point& x, double a, const Point& y) {  // x + a·y
  Point out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
  return out;
}

Point sub(const Point& x, const Point& y) { return axpy(x, -1.0, y); }

// min over s ≥ lo of P_D(u + s·w). The gauge is a maximum of affine
// functions of s, so the minimum sits at lo or at a breakpoint.
double gauge_min_on_ray(const ConvexBody& d, const Point& u, const Point& w, double lo) {
  std::vector<double> c, m;
  c.push_back(0.0);  // the max(0, ·) floor
  m.push_back(0.0);
  for (const auto& h : d.normals()) {
    c.push_back(dot(h, u));
    m.push_back(dot(h, w));
  }
  auto value = [&](double s) {
    double v = -INFINITY;
    for (std::size_t i = 0; i < c.size(); ++i) v = std::max(v, c[i] + s * m[i]);
    return v;
  };
  double best = value(lo);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (m[i] == m[j]) continue;
      const double s = (c[j] - c[i]) / (m[i] - m[j]);
      if (s > lo && std::isfinite(s)) best = std::min(best, value(s));
    }
  }
  return best;
}

bool same_point(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kConvexTolerance) return false;
  }
  return true;
}

PointSet base_vertices(const ConvexBody& d, const ConeGeometry& g) {
  PointSet out;
  for (const auto& v : d.vertices()) out.push_back(axpy(g.x0, g.radius, v));
  return out;
}

// P_D-diameter of the cone with vertex `apex` cut at ℓ = level. Its vertices
// are the apex and the central projections of the base vertices.
double truncated_diameter(const ConvexBody& d, const PointSet& base, const Point& a1, const Point& ell,
                          const Point& apex, double level) {
  PointSet verts{apex};
  const double la1 = dot(ell, a1);
  const double height = level - dot(ell, apex);
  if (height > 0) {
    for (const auto& x : base) verts.push_back(axpy(apex, height / (dot(ell, x) - la1), sub(x, a1)));
  }
  double diam = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) diam = std::max(diam, minkowski(d, sub(verts[i], verts[j])));
  }
  return diam;
}

}  // namespace

bool in_cone(const ConvexBody& d, const ConeGeometry& cone, const Point& apex, const Point& p, bool truncated,
             double tol) {
  if (same_point(p, apex)) return true;
  // p = apex + t(x − a1) with x in the base  ⟺  P_D(a1 + s(p − apex) − x0) ≤ r for s = 1/t.
  const double g = gauge_min_on_ray(d, sub(cone.a1, cone.x0), sub(p, apex), truncated ? 1.0 : 0.0);
  return g <= cone.radius * (1.0 + tol);
}

bool in_neighborhood(const ConvexBody& d, const ConeResult& r, const Point& p) {
  if (r.u_ball && minkowski(d, sub(p, r.u_ball->center)) < r.u_ball->radius) return true;
  if (same_point(p, r.base.a1)) return false;
  const double g = gauge_min_on_ray(d, sub(r.base.a1, r.u_center), sub(p, r.base.a1), 1.0);
  return g < r.u_radius;
}

bool in_extremal_cone(const ConvexBody& d, const ConeResult& r, const Point& p) {
  return in_cone(d, r.base, r.a_star, p, false);
}

ConeResult cone_extremal_point(const PointSet& b, const Point& a1, const Point& x0, const ConvexBody& d) {
  const auto n = static_cast<std::size_t>(d.dim());
  if (a1.size() != n || x0.size() != n) throw DimensionMismatch("cone_extremal_point: seed dimension differs from D");
  for (const auto& p : b) {
    if (p.size() != n) throw DimensionMismatch("cone_extremal_point: point dimension differs from D");
  }
  if (!d.is_symmetric()) throw InvalidBody("cone_extremal_point needs a symmetric body (symmetrize first)");
  if (std::none_of(b.begin(), b.end(), [&](const Point& p) { return same_point(p, a1); })) {
    throw InvalidSeed("a1 is not a member of B");
  }
  double nearest = INFINITY;
  for (const auto& p : b) nearest = std::min(nearest, minkowski(d, sub(p, x0)));
  if (nearest <= kConvexTolerance) throw InvalidSeed("x0 lies in B");

  ConeResult r;
  r.alpha = nearest / 2;
  r.base = {a1, x0, r.alpha / 4};
  const PointSet base = base_vertices(d, r.base);
  r.ell = separate(PointSet{a1}, base).ell;
  const double la1 = dot(r.ell, a1);
  const Point toward = sub(x0, a1);
  r.axis = axpy(Point(n, 0.0), 1.0 / dot(r.ell, toward), toward);

  double level_gain = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (same_point(b[i], a1) || in_cone(d, r.base, a1, b[i], true)) {
      r.b1.push_back(i);
      level_gain = std::max(level_gain, dot(r.ell, b[i]) - la1);
    }
  }
  r.level = level_gain;
  const double cut = la1 + r.level;

  Point a = a1;
  r.iterates.push_back({a, truncated_diameter(d, base, a1, r.ell, a, cut)});
  while (r.level > kConvexTolerance) {
    const Point* pick = nullptr;
    double best_gain = 0.0;
    for (std::size_t i : r.b1) {
      const Point& q = b[i];
      if (same_point(q, a) || !in_cone(d, r.base, a, q, false)) continue;
      const double gain = dot(r.ell, q) - dot(r.ell, a);
      if (gain <= 0) continue;
      if (!pick || gain > best_gain || (gain == best_gain && q < *pick)) {
        pick = &q;
        best_gain = gain;
      }
    }
    if (!pick) break;
    a = *pick;
    r.iterates.push_back({a, truncated_diameter(d, base, a1, r.ell, a, cut)});
  }
  r.a_star = a;

  // U: shrink ε from the largest dyadic ≤ α/12 until the shifted α/3 base
  // stays inside the α/2 base and U still holds a*.
  r.u_radius = r.alpha / 3;
  const bool at_seed = same_point(r.a_star, a1);
  double eps = std::ldexp(1.0, static_cast<int>(std::floor(std::log2(r.alpha / 12))));
  for (int tries = 0;; ++tries, eps /= 2) {
    if (tries > 200) throw DomainError("cone_extremal_point: no admissible shift for U");
    bool inside = true;
    for (const auto& v : d.vertices()) {
      if (minkowski(d, axpy(axpy(Point(n, 0.0), r.u_radius, v), eps, r.axis)) > r.alpha / 2 * (1 + 1e-12)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    r.u_epsilon = eps;
    r.u_center = axpy(x0, eps, r.axis);
    if (at_seed || in_neighborhood(d, r, r.a_star)) break;
  }
  if (at_seed) {
    double gap = INFINITY;
    for (const auto& p : b) {
      const double g = minkowski(d, sub(p, r.a_star));
      if (g > kConvexTolerance) gap = std::min(gap, g);
    }
    r.u_ball = GaugeBall{r.a_star, std::isfinite(gap) ? gap / 2 : r.alpha};
  }
  return r;
}

}  // namespace chowkit
