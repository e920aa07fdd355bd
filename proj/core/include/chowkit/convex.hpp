// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace chowkit {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

/// Decisions on intersection, degeneracy and feasibility use this absolute
/// tolerance.
inline constexpr double kConvexTolerance = 1e-12;

/// Bounded polytope {x : ⟨hᵢ, x⟩ ≤ 1 for all i} in Rⁿ. The origin is always
/// interior since every offset is 1.
class ConvexBody {
 public:
  /// Throws InvalidBody when the normals have the wrong length, are not
  /// finite, or do not positively span Rⁿ (unbounded body), and when a
  /// supplied vertex list disagrees with the computed one.
  ConvexBody(int dim, std::vector<Point> normals, std::optional<PointSet> vertices = std::nullopt);

  /// Axis-aligned box Π[−wᵢ, wᵢ].
  static ConvexBody box(const std::vector<double>& half_widths);
  /// Box Π[loᵢ, hiᵢ]; requires loᵢ < 0 < hiᵢ.
  static ConvexBody box(const std::vector<double>& lo, const std::vector<double>& hi);
  /// {x : Σ|xᵢ| ≤ r}.
  static ConvexBody cross_polytope(int dim, double radius = 1.0);

  int dim() const noexcept { return dim_; }
  const std::vector<Point>& normals() const noexcept { return normals_; }
  const PointSet& vertices() const noexcept { return vertices_; }

  bool contains(const Point& x, double tol = 1e-9) const;
  /// −v lies in the body for every vertex v.
  bool is_symmetric(double tol = 1e-9) const;
  /// λ·D for λ > 0.
  ConvexBody scaled(double lambda) const;

 private:
  int dim_;
  std::vector<Point> normals_;
  PointSet vertices_;
};

/// Gauge P_D(x) = inf{t > 0 : x ∈ tD} = max(0, maxᵢ ⟨hᵢ, x⟩).
/// Throws DimensionMismatch.
double minkowski(const ConvexBody& d, const Point& x);

/// D ∩ −D, by concatenating the halfspaces of D and −D (exact duplicates
/// dropped).
ConvexBody symmetrize(const ConvexBody& d);

/// ℓ(a) ≤ alpha < beta ≤ ℓ(b) for a in the first set and b in the second.
struct SeparationCertificate {
  Point ell;  // unit vector, acting by inner product
  double alpha = 0.0;
  double beta = 0.0;
  Point nearest_a;  // closest pair realizing the distance
  Point nearest_b;
  double distance = 0.0;
};

/// Separates conv(a) from conv(b) (or from a body) through their closest
/// pair, found by Gilbert–Johnson–Keerthi iteration on the difference set.
/// alpha and beta are recomputed from the raw sets. Throws SetsIntersect
/// when the distance is ≤ kConvexTolerance, DomainError for empty sets and
/// DimensionMismatch.
SeparationCertificate separate(const PointSet& a, const PointSet& b);
SeparationCertificate separate(const PointSet& a, const ConvexBody& b);

double dot(const Point& a, const Point& b);

/// Cone {apex + t(x − a1) : x ∈ x0 + radius·D, t ≥ 0}; `t ≤ 1` when
/// truncated. Shared shape for the cones and neighborhoods below.
struct ConeGeometry {
  Point a1;      // vertex of the untranslated cone
  Point x0;      // center of the base set
  double radius; // base set is x0 + radius·D
};

/// P_D-ball {x : P_D(x − center) < radius}.
struct GaugeBall {
  Point center;
  double radius = 0.0;
};

struct ConeIterate {
  Point point;
  double diameter = 0.0;  // P_D-diameter of the cone at `point` cut at level ℓ(a1) + d
};

struct ConeResult {
  Point a_star;
  Point axis;       // e = (x0 − a1)/ℓ(x0 − a1)
  Point ell;        // separating functional
  double alpha = 0.0;  // radius of the excluded ball V around x0
  ConeGeometry base;   // S̄ with radius α/4
  double level = 0.0;  // d = sup over B₁ of ℓ(b) − ℓ(a1)
  std::vector<std::size_t> b1;  // indices into B of the truncated-cone members
  // U = {a1 + t(x − a1) : x ∈ int(x0 + εe + (α/3)D), 0 < t < 1}
  double u_epsilon = 0.0;
  Point u_center;       // x0 + εe
  double u_radius = 0.0;  // α/3
  /// Extra neighborhood of a* when a* = a1, which the construction above
  /// leaves out of U.
  std::optional<GaugeBall> u_ball;
  std::vector<ConeIterate> iterates;
};

/// Extremal point a* of a finite set B with a cone C_{a*} and open set U such
/// that U ∩ C_{a*} ∩ B = {a*}. D must be symmetric.
///
/// Throws InvalidSeed when a1 ∉ B or x0 ∈ B, InvalidBody for asymmetric D,
/// DimensionMismatch.
ConeResult cone_extremal_point(const PointSet& b, const Point& a1, const Point& x0, const ConvexBody& d);

/// p ∈ {apex + t(x − a1) : x ∈ x0 + r·D̄, t ≥ 0} (t ≤ 1 when `truncated`).
bool in_cone(const ConvexBody& d, const ConeGeometry& cone, const Point& apex, const Point& p, bool truncated,
             double tol = 1e-9);

/// p ∈ U as described in ConeResult.
bool in_neighborhood(const ConvexBody& d, const ConeResult& r, const Point& p);

/// Membership in the translated cone C_{a*}.
bool in_extremal_cone(const ConvexBody& d, const ConeResult& r, const Point& p);

struct MackeyReport {
  bool is_cauchy_prefix = false;
  std::vector<std::vector<double>> mu;  // μᵢⱼ = P_M(xᵢ − xⱼ)
  std::vector<double> tail_max;         // T_k = max over i, j ≥ k of μᵢⱼ
  /// exp of the least-squares slope of log T_k over positive T_k; nullopt
  /// when fewer than two are positive.
  std::optional<double> fitted_rate;
};

/// Mackey–Cauchy check on a finite prefix: the tail maxima must strictly
/// decrease until they reach 0. Throws InvalidBody for asymmetric M and
/// DimensionMismatch.
MackeyReport mackey_cauchy_diagnostic(const PointSet& prefix, const ConvexBody& m);

}  // namespace chowkit
