// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "chowkit/convex.hpp"
#include "chowkit/errors.hpp"
#include "support/bodies.hpp"
#include "support/oracles.hpp"

using namespace chowkit;
using testing_support::random_body;
using testing_support::random_point;

namespace {
const ConvexBody kBox = ConvexBody::box({1.0, 1.0});

Point neg(Point p) {
  for (double& c : p) c = -c;
  return p;
}

Point add(Point a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Point scale(Point a, double s) {
  for (double& c : a) c *= s;
  return a;
}

// Independent cone membership: golden-section minimum of the gauge along
// the ray, using only the halfspace list.
bool oracle_in_cone(const ConvexBody& d, const Point& a1, const Point& x0, double radius, const Point& apex,
                    const Point& p, double s_lo) {
  Point w = add(p, neg(apex));
  double wn = 0;
  for (double c : w) wn = std::max(wn, std::abs(c));
  if (wn <= 1e-12) return true;
  auto g = [&](double s) {
    const Point q = add(add(a1, scale(w, s)), neg(x0));
    double v = 0;
    for (const auto& h : d.normals()) v = std::max(v, dot(h, q));
    return v;
  };
  return oracle::convex_min(g, s_lo, 1e6) <= radius * (1 + 1e-7);
}
}  // namespace

TEST_CASE("minkowski examples") {
  CHECK(minkowski(kBox, {0, 0}) == 0.0);
  CHECK(minkowski(kBox, {2, 0}) == 2.0);
  CHECK(minkowski(ConvexBody::cross_polytope(2), {1, 1}) == 2.0);
  CHECK_THROWS_AS(minkowski(kBox, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("minkowski agrees with the scaling oracle") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 3;
    const ConvexBody d = random_body(rng, n);
    const Point x = random_point(rng, n, 3.0);
    CHECK(minkowski(d, x) == doctest::Approx(oracle::gauge_by_scaling(d.normals(), x)).epsilon(1e-9));
  }
}

TEST_CASE("quasi-seminorm axioms") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> t(0.0, 5.0);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 3;
    const ConvexBody d = random_body(rng, n);
    const Point x = random_point(rng, n, 2.0), y = random_point(rng, n, 2.0);
    const double s = t(rng);
    CHECK(minkowski(d, add(x, y)) <= minkowski(d, x) + minkowski(d, y) + 1e-12);
    CHECK(std::abs(minkowski(d, scale(x, s)) - s * minkowski(d, x)) <= 1e-12 * (1 + s * minkowski(d, x)));
    const ConvexBody sym = symmetrize(d);
    CHECK(minkowski(sym, neg(x)) == minkowski(sym, x));
  }
}

TEST_CASE("gauge at most one exactly on the closed body") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 3;
    const ConvexBody d = random_body(rng, n);
    const Point x = random_point(rng, n, 1.5);
    bool inside = true;
    for (const auto& h : d.normals()) inside = inside && dot(h, x) <= 1.0;
    CHECK((minkowski(d, x) <= 1.0) == inside);
    for (const auto& v : d.vertices()) CHECK(minkowski(d, v) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("symmetrize examples") {
  const ConvexBody interval(1, {{1.0 / 3}, {-1.0}});
  const ConvexBody d = symmetrize(interval);
  for (double x : {-2.0, -0.5, 0.0, 0.7, 3.0}) CHECK(minkowski(d, {x}) == doctest::Approx(std::abs(x)).epsilon(1e-15));
  CHECK(d.is_symmetric());
  CHECK_FALSE(interval.is_symmetric());

  const ConvexBody box = ConvexBody::box({-1.0, -2.0}, {1.0, 4.0});
  const ConvexBody sbox = symmetrize(box);
  const ConvexBody expected = ConvexBody::box({1.0, 2.0});
  REQUIRE(sbox.vertices().size() == expected.vertices().size());
  for (std::size_t i = 0; i < sbox.vertices().size(); ++i) {
    CHECK(sbox.vertices()[i][0] == doctest::Approx(expected.vertices()[i][0]));
    CHECK(sbox.vertices()[i][1] == doctest::Approx(expected.vertices()[i][1]));
  }

  const ConvexBody again = symmetrize(kBox);
  CHECK(again.normals().size() == kBox.normals().size());
}

TEST_CASE("unbounded or malformed bodies are rejected") {
  CHECK_THROWS_AS(ConvexBody(2, {{1, 0}, {0, 1}}), InvalidBody);
  CHECK_THROWS_AS(ConvexBody(2, {{1, 0}, {-1, 0}}), InvalidBody);
  CHECK_THROWS_AS(ConvexBody(2, {{1, 0, 0}}), InvalidBody);
  CHECK_THROWS_AS(ConvexBody(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, PointSet{{1, 1}}), InvalidBody);
  CHECK_NOTHROW(ConvexBody(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, PointSet{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}));
  CHECK_NOTHROW(ConvexBody(2, {{1, 1}, {1, -1}, {-1, 0}}));
}

TEST_CASE("separation examples") {
  const SeparationCertificate c = separate(PointSet{{2, 0}}, kBox);
  CHECK(c.ell[0] == doctest::Approx(-1.0));
  CHECK(c.ell[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.alpha == doctest::Approx(-2.0));
  CHECK(c.beta == doctest::Approx(-1.0));

  // Slab y ≤ 1 cut by a box.
  const ConvexBody slab = ConvexBody::box({-2.0, -2.0}, {2.0, 1.0});
  const SeparationCertificate s = separate(PointSet{{0, 5}}, slab);
  CHECK(s.ell[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.ell[1] == doctest::Approx(-1.0));
  CHECK(s.alpha < s.beta);
  CHECK(s.beta - s.alpha == doctest::Approx(4.0));

  CHECK_THROWS_AS(separate(PointSet{{0, 0}}, kBox), SetsIntersect);
  CHECK_THROWS_AS(separate(PointSet{}, kBox), DomainError);
}

TEST_CASE("separation against the box projection oracle") {
  std::mt19937_64 rng(12);
  const std::vector<double> lo{-1, -0.5, -2}, hi{1, 2, 0.5};
  const ConvexBody box = ConvexBody::box(lo, hi);
  for (int i = 0; i < 100; ++i) {
    const Point x = random_point(rng, 3, 4.0);
    const Point p = oracle::project_to_box(x, lo, hi);
    const double dist = std::sqrt(dot(add(x, neg(p)), add(x, neg(p))));
    if (dist < 1e-3) continue;
    const SeparationCertificate c = separate(PointSet{x}, box);
    CHECK(c.distance == doctest::Approx(dist).epsilon(1e-9));
    CHECK(c.beta - c.alpha == doctest::Approx(dist).epsilon(1e-9));
  }
}

TEST_CASE("separation certificates re-verify from raw sets") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 3;
    // Cubes of half-width 1 whose centers are 4 apart in the Euclidean norm,
    // hence more than 2 apart in the max norm: disjoint.
    Point u(static_cast<std::size_t>(n));
    double norm = 0;
    for (double& c : u) c = g(rng), norm += c * c;
    const Point shift = scale(u, 4.0 / std::sqrt(norm));
    PointSet a, b;
    for (int k = 0; k < 6; ++k) {
      a.push_back(add(random_point(rng, n, 1.0), shift));
      b.push_back(random_point(rng, n, 1.0));
    }
    const SeparationCertificate c = separate(a, b);
    double alpha = -INFINITY, beta = INFINITY;
    for (const auto& p : a) alpha = std::max(alpha, dot(c.ell, p));
    for (const auto& p : b) beta = std::min(beta, dot(c.ell, p));
    CHECK(alpha == c.alpha);
    CHECK(beta == c.beta);
    CHECK(alpha < beta);
    CHECK(beta - alpha == doctest::Approx(c.distance).epsilon(1e-7));

    // A convex combination of b overlaps conv(b).
    const Point mid = scale(add(add(b[0], b[1]), b[2]), 1.0 / 3);
    CHECK_THROWS_AS(separate(PointSet{mid, shift}, b), SetsIntersect);
  }
}

TEST_CASE("cone examples") {
  SUBCASE("singleton") {
    const ConeResult r = cone_extremal_point(PointSet{{3, 3}}, {3, 3}, {0, 0}, kBox);
    CHECK(r.a_star == Point{3, 3});
    CHECK(r.level == 0.0);
  }
  SUBCASE("side point outside the cone") {
    const PointSet b{{0, 0}, {1, 0}};
    const ConeResult r = cone_extremal_point(b, {0, 0}, {0, 1}, kBox);
    CHECK(r.a_star == Point{0, 0});
    CHECK(r.level == 0.0);
    CHECK_FALSE(oracle_in_cone(kBox, r.base.a1, r.base.x0, r.base.radius, {0, 0}, {1, 0}, 0.0));
    CHECK(r.axis[1] > 0);
  }
  SUBCASE("one move up the axis") {
    const PointSet b{{0, 0}, {0, 0.5}};
    const ConeResult r = cone_extremal_point(b, {0, 0}, {0, 1}, kBox);
    CHECK(r.a_star == Point{0, 0.5});
    REQUIRE(r.iterates.size() == 2);
    CHECK(r.iterates[1].diameter < r.iterates[0].diameter / 2);
    for (const auto& p : b) {
      const bool in = in_neighborhood(kBox, r, p) && in_extremal_cone(kBox, r, p);
      CHECK(in == (p == r.a_star));
    }
  }
  CHECK_THROWS_AS(cone_extremal_point(PointSet{{0, 0}}, {1, 1}, {0, 1}, kBox), InvalidSeed);
  CHECK_THROWS_AS(cone_extremal_point(PointSet{{0, 0}, {0, 1}}, {0, 0}, {0, 1}, kBox), InvalidSeed);
  CHECK_THROWS_AS(cone_extremal_point(PointSet{{0, 0}}, {0, 0}, {0, 1}, ConvexBody::box({-1, -1}, {2, 1})),
                  InvalidBody);
}

TEST_CASE("cone construction on random clouds") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const ConvexBody d = symmetrize(random_body(rng, n));
    PointSet b;
    for (int k = 0; k < 40; ++k) b.push_back(random_point(rng, n, 2.0));
    const Point x0 = add(random_point(rng, n, 0.5), scale(Point(static_cast<std::size_t>(n), 1.0), 3.0));
    const ConeResult r = cone_extremal_point(b, b[0], x0, d);
    // B₁ membership against the oracle.
    for (std::size_t i = 0; i < b.size(); ++i) {
      const bool in_b1 = std::find(r.b1.begin(), r.b1.end(), i) != r.b1.end();
      CHECK(in_b1 == (b[i] == b[0] || oracle_in_cone(d, r.base.a1, r.base.x0, r.base.radius, b[0], b[i], 1.0)));
    }
    for (std::size_t k = 1; k < r.iterates.size(); ++k) CHECK(r.iterates[k].diameter < r.iterates[k - 1].diameter / 2);
    int hits = 0;
    for (const auto& p : b) {
      const bool cone = oracle_in_cone(d, r.base.a1, r.base.x0, r.base.radius, r.a_star, p, 0.0);
      if (cone && in_neighborhood(d, r, p)) {
        ++hits;
        CHECK(p == r.a_star);
      }
    }
    CHECK(hits >= 1);
  }
}

TEST_CASE("Mackey diagnostic") {
  SUBCASE("constant sequence") {
    const MackeyReport r = mackey_cauchy_diagnostic(PointSet(5, Point{1, 2}), kBox);
    CHECK(r.is_cauchy_prefix);
    for (const auto& row : r.mu) {
      for (double m : row) CHECK(m == 0.0);
    }
  }
  SUBCASE("geometric sequence") {
    PointSet xs;
    for (int k = 0; k < 10; ++k) xs.push_back({std::ldexp(1.0, -k), 0});
    const MackeyReport r = mackey_cauchy_diagnostic(xs, kBox);
    CHECK(r.is_cauchy_prefix);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) CHECK(r.mu[i][j] <= std::ldexp(1.0, -static_cast<int>(std::min(i, j))));
    }
    REQUIRE(r.fitted_rate);
    CHECK(*r.fitted_rate < 1.0);
  }
  SUBCASE("oscillation") {
    PointSet xs;
    for (int k = 0; k < 10; ++k) xs.push_back({k % 2 ? -1.0 : 1.0, 0});
    const MackeyReport r = mackey_cauchy_diagnostic(xs, kBox);
    CHECK_FALSE(r.is_cauchy_prefix);
    CHECK(r.tail_max[5] == 2.0);
  }
  SUBCASE("scaling the body") {
    std::mt19937_64 rng(15);
    const ConvexBody m = symmetrize(random_body(rng, 3));
    PointSet xs;
    for (int k = 0; k < 8; ++k) xs.push_back(scale(random_point(rng, 3, 1.0), std::pow(0.6, k)));
    const MackeyReport base = mackey_cauchy_diagnostic(xs, m);
    for (double lambda : {0.5, 2.0, 10.0}) {
      const MackeyReport r = mackey_cauchy_diagnostic(xs, m.scaled(lambda));
      CHECK(r.is_cauchy_prefix == base.is_cauchy_prefix);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          CHECK(r.mu[i][j] == doctest::Approx(base.mu[i][j] / lambda).epsilon(1e-12));
        }
      }
    }
  }
  CHECK_THROWS_AS(mackey_cauchy_diagnostic(PointSet{{0, 0}}, ConvexBody::box({-1, -1}, {2, 1})), InvalidBody);
}
