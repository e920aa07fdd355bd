// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Dense>

#include "chowkit/convex.hpp"
#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

using Vec = Eigen::VectorXd;

Vec to_vec(const Point& p) { return Eigen::Map<const Vec>(p.data(), static_cast<Eigen::Index>(p.size())); }

struct Vertex {
  std::size_t ia;
  std::size_t ib;
  Vec p;  // a[ia] − b[ib]
};

// Minimum-norm point of conv(simplex) by trying every affinely independent
// subset; returns barycentric weights aligned with `simplex`.
std::vector<double> min_norm_weights(const std::vector<Vertex>& simplex) {
  const std::size_t k = simplex.size();
  std::vector<double> best_w;
  double best_norm = INFINITY;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) idx.push_back(i);
    }
    std::vector<double> w(k, 0.0);
    if (idx.size() == 1) {
      w[idx[0]] = 1.0;
    } else {
      const Vec& p0 = simplex[idx[0]].p;
      Eigen::MatrixXd m(p0.size(), static_cast<Eigen::Index>(idx.size() - 1));
      for (std::size_t j = 1; j < idx.size(); ++j) m.col(static_cast<Eigen::Index>(j - 1)) = simplex[idx[j]].p - p0;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(m.transpose() * m);
      lu.setThreshold(1e-13);
      if (!lu.isInvertible()) continue;
      const Vec mu = lu.solve(-m.transpose() * p0);
      double first = 1.0;
      bool feasible = true;
      for (std::size_t j = 1; j < idx.size(); ++j) {
        const double c = mu(static_cast<Eigen::Index>(j - 1));
        if (c < -1e-12) feasible = false;
        w[idx[j]] = std::max(0.0, c);
        first -= c;
      }
      if (first < -1e-12 || !feasible) continue;
      w[idx[0]] = std::max(0.0, first);
    }
    Vec z = Vec::Zero(simplex[0].p.size());
    for (std::size_t i = 0; i < k; ++i) z += w[i] * simplex[i].p;
    const double n = z.squaredNorm();
    if (n < best_norm * (1 - 1e-14) || best_w.empty()) {
      best_norm = n;
      best_w = std::move(w);
    }
  }
  return best_w;
}

void check_sets(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw DomainError("separate needs nonempty sets");
  const std::size_t n = a.front().size();
  for (const auto* set : {&a, &b}) {
    for (const auto& p : *set) {
      if (p.size() != n) throw DimensionMismatch("separate: points of different dimensions");
    }
  }
}

}  // namespace

SeparationCertificate separate(const PointSet& a, const PointSet& b) {
  check_sets(a, b);
  std::vector<Vec> av, bv;
  for (const auto& p : a) av.push_back(to_vec(p));
  for (const auto& p : b) bv.push_back(to_vec(p));

  std::vector<Vertex> simplex{{0, 0, av[0] - bv[0]}};
  std::vector<double> weights{1.0};
  Vec z = simplex[0].p;
  constexpr int kMaxIterations = 1000;
  for (int it = 0; it < kMaxIterations && z.norm() > kConvexTolerance / 10; ++it) {
    std::size_t ia = 0, ib = 0;
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < av.size(); ++i) {
      if (const double v = av[i].dot(z); v < lo) lo = v, ia = i;
    }
    for (std::size_t i = 0; i < bv.size(); ++i) {
      if (const double v = bv[i].dot(z); v > hi) hi = v, ib = i;
    }
    const double gap = z.squaredNorm() - (lo - hi);
    if (gap <= 1e-15 * std::max(1.0, z.squaredNorm())) break;
    if (std::any_of(simplex.begin(), simplex.end(), [&](const Vertex& v) { return v.ia == ia && v.ib == ib; })) break;
    simplex.push_back({ia, ib, av[ia] - bv[ib]});
    weights = min_norm_weights(simplex);
    std::vector<Vertex> kept;
    std::vector<double> kept_w;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (weights[i] > 0.0) {
        kept.push_back(simplex[i]);
        kept_w.push_back(weights[i]);
      }
    }
    simplex = std::move(kept);
    weights = std::move(kept_w);
    z = Vec::Zero(z.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) z += weights[i] * simplex[i].p;
  }

  Vec xs = Vec::Zero(z.size()), ys = Vec::Zero(z.size());
  double total = 0.0;
  for (std::size_t i = 0; i < simplex.size(); ++i) total += weights[i];
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    xs += weights[i] / total * av[simplex[i].ia];
    ys += weights[i] / total * bv[simplex[i].ib];
  }
  const Vec diff = ys - xs;
  const double dist = diff.norm();
  if (!(dist > kConvexTolerance)) throw SetsIntersect(dist);

  SeparationCertificate cert;
  const Vec ell = diff / dist;
  cert.ell.assign(ell.data(), ell.data() + ell.size());
  cert.alpha = -INFINITY;
  cert.beta = INFINITY;
  for (const auto& p : a) cert.alpha = std::max(cert.alpha, dot(cert.ell, p));
  for (const auto& p : b) cert.beta = std::min(cert.beta, dot(cert.ell, p));
  if (!(cert.alpha < cert.beta)) throw SetsIntersect(dist);
  cert.nearest_a.assign(xs.data(), xs.data() + xs.size());
  cert.nearest_b.assign(ys.data(), ys.data() + ys.size());
  cert.distance = dist;
  return cert;
}

SeparationCertificate separate(const PointSet& a, const ConvexBody& b) {
  if (!a.empty() && static_cast<int>(a.front().size()) != b.dim()) {
    throw DimensionMismatch("separate: point set and body dimensions differ");
  }
  return separate(a, b.vertices());
}

}  // namespace chowkit
