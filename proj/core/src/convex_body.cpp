// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "chowkit/convex.hpp"
#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

// Calls f on every k-subset of {0..n−1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Eigen::MatrixXd rows_of(const std::vector<Point>& normals, const std::vector<std::size_t>& pick, int dim) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pick.size()), dim);
  for (std::size_t r = 0; r < pick.size(); ++r) {
    for (int c = 0; c < dim; ++c) m(static_cast<Eigen::Index>(r), c) = normals[pick[r]][static_cast<std::size_t>(c)];
  }
  return m;
}

double max_dot(const std::vector<Point>& normals, const Eigen::VectorXd& x) {
  double best = -INFINITY;
  for (const auto& h : normals) best = std::max(best, Eigen::Map<const Eigen::VectorXd>(h.data(), x.size()).dot(x));
  return best;
}

// No direction d ≠ 0 with ⟨hᵢ, d⟩ ≤ 0 for all i. With H of full column rank
// the recession cone is pointed, so it is nonzero iff it has an extreme ray,
// and every extreme ray spans the null space of n−1 independent rows.
bool is_bounded(const std::vector<Point>& normals, int dim) {
  std::vector<std::size_t> all(normals.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (normals.empty()) return false;
  Eigen::FullPivLU<Eigen::MatrixXd> full(rows_of(normals, all, dim));
  full.setThreshold(1e-12);
  if (full.rank() != dim) return false;

  bool bounded = true;
  auto probe = [&](const Eigen::VectorXd& d) {
    if (max_dot(normals, d) <= 1e-12 * d.norm()) bounded = false;
  };
  if (dim == 1) {
    probe(Eigen::VectorXd::Constant(1, 1.0));
    probe(Eigen::VectorXd::Constant(1, -1.0));
    return bounded;
  }
  for_each_subset(normals.size(), static_cast<std::size_t>(dim - 1), [&](const std::vector<std::size_t>& pick) {
    if (!bounded) return;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows_of(normals, pick, dim));
    lu.setThreshold(1e-12);
    if (lu.rank() != dim - 1) return;
    Eigen::VectorXd ray = lu.kernel().col(0);
    ray.normalize();
    probe(ray);
    probe(-ray);
  });
  return bounded;
}

PointSet enumerate_vertices(const std::vector<Point>& normals, int dim) {
  PointSet out;
  for_each_subset(normals.size(), static_cast<std::size_t>(dim), [&](const std::vector<std::size_t>& pick) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows_of(normals, pick, dim));
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return;
    const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(dim));
    if (max_dot(normals, x) > 1.0 + 1e-9) return;
    for (const auto& v : out) {
      if ((Eigen::Map<const Eigen::VectorXd>(v.data(), dim) - x).lpNorm<Eigen::Infinity>() <= 1e-9) return;
    }
    out.emplace_back(x.data(), x.data() + dim);
  });
  std::sort(out.begin(), out.end());
  return out;
}

void check_dim(const Point& x, int dim, const char* what) {
  if (static_cast<int>(x.size()) != dim) {
    throw DimensionMismatch(std::string(what) + ": point of dimension " + std::to_string(x.size()) +
                            " for a body in R^" + std::to_string(dim));
  }
}

}  // namespace

ConvexBody::ConvexBody(int dim, std::vector<Point> normals, std::optional<PointSet> vertices)
    : dim_(dim), normals_(std::move(normals)) {
  if (dim_ < 1) throw InvalidBody("body dimension must be positive");
  for (const auto& h : normals_) {
    if (static_cast<int>(h.size()) != dim_) throw InvalidBody("halfspace normal has the wrong dimension");
    for (double c : h) {
      if (!std::isfinite(c)) throw InvalidBody("halfspace normal is not finite");
    }
  }
  if (!is_bounded(normals_, dim_)) throw InvalidBody("halfspaces do not bound a polytope (normals must positively span)");
  vertices_ = enumerate_vertices(normals_, dim_);
  if (vertices) {
    bool same = vertices->size() == vertices_.size();
    for (const auto& v : *vertices) {
      if (!same) break;
      if (static_cast<int>(v.size()) != dim_) throw InvalidBody("vertex has the wrong dimension");
      same = std::any_of(vertices_.begin(), vertices_.end(), [&](const Point& w) {
        for (int i = 0; i < dim_; ++i) {
          if (std::abs(v[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i)]) > 1e-9) return false;
        }
        return true;
      });
    }
    if (!same) throw InvalidBody("supplied vertices disagree with the halfspaces");
  }
}

ConvexBody ConvexBody::box(const std::vector<double>& half_widths) {
  std::vector<double> lo(half_widths.size());
  std::transform(half_widths.begin(), half_widths.end(), lo.begin(), [](double w) { return -w; });
  return box(lo, half_widths);
}

ConvexBody ConvexBody::box(const std::vector<double>& lo, const std::vector<double>& hi) {
  if (lo.size() != hi.size() || lo.empty()) throw InvalidBody("box bounds must be nonempty and of equal length");
  const int n = static_cast<int>(lo.size());
  std::vector<Point> normals;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!(lo[k] < 0 && hi[k] > 0)) throw InvalidBody("box must contain the origin in its interior");
    Point up(lo.size(), 0.0);
    Point down(lo.size(), 0.0);
    up[k] = 1.0 / hi[k];
    down[k] = 1.0 / lo[k];
    normals.push_back(up);
    normals.push_back(down);
  }
  return ConvexBody(n, std::move(normals));
}

ConvexBody ConvexBody::cross_polytope(int dim, double radius) {
  if (dim < 1 || !(radius > 0)) throw InvalidBody("cross-polytope needs dim >= 1 and radius > 0");
  std::vector<Point> normals;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Point h(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) h[static_cast<std::size_t>(i)] = ((mask >> i) & 1u ? -1.0 : 1.0) / radius;
    normals.push_back(std::move(h));
  }
  return ConvexBody(dim, std::move(normals));
}

bool ConvexBody::contains(const Point& x, double tol) const { return minkowski(*this, x) <= 1.0 + tol; }

bool ConvexBody::is_symmetric(double tol) const {
  for (const auto& v : vertices_) {
    Point neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](double c) { return -c; });
    if (!contains(neg, tol)) return false;
  }
  return true;
}

ConvexBody ConvexBody::scaled(double lambda) const {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw InvalidBody("scale factor must be positive");
  std::vector<Point> normals = normals_;
  for (auto& h : normals) {
    for (double& c : h) c /= lambda;
  }
  return ConvexBody(dim_, std::move(normals));
}

double dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double minkowski(const ConvexBody& d, const Point& x) {
  check_dim(x, d.dim(), "minkowski");
  double best = 0.0;
  for (const auto& h : d.normals()) best = std::max(best, dot(h, x));
  return best;
}

ConvexBody symmetrize(const ConvexBody& d) {
  std::vector<Point> normals = d.normals();
  for (const auto& h : d.normals()) {
    Point neg(h.size());
    std::transform(h.begin(), h.end(), neg.begin(), [](double c) { return -c; });
    if (std::find(normals.begin(), normals.end(), neg) == normals.end()) normals.push_back(std::move(neg));
  }
  return ConvexBody(d.dim(), std::move(normals));
}

}  // namespace chowkit
