// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/circle_diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Hermite {
  double y0, y1, d0, d1, h;
  double operator()(double s) const {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * y1 +
           (s3 - s2) * h * d1;
  }
};

}  // namespace

std::string lift_violation(const std::vector<double>& lift) {
  if (lift.size() < 4) return "a circle diffeomorphism needs at least 4 samples";
  for (std::size_t i = 0; i < lift.size(); ++i) {
    if (!std::isfinite(lift[i])) return "non-finite lift sample at index " + std::to_string(i);
    if (i > 0 && !(lift[i] > lift[i - 1])) {
      return "lift not strictly increasing at index " + std::to_string(i);
    }
  }
  if (!(lift.back() < lift.front() + kTwoPi)) return "lift violates the 2π wrap rule";
  return {};
}

CircleDiffeo::CircleDiffeo(std::vector<double> lift) : lift_(std::move(lift)) {
  if (auto why = lift_violation(lift_); !why.empty()) {
    if (lift_.size() < 4 || why.rfind("non-finite", 0) == 0) throw DomainError(why);
    throw MonotonicityViolation(why);
  }
  const long m = grid_size();
  const double h = kTwoPi / static_cast<double>(m);
  slopes_.resize(lift_.size());
  for (long j = 0; j < m; ++j) {
    const double left = (extended(j) - extended(j - 1)) / h;
    const double right = (extended(j + 1) - extended(j)) / h;
    slopes_[static_cast<std::size_t>(j)] = 2.0 / (1.0 / left + 1.0 / right);
  }
}

CircleDiffeo CircleDiffeo::identity(int grid_size) { return rotation(0.0, grid_size); }

CircleDiffeo CircleDiffeo::rotation(double angle, int grid_size) {
  std::vector<double> lift(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) lift[static_cast<std::size_t>(i)] = kTwoPi * i / grid_size + angle;
  return CircleDiffeo(std::move(lift));
}

double CircleDiffeo::extended(long j) const {
  const long m = grid_size();
  const long q = floor_div(j, m);
  return lift_[static_cast<std::size_t>(j - q * m)] + kTwoPi * static_cast<double>(q);
}

double CircleDiffeo::slope(long j) const {
  const long m = grid_size();
  return slopes_[static_cast<std::size_t>(j - floor_div(j, m) * m)];
}

double CircleDiffeo::operator()(double theta) const {
  const double h = kTwoPi / grid_size();
  const double u = theta / h;
  const double fl = std::floor(u);
  const long j = static_cast<long>(fl);
  const Hermite seg{extended(j), extended(j + 1), slope(j), slope(j + 1), h};
  return seg(u - fl);
}

CircleDiffeo CircleDiffeo::inverse() const {
  const long m = grid_size();
  const double h = kTwoPi / static_cast<double>(m);
  std::vector<double> inv(lift_.size());
  for (long i = 0; i < m; ++i) {
    const double y = kTwoPi * static_cast<double>(i) / static_cast<double>(m);
    // Bracket y between consecutive extended samples.
    const long q = static_cast<long>(std::floor((y - lift_.front()) / kTwoPi));
    long lo = q * m;
    long hi = (q + 1) * m;
    while (extended(lo) > y) lo -= m;
    while (extended(hi) <= y) hi += m;
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      (extended(mid) <= y ? lo : hi) = mid;
    }
    const Hermite seg{extended(lo), extended(lo + 1), slope(lo), slope(lo + 1), h};
    double a = 0.0;
    double b = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double s = 0.5 * (a + b);
      (seg(s) <= y ? a : b) = s;
    }
    inv[static_cast<std::size_t>(i)] = (static_cast<double>(lo) + 0.5 * (a + b)) * h;
  }
  return CircleDiffeo(std::move(inv));
}

double CircleDiffeo::displacement_norm() const {
  double best = INFINITY;
  const double k0 = std::round(lift_.front() / kTwoPi);
  for (double k = k0 - 1; k <= k0 + 1; k += 1.0) {
    double sup = 0.0;
    for (int i = 0; i < grid_size(); ++i) {
      sup = std::max(sup, std::abs(lift_[static_cast<std::size_t>(i)] - node(i) - kTwoPi * k));
    }
    best = std::min(best, sup);
  }
  return best;
}

CircleDiffeo compose(const CircleDiffeo& outer, const CircleDiffeo& inner) {
  std::vector<double> out(inner.lift().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = outer(inner.lift()[i]);
  return CircleDiffeo(std::move(out));
}

}  // namespace chowkit
