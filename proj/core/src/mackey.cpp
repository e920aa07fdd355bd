// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "chowkit/convex.hpp"
#include "chowkit/errors.hpp"

namespace chowkit {

MackeyReport mackey_cauchy_diagnostic(const PointSet& prefix, const ConvexBody& m) {
  if (!m.is_symmetric()) throw InvalidBody("Mackey diagnostic needs a symmetric body M");
  const std::size_t k = prefix.size();
  MackeyReport out;
  out.mu.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    if (static_cast<int>(prefix[i].size()) != m.dim()) throw DimensionMismatch("Mackey diagnostic: point dimension");
    for (std::size_t j = 0; j < i; ++j) {
      Point diff(prefix[i].size());
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = prefix[i][c] - prefix[j][c];
      out.mu[i][j] = out.mu[j][i] = minkowski(m, diff);
    }
  }
  out.tail_max.assign(k, 0.0);
  for (std::size_t t = k; t-- > 0;) {
    double row = 0.0;
    for (std::size_t j = t; j < k; ++j) row = std::max(row, out.mu[t][j]);
    out.tail_max[t] = t + 1 < k ? std::max(row, out.tail_max[t + 1]) : row;
  }
  out.is_cauchy_prefix = true;
  for (std::size_t t = 0; t + 1 < k; ++t) {
    if (out.tail_max[t] > 0 && !(out.tail_max[t + 1] < out.tail_max[t])) out.is_cauchy_prefix = false;
  }

  std::vector<std::pair<double, double>> pts;
  for (std::size_t t = 0; t < k; ++t) {
    if (out.tail_max[t] > 0) pts.emplace_back(static_cast<double>(t), std::log(out.tail_max[t]));
  }
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) sx += x, sy += y, sxx += x * x, sxy += x * y;
    const double np = static_cast<double>(pts.size());
    out.fitted_rate = std::exp((np * sxy - sx * sy) / (np * sxx - sx * sx));
  }
  return out;
}

}  // namespace chowkit
