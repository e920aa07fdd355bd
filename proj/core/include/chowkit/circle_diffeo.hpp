// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace chowkit {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Orientation-preserving circle diffeomorphism stored as its lift sampled
/// at θᵢ = 2πi/m. Lift values are unwrapped reals, strictly increasing, and
/// satisfy the wrap rule φ̃(θ + 2π) = φ̃(θ) + 2π, so the last sample must stay
/// below the first plus 2π.
///
/// Between samples the lift is a periodic monotone cubic (Hermite with
/// harmonic-mean slopes), which keeps compositions and inverses monotone.
class CircleDiffeo {
 public:
  static constexpr int kDefaultGrid = 256;

  /// Throws MonotonicityViolation if the samples are not a valid lift and
  /// DomainError for fewer than 4 samples or non-finite values.
  explicit CircleDiffeo(std::vector<double> lift);

  static CircleDiffeo identity(int grid_size = kDefaultGrid);
  static CircleDiffeo rotation(double angle, int grid_size = kDefaultGrid);

  int grid_size() const noexcept { return static_cast<int>(lift_.size()); }
  const std::vector<double>& lift() const noexcept { return lift_; }
  double node(int i) const noexcept { return kTwoPi * i / grid_size(); }

  /// Interpolated lift at any real θ.
  double operator()(double theta) const;

  CircleDiffeo inverse() const;

  /// Sup over the grid of |lift − θ|, minimized over 2π shifts.
  double displacement_norm() const;

 private:
  double extended(long j) const;  // lift sample at node j ∈ Z
  double slope(long j) const;

  std::vector<double> lift_;
  std::vector<double> slopes_;
};

/// (outer ∘ inner), sampled on inner's grid.
CircleDiffeo compose(const CircleDiffeo& outer, const CircleDiffeo& inner);

/// Checks the lift invariants without constructing; returns an empty string
/// when valid, otherwise the reason.
std::string lift_violation(const std::vector<double>& lift);

}  // namespace chowkit
