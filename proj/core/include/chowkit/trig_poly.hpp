// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

/// Truncated real Fourier series v(θ) = c0 + Σ aₙ cos nθ + Σ bₙ sin nθ standing
/// for the circle vector field v(θ)∂θ. Coefficients are exact rationals.
///
/// Trailing zero modes are allowed; equality compares mode-by-mode after
/// zero-extending the shorter operand.
class TrigPoly {
 public:
  TrigPoly() = default;

  /// Throws DomainError unless cos and sin have the same length.
  TrigPoly(Rational c0, std::vector<Rational> cos_coeffs, std::vector<Rational> sin_coeffs);

  static TrigPoly constant(Rational c = Rational(1));
  /// c·cos nθ ∂θ, n ≥ 1.
  static TrigPoly cos_mode(int n, Rational c = Rational(1));
  /// c·sin nθ ∂θ, n ≥ 1.
  static TrigPoly sin_mode(int n, Rational c = Rational(1));
  /// Unit basis field by flat index: 0 → ∂θ, 2n−1 → cos nθ ∂θ, 2n → sin nθ ∂θ.
  static TrigPoly basis(int index);

  int max_mode() const noexcept { return static_cast<int>(cos_.size()); }
  /// Highest mode carrying a nonzero coefficient; 0 for constants and zero.
  int effective_mode() const noexcept;
  bool is_zero() const noexcept;

  const Rational& c0() const noexcept { return c0_; }
  const std::vector<Rational>& cos_coeffs() const noexcept { return cos_; }
  const std::vector<Rational>& sin_coeffs() const noexcept { return sin_; }
  /// Zero-extended accessors; n ≥ 1.
  Rational cos_coeff(int n) const;
  Rational sin_coeff(int n) const;

  /// Flat coefficient vector of length 2N+1 in basis order; modes above N
  /// are ignored.
  std::vector<Rational> coefficients(int n_modes) const;
  static TrigPoly from_coefficients(const std::vector<Rational>& flat);

  /// Drops trailing zero modes.
  TrigPoly trimmed() const;
  TrigPoly derivative() const;

  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  TrigPoly& operator*=(const Rational& scalar);

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const Rational& s) { return a *= s; }
  friend TrigPoly operator*(const Rational& s, TrigPoly a) { return a *= s; }
  TrigPoly operator-() const;

  friend bool operator==(const TrigPoly& a, const TrigPoly& b);

 private:
  void resize_modes(int n);

  Rational c0_{0};
  std::vector<Rational> cos_;
  std::vector<Rational> sin_;
};

/// Pointwise product, expanded with product-to-sum identities.
TrigPoly multiply(const TrigPoly& a, const TrigPoly& b);

/// Lie bracket of circle vector fields with the sign convention
/// [v∂θ, w∂θ] = (v′w − w′v)∂θ. This is the negative of the commutator of
/// vector fields as derivations; with it, [sin θ∂θ, cos θ∂θ] = ∂θ.
TrigPoly bracket(const TrigPoly& v, const TrigPoly& w);

/// c0 + Σ aₙ cos nθ + Σ bₙ sin nθ in double precision.
double evaluate(const TrigPoly& v, double theta);

/// Human-readable form such as "3/2 sin1 + 1/2 sin3"; "0" for the zero field.
std::string describe(const TrigPoly& v);

/// Double-precision copy of a TrigPoly for hot numerical loops.
class FieldEvaluator {
 public:
  FieldEvaluator() = default;
  explicit FieldEvaluator(const TrigPoly& v);

  double operator()(double theta) const noexcept;
  bool is_zero() const noexcept { return zero_; }
  int max_mode() const noexcept { return static_cast<int>(cos_.size()); }

 private:
  double c0_ = 0.0;
  std::vector<double> cos_;
  std::vector<double> sin_;
  bool zero_ = true;
};

}  // namespace chowkit
