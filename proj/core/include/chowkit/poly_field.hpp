// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

/// Exponent vector of a monomial x₁^e₁ ⋯ xₙ^eₙ.
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in lexicographic exponent order and zero terms are never stored.
class Polynomial {
 public:
  explicit Polynomial(int dim = 0) : dim_(dim) {}

  static Polynomial constant(int dim, Rational c);
  /// The coordinate function xᵢ.
  static Polynomial coordinate(int dim, int i);

  int dim() const noexcept { return dim_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const noexcept;

  /// Adds c·x^e (merging with an existing term).
  void add_term(const Exponents& e, const Rational& c);

  Polynomial partial(int i) const;
  Rational evaluate(std::span<const Rational> x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  int dim_;
  std::map<Exponents, Rational> terms_;
};

/// Polynomial vector field Σ Pᵢ(x) ∂/∂xᵢ on Rⁿ.
class PolyField {
 public:
  PolyField() = default;
  /// Throws DimensionMismatch unless every component has ambient dimension
  /// components.size().
  explicit PolyField(std::vector<Polynomial> components);

  /// The constant coordinate field ∂/∂xᵢ.
  static PolyField coordinate(int dim, int i);

  int dim() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  std::vector<Rational> evaluate(std::span<const Rational> x) const;

  PolyField& operator+=(const PolyField& other);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator*(PolyField a, const Rational& s);
  friend bool operator==(const PolyField& a, const PolyField& b) = default;

 private:
  std::vector<Polynomial> components_;
};

/// Jacobian-rule bracket with the same sign as the circle bracket:
/// [X, Y] = DX·Y − DY·X. This is the negative of the usual commutator
/// (DY·X − DX·Y); signs flip, ranks never do.
PolyField bracket(const PolyField& x, const PolyField& y);

std::string describe(const PolyField& f);

}  // namespace chowkit
