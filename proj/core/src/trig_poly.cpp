// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "chowkit/errors.hpp"

namespace chowkit {

TrigPoly::TrigPoly(Rational c0, std::vector<Rational> cos_coeffs, std::vector<Rational> sin_coeffs)
    : c0_(std::move(c0)), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  if (cos_.size() != sin_.size()) {
    throw DomainError("TrigPoly needs equally many cos and sin coefficients");
  }
}

TrigPoly TrigPoly::constant(Rational c) { return TrigPoly(std::move(c), {}, {}); }

TrigPoly TrigPoly::cos_mode(int n, Rational c) {
  if (n < 1) throw DomainError("cos_mode needs n >= 1");
  TrigPoly p;
  p.resize_modes(n);
  p.cos_[n - 1] = std::move(c);
  return p;
}

TrigPoly TrigPoly::sin_mode(int n, Rational c) {
  if (n < 1) throw DomainError("sin_mode needs n >= 1");
  TrigPoly p;
  p.resize_modes(n);
  p.sin_[n - 1] = std::move(c);
  return p;
}

TrigPoly TrigPoly::basis(int index) {
  if (index < 0) throw DomainError("basis index must be non-negative");
  if (index == 0) return constant();
  int n = (index + 1) / 2;
  return (index % 2 == 1) ? cos_mode(n) : sin_mode(n);
}

int TrigPoly::effective_mode() const noexcept {
  for (int n = max_mode(); n >= 1; --n) {
    if (cos_[n - 1] != 0 || sin_[n - 1] != 0) return n;
  }
  return 0;
}

bool TrigPoly::is_zero() const noexcept { return c0_ == 0 && effective_mode() == 0; }

Rational TrigPoly::cos_coeff(int n) const {
  return (n >= 1 && n <= max_mode()) ? cos_[n - 1] : Rational(0);
}

Rational TrigPoly::sin_coeff(int n) const {
  return (n >= 1 && n <= max_mode()) ? sin_[n - 1] : Rational(0);
}

std::vector<Rational> TrigPoly::coefficients(int n_modes) const {
  std::vector<Rational> flat(2 * static_cast<std::size_t>(n_modes) + 1);
  flat[0] = c0_;
  for (int n = 1; n <= std::min(n_modes, max_mode()); ++n) {
    flat[2 * n - 1] = cos_[n - 1];
    flat[2 * n] = sin_[n - 1];
  }
  return flat;
}

TrigPoly TrigPoly::from_coefficients(const std::vector<Rational>& flat) {
  if (flat.empty()) return {};
  int n_modes = static_cast<int>(flat.size() - 1) / 2;
  TrigPoly p;
  p.c0_ = flat[0];
  p.resize_modes(n_modes);
  for (int n = 1; n <= n_modes; ++n) {
    p.cos_[n - 1] = flat[2 * n - 1];
    p.sin_[n - 1] = flat[2 * n];
  }
  return p;
}

TrigPoly TrigPoly::trimmed() const {
  TrigPoly p = *this;
  p.resize_modes(effective_mode());
  return p;
}

TrigPoly TrigPoly::derivative() const {
  // d/dθ (a cos nθ + b sin nθ) = n b cos nθ − n a sin nθ
  TrigPoly d;
  d.resize_modes(max_mode());
  for (int n = 1; n <= max_mode(); ++n) {
    d.cos_[n - 1] = sin_[n - 1] * n;
    d.sin_[n - 1] = -cos_[n - 1] * n;
  }
  return d;
}

void TrigPoly::resize_modes(int n) {
  cos_.resize(static_cast<std::size_t>(n));
  sin_.resize(static_cast<std::size_t>(n));
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  if (other.max_mode() > max_mode()) resize_modes(other.max_mode());
  c0_ += other.c0_;
  for (int n = 0; n < other.max_mode(); ++n) {
    cos_[n] += other.cos_[n];
    sin_[n] += other.sin_[n];
  }
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  if (other.max_mode() > max_mode()) resize_modes(other.max_mode());
  c0_ -= other.c0_;
  for (int n = 0; n < other.max_mode(); ++n) {
    cos_[n] -= other.cos_[n];
    sin_[n] -= other.sin_[n];
  }
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& scalar) {
  c0_ *= scalar;
  for (auto& c : cos_) c *= scalar;
  for (auto& s : sin_) s *= scalar;
  return *this;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly p = *this;
  p *= Rational(-1);
  return p;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  if (a.c0_ != b.c0_) return false;
  int n_max = std::max(a.max_mode(), b.max_mode());
  for (int n = 1; n <= n_max; ++n) {
    if (a.cos_coeff(n) != b.cos_coeff(n) || a.sin_coeff(n) != b.sin_coeff(n)) return false;
  }
  return true;
}

namespace {

// Accumulates c·cos kθ or c·sin kθ for any integer k, folding negative
// frequencies with cos(−k) = cos k and sin(−k) = −sin k.
struct ModeAccumulator {
  Rational c0{0};
  std::vector<Rational> cos;
  std::vector<Rational> sin;

  explicit ModeAccumulator(int n) : cos(static_cast<std::size_t>(n)), sin(static_cast<std::size_t>(n)) {}

  void add_cos(int k, const Rational& c) {
    k = std::abs(k);
    if (k == 0) {
      c0 += c;
    } else {
      cos[k - 1] += c;
    }
  }
  void add_sin(int k, const Rational& c) {
    if (k == 0) return;
    if (k < 0) {
      sin[-k - 1] -= c;
    } else {
      sin[k - 1] += c;
    }
  }
};

}  // namespace

TrigPoly multiply(const TrigPoly& a, const TrigPoly& b) {
  const int na = a.max_mode();
  const int nb = b.max_mode();
  ModeAccumulator acc(na + nb);
  const Rational half(1, 2);

  // The constant term is the coefficient of cos 0θ; sin 0θ never appears.
  auto a_cos = [&](int m) -> const Rational& { return m == 0 ? a.c0() : a.cos_coeffs()[m - 1]; };
  auto b_cos = [&](int n) -> const Rational& { return n == 0 ? b.c0() : b.cos_coeffs()[n - 1]; };

  for (int m = 0; m <= na; ++m) {
    const Rational& am = a_cos(m);
    const Rational zero(0);
    const Rational& bm_sin = m == 0 ? zero : a.sin_coeffs()[m - 1];
    for (int n = 0; n <= nb; ++n) {
      const Rational& bn = b_cos(n);
      const Rational& bn_sin = n == 0 ? zero : b.sin_coeffs()[n - 1];
      if (am != 0 && bn != 0) {
        Rational c = am * bn * half;  // cos m cos n
        acc.add_cos(m - n, c);
        acc.add_cos(m + n, c);
      }
      if (bm_sin != 0 && bn_sin != 0) {
        Rational c = bm_sin * bn_sin * half;  // sin m sin n
        acc.add_cos(m - n, c);
        acc.add_cos(m + n, -c);
      }
      if (bm_sin != 0 && bn != 0) {
        Rational c = bm_sin * bn * half;  // sin m cos n
        acc.add_sin(m + n, c);
        acc.add_sin(m - n, c);
      }
      if (am != 0 && bn_sin != 0) {
        Rational c = am * bn_sin * half;  // cos m sin n
        acc.add_sin(m + n, c);
        acc.add_sin(m - n, -c);
      }
    }
  }
  return TrigPoly(std::move(acc.c0), std::move(acc.cos), std::move(acc.sin)).trimmed();
}

TrigPoly bracket(const TrigPoly& v, const TrigPoly& w) {
  return (multiply(v.derivative(), w) - multiply(w.derivative(), v)).trimmed();
}

double evaluate(const TrigPoly& v, double theta) {
  double sum = to_double(v.c0());
  for (int n = 1; n <= v.max_mode(); ++n) {
    const double a = to_double(v.cos_coeffs()[n - 1]);
    const double b = to_double(v.sin_coeffs()[n - 1]);
    if (a != 0.0) sum += a * std::cos(n * theta);
    if (b != 0.0) sum += b * std::sin(n * theta);
  }
  return sum;
}

std::string describe(const TrigPoly& v) {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << "-";
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || name.empty()) {
      out << numerator(mag);
      if (denominator(mag) != 1) out << "/" << denominator(mag);
      if (!name.empty()) out << " ";
    }
    out << name;
    first = false;
  };
  term(v.c0(), "");
  for (int n = 1; n <= v.max_mode(); ++n) {
    term(v.cos_coeffs()[n - 1], "cos" + std::to_string(n));
    term(v.sin_coeffs()[n - 1], "sin" + std::to_string(n));
  }
  return first ? "0" : out.str();
}

FieldEvaluator::FieldEvaluator(const TrigPoly& v) : c0_(to_double(v.c0())) {
  const TrigPoly t = v.trimmed();
  cos_.reserve(static_cast<std::size_t>(t.max_mode()));
  sin_.reserve(static_cast<std::size_t>(t.max_mode()));
  for (int n = 1; n <= t.max_mode(); ++n) {
    cos_.push_back(to_double(t.cos_coeffs()[n - 1]));
    sin_.push_back(to_double(t.sin_coeffs()[n - 1]));
  }
  zero_ = c0_ == 0.0 && std::all_of(cos_.begin(), cos_.end(), [](double x) { return x == 0.0; }) &&
          std::all_of(sin_.begin(), sin_.end(), [](double x) { return x == 0.0; });
}

double FieldEvaluator::operator()(double theta) const noexcept {
  double sum = c0_;
  if (cos_.empty()) return sum;
  // Angle-addition recurrence for cos nθ, sin nθ.
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double cn = c1;
  double sn = s1;
  const std::size_t n_modes = cos_.size();
  for (std::size_t n = 0; n < n_modes; ++n) {
    sum += cos_[n] * cn + sin_[n] * sn;
    const double next_c = cn * c1 - sn * s1;
    sn = sn * c1 + cn * s1;
    cn = next_c;
  }
  return sum;
}

}  // namespace chowkit
