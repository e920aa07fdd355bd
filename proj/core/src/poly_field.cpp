// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/poly_field.hpp"

#include <numeric>
#include <sstream>

#include "chowkit/errors.hpp"

namespace chowkit {

Polynomial Polynomial::constant(int dim, Rational c) {
  Polynomial p(dim);
  p.add_term(Exponents(static_cast<std::size_t>(dim), 0), c);
  return p;
}

Polynomial Polynomial::coordinate(int dim, int i) {
  if (i < 0 || i >= dim) throw DimensionMismatch("coordinate index out of range");
  Exponents e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(i)] = 1;
  Polynomial p(dim);
  p.add_term(e, Rational(1));
  return p;
}

int Polynomial::total_degree() const noexcept {
  int degree = 0;
  for (const auto& [e, c] : terms_) degree = std::max(degree, std::accumulate(e.begin(), e.end(), 0));
  return degree;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != dim_) throw DimensionMismatch("monomial has wrong dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::partial(int i) const {
  Polynomial d(dim_);
  for (const auto& [e, c] : terms_) {
    const int power = e[static_cast<std::size_t>(i)];
    if (power == 0) continue;
    Exponents lowered = e;
    lowered[static_cast<std::size_t>(i)] -= 1;
    d.add_term(lowered, c * power);
  }
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("point has wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int p = 0; p < e[k]; ++p) term *= x[k];
    }
    sum += term;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("polynomial dimensions differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("polynomial dimensions differ");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("polynomial dimensions differ");
  Polynomial out(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(Polynomial a, const Rational& s) {
  if (s == 0) return Polynomial(a.dim_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

PolyField::PolyField(std::vector<Polynomial> components) : components_(std::move(components)) {
  const int n = dim();
  for (const auto& p : components_) {
    if (p.dim() != n) throw DimensionMismatch("field component dimension differs from field dimension");
  }
}

PolyField PolyField::coordinate(int dim, int i) {
  std::vector<Polynomial> comps(static_cast<std::size_t>(dim), Polynomial(dim));
  comps.at(static_cast<std::size_t>(i)) = Polynomial::constant(dim, Rational(1));
  return PolyField(std::move(comps));
}

bool PolyField::is_zero() const noexcept {
  for (const auto& p : components_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::vector<Rational> PolyField::evaluate(std::span<const Rational> x) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& p : components_) out.push_back(p.evaluate(x));
  return out;
}

PolyField& PolyField::operator+=(const PolyField& other) {
  if (other.dim() != dim()) throw DimensionMismatch("field dimensions differ");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

PolyField operator*(PolyField a, const Rational& s) {
  for (auto& p : a.components_) p = p * s;
  return a;
}

PolyField bracket(const PolyField& x, const PolyField& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("bracket of fields on different spaces");
  const int n = x.dim();
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial c(n);
    for (int j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const auto ui = static_cast<std::size_t>(i);
      c += x.components()[ui].partial(j) * y.components()[uj];
      c -= y.components()[ui].partial(j) * x.components()[uj];
    }
    comps.push_back(std::move(c));
  }
  return PolyField(std::move(comps));
}

std::string describe(const PolyField& f) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < f.dim(); ++i) {
    if (i) out << ", ";
    const auto& p = f.components()[static_cast<std::size_t>(i)];
    if (p.is_zero()) {
      out << "0";
      continue;
    }
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      if (!first) out << " + ";
      out << to_string(c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] > 0) out << "*x" << k + 1 << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
      }
      first = false;
    }
  }
  out << ")";
  return out.str();
}

}  // namespace chowkit
