// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "chowkit/trig_poly.hpp"

namespace testing_support {

// Random trig polynomial with small-denominator rational coefficients.
inline chowkit::TrigPoly random_rational_poly(std::mt19937_64& rng, int max_mode) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  auto q = [&] { return chowkit::Rational(num(rng), den(rng)); };
  std::vector<chowkit::Rational> cs, ss;
  for (int n = 0; n < max_mode; ++n) {
    cs.push_back(q());
    ss.push_back(q());
  }
  return chowkit::TrigPoly(q(), cs, ss);
}

// Random field whose mode-n coefficients lie in ±amp/max(n,1), as exact
// dyadic rationals of the drawn doubles.
inline chowkit::TrigPoly random_smooth_poly(std::mt19937_64& rng, int max_mode, double amp) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto c = [&](int n) { return chowkit::rational_from_double(u(rng) * amp / std::max(n, 1)); };
  std::vector<chowkit::Rational> cs, ss;
  for (int n = 1; n <= max_mode; ++n) {
    cs.push_back(c(n));
    ss.push_back(c(n));
  }
  return chowkit::TrigPoly(c(0), cs, ss);
}

}  // namespace testing_support
