// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "chowkit/closure.hpp"
#include "chowkit/errors.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace chowkit;

namespace {

CircleFamily family_of(std::initializer_list<std::pair<const char*, TrigPoly>> fields) {
  CircleFamily f;
  for (const auto& [label, field] : fields) f.add(label, field);
  return f;
}

bool in_span(const ClosureReport& r, const TrigPoly& v) { return ClosureCertificate(r).express(v).has_value(); }

PolyField field3(std::vector<Polynomial> comps) { return PolyField(std::move(comps)); }

}  // namespace

TEST_CASE("standard family at depth 2 reaches the mode-3 fields") {
  const ClosureReport r = closure(standard_circle_family(), 2, 3);
  CHECK(in_span(r, TrigPoly::constant(1)));
  CHECK(in_span(r, TrigPoly::sin_mode(3)));
  CHECK(in_span(r, TrigPoly::cos_mode(3)));
  CHECK(spanning_test(r, 3));
}

TEST_CASE("certificate reproduces the field exactly") {
  const ClosureReport r = closure(standard_circle_family(), 2, 3);
  const auto combo = ClosureCertificate(r).express(TrigPoly::sin_mode(3));
  REQUIRE(combo);
  TrigPoly sum;
  for (const auto& [idx, c] : *combo) sum += r.generated.at(idx).field * c;
  CHECK(sum == TrigPoly::sin_mode(3));
}

TEST_CASE("single constant field is a fixed point at depth 1") {
  const ClosureReport r = closure(family_of({{"d", TrigPoly::constant(1)}}), 5, 2);
  CHECK(r.rank == 1);
  CHECK(r.fixed_point);
  CHECK(r.depth_used == 1);
  CHECK_FALSE(spanning_test(r, 1));
}

TEST_CASE("mode-2 family stays in a three-dimensional algebra") {
  const CircleFamily f = family_of({{"cos2", TrigPoly::cos_mode(2)}, {"sin2", TrigPoly::sin_mode(2)}});
  const ClosureReport r = closure(f, 6, 8);
  CHECK(r.rank == 3);
  CHECK(oracle::brute_force_closure_rank({TrigPoly::cos_mode(2), TrigPoly::sin_mode(2)}, 6, 8) == 3);
  CHECK_FALSE(spanning_test(r, 2));
  CHECK_FALSE(in_span(r, TrigPoly::cos_mode(1)));
  CHECK_FALSE(in_span(r, TrigPoly::sin_mode(1)));
}

TEST_CASE("rank equals the exact rank of the generated fields") {
  const ClosureReport r = closure(standard_circle_family(), 3, 6);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : r.generated) rows.push_back(oracle::flat(g.field, 6));
  CHECK(oracle::rank(rows) == r.rank);
  CHECK(r.generated.size() == r.rank);
}

TEST_CASE("rank agrees with brute-force bracket enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> nseeds(1, 4), mode(0, 2), cap(2, 6), depth(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    CircleFamily f;
    std::vector<TrigPoly> seeds;
    const int k = nseeds(rng);
    for (int i = 0; i < k; ++i) {
      const int m = mode(rng);
      // Sparse seeds (a single basis field or a two-term sum) keep the
      // brute-force enumeration small.
      TrigPoly s = m == 0 ? TrigPoly::constant(1) : (trial % 2 ? TrigPoly::cos_mode(m) : TrigPoly::sin_mode(m));
      if (i % 2) s += TrigPoly::sin_mode(1 + (m + i) % 2, Rational(i + 1, 2));
      seeds.push_back(s);
      f.add("s" + std::to_string(i), s);
    }
    const int c = std::max(cap(rng), 2);
    const int d = depth(rng);
    INFO("trial " << trial << " cap " << c << " depth " << d);
    CHECK(closure(f, d, c).rank == oracle::brute_force_closure_rank(seeds, d, c));
  }
}

TEST_CASE("rank is monotone in depth and stable past a fixed point") {
  std::size_t prev = 0;
  for (int d = 1; d <= 5; ++d) {
    const ClosureReport r = closure(standard_circle_family(), d, 6);
    CHECK(r.rank >= prev);
    prev = r.rank;
    if (r.fixed_point) CHECK(closure(standard_circle_family(), d + 1, 6).rank == r.rank);
  }
}

TEST_CASE("lower cap never spans more") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    CircleFamily f;
    f.add("a", testing_support::random_rational_poly(rng, 1 + trial % 2));
    f.add("b", TrigPoly::sin_mode(2));
    for (int n = 1; n <= 3; ++n) {
      const bool low = spanning_test(closure(f, 3, 3), n);
      const bool high = spanning_test(closure(f, 3, 5), n);
      CHECK((!low || high));
    }
  }
}

TEST_CASE("closure rejects bad input") {
  CHECK_THROWS_AS(closure(CircleFamily{}, 2, 3), EmptyFamily);
  CHECK_THROWS_AS(closure(standard_circle_family(), 0, 3), DomainError);
  CHECK_THROWS_AS(closure(standard_circle_family(), 2, 1), DomainError);
  CircleFamily dup;
  dup.add("x", TrigPoly::sin_mode(1));
  dup.add("x", TrigPoly::cos_mode(1));
  CHECK_THROWS_AS(closure(dup, 2, 3), DomainError);
  CHECK_THROWS_AS(spanning_test(closure(standard_circle_family(), 2, 3), 4), DomainError);
}

TEST_CASE("closure is deterministic") {
  const ClosureReport a = closure(standard_circle_family(), 4, 8);
  const ClosureReport b = closure(standard_circle_family(), 4, 8);
  REQUIRE(a.generated.size() == b.generated.size());
  for (std::size_t i = 0; i < a.generated.size(); ++i) {
    CHECK(a.generated[i].label == b.generated[i].label);
    CHECK(a.generated[i].field == b.generated[i].field);
  }
}

TEST_CASE("polynomial bracket of the Heisenberg pair") {
  const PolyField x1 = PolyField::coordinate(3, 0);
  Polynomial x(3);
  x.add_term({1, 0, 0}, Rational(1));
  const PolyField x2 = field3({Polynomial(3), Polynomial::constant(3, 1), x});
  // [X, Y] = DX·Y − DY·X with the circle sign convention: −∂z here.
  const PolyField b = bracket(x1, x2);
  CHECK(b == field3({Polynomial(3), Polynomial(3), Polynomial::constant(3, -1)}));
}

TEST_CASE("Lie rank at a point") {
  EuclideanFamily frame;
  frame.add("dx", PolyField::coordinate(2, 0));
  frame.add("dy", PolyField::coordinate(2, 1));
  const std::vector<double> p{0.3, -2.0};
  CHECK(lie_rank_at_point(frame, std::span<const double>(p), 1) == 2);

  EuclideanFamily heis;
  Polynomial x(3);
  x.add_term({1, 0, 0}, Rational(1));
  heis.add("X1", PolyField::coordinate(3, 0));
  heis.add("X2", field3({Polynomial(3), Polynomial::constant(3, 1), x}));
  const std::vector<double> origin{0, 0, 0};
  CHECK(lie_rank_at_point(heis, std::span<const double>(origin), 2) == 3);
  CHECK(lie_rank_at_point(heis, std::span<const double>(origin), 1) == 3);  // depth 1 is one bracket round

  EuclideanFamily single;
  single.add("dx", PolyField::coordinate(2, 0));
  for (int d = 1; d <= 5; ++d) CHECK(lie_rank_at_point(single, std::span<const double>(p), d) == 1);

  const std::vector<double> wrong{1, 2, 3};
  CHECK_THROWS_AS(lie_rank_at_point(frame, std::span<const double>(wrong), 1), DimensionMismatch);
}
