// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "chowkit/closure.hpp"
#include "chowkit/convex.hpp"
#include "chowkit/flows.hpp"
#include "chowkit/steering.hpp"

using namespace chowkit;

namespace {

PointSet cloud(int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  PointSet out(static_cast<std::size_t>(count), Point(static_cast<std::size_t>(n)));
  for (auto& p : out) {
    for (double& c : p) c = u(rng);
  }
  return out;
}

void BM_Bracket(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  TrigPoly x, y;
  for (int n = 1; n <= m; ++n) {
    x = x + TrigPoly::cos_mode(n, Rational(1, n)) + TrigPoly::sin_mode(n, Rational(-2, n + 1));
    y = y + TrigPoly::sin_mode(n, Rational(3, n + 2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(8)->Arg(32);

void BM_Closure(benchmark::State& state) {
  const auto cap = static_cast<int>(state.range(0));
  const CircleFamily family = standard_circle_family();
  for (auto _ : state) benchmark::DoNotOptimize(closure(family, 8, cap));
}
BENCHMARK(BM_Closure)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IntegrateFlow(benchmark::State& state) {
  const TrigPoly v = TrigPoly::sin_mode(1) + TrigPoly::cos_mode(3, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_flow(v, 1.0, 0.4));
}
BENCHMARK(BM_IntegrateFlow)->Unit(benchmark::kMicrosecond);

void BM_ApplyWord(benchmark::State& state) {
  const auto grid = static_cast<int>(state.range(0));
  const FlowWord w{{{"sin", TrigPoly::sin_mode(1), 0.4},
                    {"cos", TrigPoly::cos_mode(1), -0.3},
                    {"sin2", TrigPoly::sin_mode(2), 0.2},
                    {"cos", TrigPoly::cos_mode(1), 0.3}}};
  const CircleDiffeo id = CircleDiffeo::identity(grid);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(w, id));
}
BENCHMARK(BM_ApplyWord)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SteerRotation(benchmark::State& state) {
  SteeringProblem p;
  p.target = CircleDiffeo::rotation(0.3, 256);
  for (auto _ : state) benchmark::DoNotOptimize(steer(p));
}
BENCHMARK(BM_SteerRotation)->Unit(benchmark::kMillisecond);

void BM_Minkowski(benchmark::State& state) {
  const ConvexBody d = symmetrize(ConvexBody::box({1.0, 2.0, 0.5}));
  const Point x{0.3, -1.2, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(minkowski(d, x));
}
BENCHMARK(BM_Minkowski);

void BM_Separate(benchmark::State& state) {
  const auto count = static_cast<int>(state.range(0));
  PointSet a = cloud(3, count, 7);
  for (auto& p : a) p[0] += 10.0;
  const ConvexBody b = ConvexBody::box({1.0, 1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(separate(a, b));
}
BENCHMARK(BM_Separate)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_Cone(benchmark::State& state) {
  const auto count = static_cast<int>(state.range(0));
  const PointSet b = cloud(2, count, 11);
  const ConvexBody d = ConvexBody::box({1.0, 1.0});
  const Point x0{b[0][0] + 3.0, b[0][1] + 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(cone_extremal_point(b, b[0], x0, d));
}
BENCHMARK(BM_Cone)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
