// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chowkit/circle_diffeo.hpp"
#include "chowkit/closure.hpp"
#include "chowkit/flows.hpp"

namespace chowkit {

/// Sup over the grid of |φ̃(θᵢ) − ψ̃(θᵢ)|, minimized over 2π shifts of one
/// lift. Throws DimensionMismatch when the grids differ.
double diffeo_distance(const CircleDiffeo& phi, const CircleDiffeo& psi);

struct SteeringProblem {
  CircleFamily family = standard_circle_family();
  CircleDiffeo target = CircleDiffeo::identity();
  /// Starting point; identity on the target's grid when absent.
  std::optional<CircleDiffeo> start;
  double epsilon = 1e-2;
  int budget = 400;  // maximum word length
  int primitive_depth = 1;
  IntegratorOptions integrator;
};

enum class SteeringStatus { Converged, BudgetExhausted, Stalled };

std::string_view to_string(SteeringStatus s);
SteeringStatus parse_steering_status(std::string_view s);

struct SteeringResult {
  FlowWord word;
  /// diffeo_distance(apply_word(word, start), target), bitwise.
  double achieved_error = 0.0;
  int iterations = 0;  // spectral rounds plus polish steps
  bool converged = false;
  SteeringStatus status = SteeringStatus::Converged;
  /// Distance to the target before any step, then after each step of `word`.
  std::vector<double> trajectory;
};

/// Builds a flow word over the family moving `start` to within epsilon of
/// the target.
///
/// Spectral rounds: the displacement of target∘current⁻¹ is split into
/// Fourier basis fields; each basis field is written over iterated brackets
/// of height ≤ primitive_depth and realized by nested commutator primitives,
/// with its amplitude refined by a line search on the true distance. Then a
/// greedy polish over single steps ±ε·2^j of each family field.
///
/// Every accepted group of steps strictly lowers the distance and the step
/// sequence does not depend on the budget, so a larger budget never gives a
/// worse result.
///
/// Throws NotBracketGenerating when a significant mode of the target's
/// displacement lies outside the family's bracket closure, DomainError for
/// epsilon ≤ 0, budget < 0 or primitive_depth < 1, DimensionMismatch when
/// start and target grids differ.
SteeringResult steer(const SteeringProblem& problem);

/// Flow word realizing approximately coeff·G for the closure element G with
/// index `index`: a single step for seeds, otherwise nested commutator
/// primitives with s = |coeff|^{1/letters}, the outermost pair swapped when
/// coeff < 0.
FlowWord bracket_primitive(const ClosureReport& report, std::size_t index, double coeff);

}  // namespace chowkit
