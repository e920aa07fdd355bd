// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "chowkit/circle_diffeo.hpp"
#include "chowkit/trig_poly.hpp"

namespace chowkit {

struct IntegratorOptions {
  /// Error per unit step: a step of length h must satisfy |err| ≤ tol·min(h, 1).
  /// The bound is independent of the lift branch, so θ and θ + 2π integrate alike.
  double tolerance = 1e-10;
  long max_steps = 10'000'000;
};

/// θ(t) for dθ/ds = v(θ), θ(0) = θ0, by adaptive Dormand–Prince 5(4)
/// stepping. Returns the unwrapped lift value. t may be negative.
///
/// Throws IntegrationFailure on step-size underflow or when max_steps is hit.
double integrate_flow(const FieldEvaluator& v, double t, double theta0, const IntegratorOptions& opts = {});
double integrate_flow(const TrigPoly& v, double t, double theta0, const IntegratorOptions& opts = {});

/// One factor e^{tX} of a flow word. `label` names the field for
/// serialization; an empty label means the field is written inline.
struct FlowStep {
  std::string label;
  TrigPoly field;
  double duration = 0.0;
};

/// Finite sequence of flows applied in order: steps[0] acts first, so the
/// word [(X₁,t₁), …, (X_k,t_k)] is the map e^{t_k X_k} ∘ ⋯ ∘ e^{t₁ X₁}.
struct FlowWord {
  std::vector<FlowStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }

  /// Reversed steps with negated durations.
  FlowWord inverse() const;
  /// This word followed by `next`.
  FlowWord then(const FlowWord& next) const;
};

FlowWord concat(const FlowWord& first, const FlowWord& second);

/// Group commutator in chronological order: Q⁻¹, then P⁻¹, then Q, then P.
/// For single steps P = e^{sX}, Q = e^{sY} this is the four-step word
/// (Y,−s), (X,−s), (Y,s), (X,s), whose net displacement is s²·[X,Y] + O(s³)
/// with the bracket of trig_poly.hpp.
FlowWord commutator_word(const FlowWord& p, const FlowWord& q);

/// Advances every lift sample through each step in turn (post-composition
/// φ ↦ e^{tX} ∘ φ). Throws IntegrationFailure, MonotonicityViolation or
/// DomainError (non-finite duration).
CircleDiffeo apply_word(const FlowWord& word, const CircleDiffeo& phi, const IntegratorOptions& opts = {});
CircleDiffeo apply_step(const FlowStep& step, const CircleDiffeo& phi, const IntegratorOptions& opts = {});

/// Pointwise image of θ under a word.
double apply_word(const FlowWord& word, double theta, const IntegratorOptions& opts = {});

/// (commutator_word([(X,t)], [(Y,t)])(θ) − θ)/t², which tends to [X,Y](θ) as
/// t → 0. Throws DomainError for t = 0.
double commutator_flow_residual(const TrigPoly& x, const TrigPoly& y, double theta, double t,
                                const IntegratorOptions& opts = {});

}  // namespace chowkit
