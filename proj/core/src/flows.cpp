// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

// Dormand–Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b − b̂ (fifth minus embedded fourth order).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMinScale = 0.2;
constexpr double kMaxScale = 5.0;

}  // namespace

double integrate_flow(const FieldEvaluator& v, double t, double theta0, const IntegratorOptions& opts) {
  if (!std::isfinite(t) || !std::isfinite(theta0)) throw DomainError("integrate_flow needs finite t and θ0");
  if (t == 0.0 || v.is_zero()) return theta0;

  const double direction = t > 0 ? 1.0 : -1.0;
  const double span = std::abs(t);
  const double tol = opts.tolerance;

  double y = theta0;
  double k1 = v(y);
  // Autonomous 1-D field: bounded by |c0| + Σ|aₙ|+|bₙ|; start cautiously.
  double h = std::min(span, 0.1 / (1.0 + std::abs(k1)));
  double done = 0.0;
  long steps = 0;

  while (done < span) {
    if (++steps > opts.max_steps) throw IntegrationFailure("integrate_flow: step limit exceeded");
    bool last = false;
    if (done + h >= span) {
      h = span - done;
      last = true;
    }
    // A final step clipped to a sliver of the span is fine; only a step the
    // controller itself shrank that far is a failure.
    if (!last && h <= 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, done)) {
      throw IntegrationFailure("integrate_flow: step size underflow at s = " + std::to_string(direction * done));
    }
    const double hs = direction * h;
    const double k2 = v(y + hs * a21 * k1);
    const double k3 = v(y + hs * (a31 * k1 + a32 * k2));
    const double k4 = v(y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = v(y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = v(y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = v(y_new);
    const double err_abs = std::abs(hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
    // Error per unit step, on the circle's own scale: the lift branch that y
    // happens to sit on must not loosen the control.
    const double scale = tol * std::min(h, 1.0);
    const double err = err_abs / scale;

    if (err <= 1.0) {
      y = y_new;
      k1 = k7;  // first-same-as-last
      done = last ? span : done + h;
      const double grow = err == 0.0 ? kMaxScale : std::clamp(kSafety * std::pow(err, -0.2), kMinScale, kMaxScale);
      h *= grow;
    } else {
      h *= std::max(kMinScale, kSafety * std::pow(err, -0.2));
    }
  }
  return y;
}

double integrate_flow(const TrigPoly& v, double t, double theta0, const IntegratorOptions& opts) {
  return integrate_flow(FieldEvaluator(v), t, theta0, opts);
}

FlowWord FlowWord::inverse() const {
  FlowWord inv;
  inv.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) inv.steps.push_back({it->label, it->field, -it->duration});
  return inv;
}

FlowWord FlowWord::then(const FlowWord& next) const { return concat(*this, next); }

FlowWord concat(const FlowWord& first, const FlowWord& second) {
  FlowWord out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

FlowWord commutator_word(const FlowWord& p, const FlowWord& q) {
  return q.inverse().then(p.inverse()).then(q).then(p);
}

CircleDiffeo apply_step(const FlowStep& step, const CircleDiffeo& phi, const IntegratorOptions& opts) {
  if (!std::isfinite(step.duration)) throw DomainError("flow word durations must be finite");
  const FieldEvaluator v(step.field);
  if (step.duration == 0.0 || v.is_zero()) return phi;
  std::vector<double> lift = phi.lift();
  for (double& x : lift) x = integrate_flow(v, step.duration, x, opts);
  if (auto why = lift_violation(lift); !why.empty()) {
    throw MonotonicityViolation("apply_word: " + why + " (integration tolerance breached)");
  }
  return CircleDiffeo(std::move(lift));
}

CircleDiffeo apply_word(const FlowWord& word, const CircleDiffeo& phi, const IntegratorOptions& opts) {
  CircleDiffeo out = phi;
  for (const auto& step : word.steps) out = apply_step(step, out, opts);
  return out;
}

double apply_word(const FlowWord& word, double theta, const IntegratorOptions& opts) {
  for (const auto& step : word.steps) {
    if (!std::isfinite(step.duration)) throw DomainError("flow word durations must be finite");
    theta = integrate_flow(step.field, step.duration, theta, opts);
  }
  return theta;
}

double commutator_flow_residual(const TrigPoly& x, const TrigPoly& y, double theta, double t,
                                const IntegratorOptions& opts) {
  if (t == 0.0) throw DomainError("commutator_flow_residual needs t != 0");
  const FlowWord px{{{"X", x, t}}};
  const FlowWord qy{{{"Y", y, t}}};
  const double end = apply_word(commutator_word(px, qy), theta, opts);
  return (end - theta) / (t * t);
}

}  // namespace chowkit
