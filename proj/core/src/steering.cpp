// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/steering.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/math/tools/minima.hpp>

#include "chowkit/errors.hpp"

namespace chowkit {

double diffeo_distance(const CircleDiffeo& phi, const CircleDiffeo& psi) {
  if (phi.grid_size() != psi.grid_size()) {
    throw DimensionMismatch("diffeo_distance: grid sizes " + std::to_string(phi.grid_size()) + " and " +
                            std::to_string(psi.grid_size()));
  }
  const auto& a = phi.lift();
  const auto& b = psi.lift();
  const double k0 = std::round((a.front() - b.front()) / kTwoPi);
  double best = INFINITY;
  for (double k = k0 - 1; k <= k0 + 1; k += 1.0) {
    double sup = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sup = std::max(sup, std::abs(a[i] - b[i] - kTwoPi * k));
    best = std::min(best, sup);
  }
  return best;
}

std::string_view to_string(SteeringStatus s) {
  switch (s) {
    case SteeringStatus::Converged:
      return "converged";
    case SteeringStatus::BudgetExhausted:
      return "budget_exhausted";
    case SteeringStatus::Stalled:
      return "stalled";
  }
  return "stalled";
}

SteeringStatus parse_steering_status(std::string_view s) {
  if (s == "converged") return SteeringStatus::Converged;
  if (s == "budget_exhausted") return SteeringStatus::BudgetExhausted;
  if (s == "stalled") return SteeringStatus::Stalled;
  throw ParseError("unknown steering status '" + std::string(s) + "'");
}

namespace {

FlowWord nested_word(const ClosureReport& report, std::size_t index, double s) {
  const auto& g = report.generated.at(index);
  if (!g.parents) return FlowWord{{{g.label, g.field, s}}};
  return commutator_word(nested_word(report, g.parents->first, s), nested_word(report, g.parents->second, s));
}

// Displacement ψ̃(θᵢ) − θᵢ with the 2π multiple chosen so the mean lies in
// (−π, π].
std::vector<double> displacement(const CircleDiffeo& psi) {
  std::vector<double> d(static_cast<std::size_t>(psi.grid_size()));
  double mean = 0.0;
  for (int i = 0; i < psi.grid_size(); ++i) {
    d[static_cast<std::size_t>(i)] = psi.lift()[static_cast<std::size_t>(i)] - psi.node(i);
    mean += d[static_cast<std::size_t>(i)];
  }
  mean /= psi.grid_size();
  const double shift = kTwoPi * std::round(mean / kTwoPi);
  for (double& x : d) x -= shift;
  return d;
}

// Coefficients of the displacement in the basis ordering of
// TrigPoly::basis: [c0, a1, b1, a2, b2, ...] up to mode n.
std::vector<double> fourier(const std::vector<double>& d, int n) {
  const auto m = static_cast<double>(d.size());
  std::vector<double> out(static_cast<std::size_t>(2 * n + 1), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double th = kTwoPi * static_cast<double>(i) / m;
    out[0] += d[i] / m;
    for (int k = 1; k <= n; ++k) {
      out[static_cast<std::size_t>(2 * k - 1)] += 2.0 * d[i] * std::cos(k * th) / m;
      out[static_cast<std::size_t>(2 * k)] += 2.0 * d[i] * std::sin(k * th) / m;
    }
  }
  return out;
}

int family_max_mode(const CircleFamily& family) {
  int n = 0;
  for (const auto& m : family.members) n = std::max(n, m.field.effective_mode());
  return n;
}

// A basis field expressed over closure elements, ready to realize at any
// amplitude.
struct ModeGroup {
  std::size_t basis_index;
  std::vector<std::pair<std::size_t, double>> combo;
};

class Planner {
 public:
  explicit Planner(const SteeringProblem& p)
      : p_(p),
        current_(p.start ? *p.start : CircleDiffeo::identity(p.target.grid_size())),
        error_(diffeo_distance(current_, p.target)) {
    result_.trajectory.push_back(error_);
  }

  SteeringResult run(const ClosureReport& report, int n_modes) {
    if (finish_if_converged()) return std::move(result_);
    if (spectral_phase(report, n_modes)) return std::move(result_);
    polish_phase();
    return std::move(result_);
  }

 private:
  // Returns true when planning is over (converged or out of budget).
  bool spectral_phase(const ClosureReport& report, int n_modes) {
    const ClosureCertificate cert(report);
    std::vector<ModeGroup> groups;
    for (std::size_t b = 0; b < static_cast<std::size_t>(2 * n_modes + 1); ++b) {
      auto combo = cert.express(TrigPoly::basis(b));
      if (!combo) continue;
      ModeGroup g{b, {}};
      for (const auto& [idx, c] : *combo) g.combo.emplace_back(idx, to_double(c));
      groups.push_back(std::move(g));
    }
    const double floor_amp = p_.epsilon / 16;
    for (int round = 0; round < kMaxRounds; ++round) {
      ++result_.iterations;
      const auto coeffs = fourier(displacement(compose(p_.target, current_.inverse())), n_modes);
      bool improved = false;
      for (const auto& g : groups) {
        const double delta = coeffs[g.basis_index];
        if (std::abs(delta) <= floor_amp) continue;
        auto word_at = [&](double lambda) {
          FlowWord w;
          for (const auto& [idx, c] : g.combo) w = w.then(bracket_primitive(report, idx, lambda * delta * c));
          return w;
        };
        if (result_.word.size() + word_at(1.0).size() > static_cast<std::size_t>(p_.budget)) {
          result_.status = SteeringStatus::BudgetExhausted;
          return true;
        }
        auto objective = [&](double lambda) {
          return diffeo_distance(apply_word(word_at(lambda), current_, p_.integrator), p_.target);
        };
        std::uintmax_t iters = kLineSearchIters;
        const auto [lambda, value] = boost::math::tools::brent_find_minima(objective, 0.0, 2.0, 26, iters);
        if (!(value < error_) || lambda == 0.0) continue;
        commit(word_at(lambda));
        improved = true;
        if (finish_if_converged()) return true;
      }
      if (!improved) break;
    }
    return false;
  }

  void polish_phase() {
    const auto fields = p_.family.in_label_order();
    std::vector<double> durations;
    const int jmax = static_cast<int>(std::floor(std::log2(std::numbers::pi / p_.epsilon)));
    for (int j = 0; j <= std::max(0, jmax); ++j) {
      durations.push_back(std::ldexp(p_.epsilon, j));
      durations.push_back(-std::ldexp(p_.epsilon, j));
    }
    while (true) {
      if (result_.word.size() + 1 > static_cast<std::size_t>(p_.budget)) {
        result_.status = SteeringStatus::BudgetExhausted;
        return;
      }
      ++result_.iterations;
      double best = error_;
      std::optional<FlowStep> pick;
      for (const auto& f : fields) {
        for (double t : durations) {
          FlowStep step{f.label, f.field, t};
          const double e = diffeo_distance(apply_step(step, current_, p_.integrator), p_.target);
          if (e < best) {
            best = e;
            pick = step;
          }
        }
      }
      if (!pick) {
        result_.status = SteeringStatus::Stalled;
        return;
      }
      commit(FlowWord{{*pick}});
      if (finish_if_converged()) return;
    }
  }

  void commit(const FlowWord& w) {
    for (const auto& step : w.steps) {
      current_ = apply_step(step, current_, p_.integrator);
      error_ = diffeo_distance(current_, p_.target);
      result_.word.steps.push_back(step);
      result_.trajectory.push_back(error_);
    }
    result_.achieved_error = error_;
  }

  bool finish_if_converged() {
    result_.achieved_error = error_;
    if (error_ <= p_.epsilon) {
      result_.converged = true;
      result_.status = SteeringStatus::Converged;
      return true;
    }
    return false;
  }

  static constexpr int kMaxRounds = 50;
  static constexpr std::uintmax_t kLineSearchIters = 60;

  const SteeringProblem& p_;
  CircleDiffeo current_;
  double error_;
  SteeringResult result_;
};

}  // namespace

FlowWord bracket_primitive(const ClosureReport& report, std::size_t index, double coeff) {
  const auto& g = report.generated.at(index);
  if (!g.parents) return FlowWord{{{g.label, g.field, coeff}}};
  const double s = std::pow(std::abs(coeff), 1.0 / g.letters);
  FlowWord p = nested_word(report, g.parents->first, s);
  FlowWord q = nested_word(report, g.parents->second, s);
  return coeff >= 0 ? commutator_word(p, q) : commutator_word(q, p);
}

SteeringResult steer(const SteeringProblem& problem) {
  problem.family.validate();
  if (!(problem.epsilon > 0)) throw DomainError("steer needs epsilon > 0");
  if (problem.budget < 0) throw DomainError("steer needs budget >= 0");
  if (problem.primitive_depth < 1) throw DomainError("steer needs primitive_depth >= 1");
  const CircleDiffeo start = problem.start ? *problem.start : CircleDiffeo::identity(problem.target.grid_size());
  if (start.grid_size() != problem.target.grid_size()) {
    throw DimensionMismatch("steer: start and target grids differ");
  }

  // Significant modes of the displacement still to be produced.
  const int nyquist = problem.target.grid_size() / 2 - 1;
  const auto coeffs = fourier(displacement(compose(problem.target, start.inverse())), nyquist);
  std::set<int> significant;
  for (int k = 0; k <= nyquist; ++k) {
    const double amp = k == 0 ? std::abs(coeffs[0])
                              : std::hypot(coeffs[static_cast<std::size_t>(2 * k - 1)],
                                           coeffs[static_cast<std::size_t>(2 * k)]);
    if (amp > problem.epsilon / 8) significant.insert(k);
  }
  const int n_modes = std::max(family_max_mode(problem.family), significant.empty() ? 0 : *significant.rbegin());

  if (!significant.empty()) {
    const ClosureReport check = closure(problem.family, std::max(problem.primitive_depth, 8), n_modes);
    const std::set<int> spanned(check.spanned_modes.begin(), check.spanned_modes.end());
    for (int k : significant) {
      if (!spanned.count(k)) {
        throw NotBracketGenerating("target displacement has mode " + std::to_string(k) +
                                   " outside the family's bracket closure");
      }
    }
  }

  const ClosureReport report = closure(problem.family, problem.primitive_depth, n_modes);
  return Planner(problem).run(report, n_modes);
}

}  // namespace chowkit
