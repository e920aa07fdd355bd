// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/closure.hpp"

#include <algorithm>
#include <set>

#include "chowkit/errors.hpp"

namespace chowkit {

template <class Field>
std::vector<LabeledField<Field>> FieldFamily<Field>::in_label_order() const {
  auto sorted = members;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.label < b.label; });
  return sorted;
}

template <class Field>
void FieldFamily<Field>::validate() const {
  if (members.empty()) throw EmptyFamily();
  std::set<std::string> seen;
  for (const auto& m : members) {
    if (!seen.insert(m.label).second) throw DomainError("duplicate field label '" + m.label + "'");
  }
}

template struct FieldFamily<TrigPoly>;
template struct FieldFamily<PolyField>;

CircleFamily standard_circle_family() {
  CircleFamily f;
  f.add("cos1", TrigPoly::cos_mode(1));
  f.add("sin1", TrigPoly::sin_mode(1));
  f.add("cos2", TrigPoly::cos_mode(2));
  f.add("sin2", TrigPoly::sin_mode(2));
  return f;
}

namespace {

SparseVector trig_key_vector(const TrigPoly& v) {
  return to_sparse(v.coefficients(v.max_mode()));
}

// Maps (component, monomial) pairs of polynomial fields to column indices in
// first-seen order.
class MonomialIndexer {
 public:
  SparseVector vectorize(const PolyField& f) {
    SparseVector out;
    for (std::size_t i = 0; i < f.components().size(); ++i) {
      for (const auto& [e, c] : f.components()[i].terms()) {
        auto [it, inserted] = index_.try_emplace({i, e}, index_.size());
        out.emplace(it->second, c);
      }
    }
    return out;
  }

 private:
  std::map<std::pair<std::size_t, Exponents>, std::size_t> index_;
};

// Shared round structure for both field kinds. `accept` decides whether a
// nonzero bracket is admissible (mode cap); `vectorize` gives its exact
// coefficient vector.
template <class Field, class Vectorize, class Accept>
void run_rounds(std::vector<GeneratedField<Field>>& generated, ExactBasis& basis, int max_depth,
                Vectorize&& vectorize, Accept&& accept, int& depth_used, bool& fixed_point) {
  std::size_t bracketed_upto = 0;  // pairs among [0, bracketed_upto) are done
  depth_used = 0;
  fixed_point = false;
  for (int round = 1; round <= max_depth; ++round) {
    depth_used = round;
    const std::size_t size_at_start = generated.size();
    for (std::size_t j = std::max<std::size_t>(1, bracketed_upto); j < size_at_start; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        Field b = bracket(generated[i].field, generated[j].field);
        if (b.is_zero() || !accept(b)) continue;
        if (!basis.insert(vectorize(b), generated.size())) continue;
        GeneratedField<Field> g;
        g.label = "[" + generated[i].label + "," + generated[j].label + "]";
        g.field = std::move(b);
        g.height = std::max(generated[i].height, generated[j].height) + 1;
        g.letters = generated[i].letters + generated[j].letters;
        g.parents = std::make_pair(i, j);
        generated.push_back(std::move(g));
      }
    }
    bracketed_upto = size_at_start;
    if (generated.size() == size_at_start) {
      fixed_point = true;
      break;
    }
  }
}

}  // namespace

ClosureReport closure(const CircleFamily& family, int max_depth, int max_mode_cap) {
  family.validate();
  if (max_depth < 1) throw DomainError("closure needs max_depth >= 1");
  for (const auto& m : family.members) {
    if (m.field.effective_mode() > max_mode_cap) {
      throw DomainError("mode cap " + std::to_string(max_mode_cap) + " is below the mode of seed '" +
                        m.label + "'");
    }
  }

  ClosureReport report;
  report.max_depth = max_depth;
  report.max_mode_cap = max_mode_cap;

  ExactBasis basis;
  for (const auto& m : family.in_label_order()) {
    TrigPoly f = m.field.trimmed();
    if (f.is_zero()) continue;
    if (!basis.insert(trig_key_vector(f), report.generated.size())) continue;
    report.generated.push_back({m.label, std::move(f), 0, 1, std::nullopt});
  }

  std::size_t discarded = 0;
  run_rounds(
      report.generated, basis, max_depth, trig_key_vector,
      [&](const TrigPoly& b) {
        if (b.effective_mode() <= max_mode_cap) return true;
        ++discarded;
        return false;
      },
      report.depth_used, report.fixed_point);

  report.discarded_over_cap = discarded;
  report.rank = basis.rank();
  for (int k = 0; k <= max_mode_cap; ++k) {
    bool spanned = k == 0 ? basis.contains(trig_key_vector(TrigPoly::constant()))
                          : basis.contains(trig_key_vector(TrigPoly::cos_mode(k))) &&
                                basis.contains(trig_key_vector(TrigPoly::sin_mode(k)));
    if (spanned) report.spanned_modes.push_back(k);
  }
  report.spanning = static_cast<int>(report.spanned_modes.size()) == max_mode_cap + 1;
  return report;
}

bool spanning_test(const ClosureReport& report, int n) {
  if (n > report.max_mode_cap) {
    throw DomainError("spanning_test: N = " + std::to_string(n) + " exceeds the closure cap " +
                      std::to_string(report.max_mode_cap));
  }
  if (n < 0) return true;
  // Rank decision: the span must contain all 2n+1 basis fields of modes ≤ n.
  ExactBasis basis;
  for (std::size_t i = 0; i < report.generated.size(); ++i) {
    basis.insert(trig_key_vector(report.generated[i].field), i);
  }
  for (int idx = 0; idx <= 2 * n; ++idx) {
    if (!basis.contains(trig_key_vector(TrigPoly::basis(idx)))) return false;
  }
  return true;
}

ClosureCertificate::ClosureCertificate(const ClosureReport& report) : cap_(report.max_mode_cap) {
  for (std::size_t i = 0; i < report.generated.size(); ++i) {
    basis_.insert(trig_key_vector(report.generated[i].field), i);
  }
}

std::optional<std::vector<std::pair<std::size_t, Rational>>> ClosureCertificate::express(
    const TrigPoly& v) const {
  if (v.effective_mode() > cap_) return std::nullopt;
  auto combo = basis_.express(trig_key_vector(v.trimmed()));
  if (!combo) return std::nullopt;
  return std::vector<std::pair<std::size_t, Rational>>(combo->begin(), combo->end());
}

EuclideanClosure euclidean_closure(const EuclideanFamily& family, int max_depth) {
  family.validate();
  if (max_depth < 1) throw DomainError("closure needs max_depth >= 1");
  const int n = family.members.front().field.dim();
  for (const auto& m : family.members) {
    if (m.field.dim() != n) throw DimensionMismatch("family mixes fields on R^" + std::to_string(n) +
                                                    " and R^" + std::to_string(m.field.dim()));
  }

  EuclideanClosure out;
  MonomialIndexer indexer;
  auto vectorize = [&](const PolyField& f) { return indexer.vectorize(f); };
  ExactBasis basis;
  for (const auto& m : family.in_label_order()) {
    if (m.field.is_zero()) continue;
    if (!basis.insert(vectorize(m.field), out.generated.size())) continue;
    out.generated.push_back({m.label, m.field, 0, 1, std::nullopt});
  }
  run_rounds(
      out.generated, basis, max_depth, vectorize, [](const PolyField&) { return true; }, out.depth_used,
      out.fixed_point);
  return out;
}

std::size_t lie_rank_at_point(const EuclideanFamily& family, std::span<const Rational> x, int max_depth) {
  family.validate();
  const int n = family.members.front().field.dim();
  if (static_cast<int>(x.size()) != n) {
    throw DimensionMismatch("point has dimension " + std::to_string(x.size()) + ", fields live on R^" +
                            std::to_string(n));
  }
  const EuclideanClosure cl = euclidean_closure(family, max_depth);
  std::vector<std::vector<Rational>> values;
  values.reserve(cl.generated.size());
  for (const auto& g : cl.generated) values.push_back(g.field.evaluate(x));
  return exact_rank(values);
}

std::size_t lie_rank_at_point(const EuclideanFamily& family, std::span<const double> x, int max_depth) {
  std::vector<Rational> exact;
  exact.reserve(x.size());
  for (double xi : x) exact.push_back(rational_from_double(xi));
  return lie_rank_at_point(family, std::span<const Rational>(exact), max_depth);
}

}  // namespace chowkit
