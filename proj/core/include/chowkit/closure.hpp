// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chowkit/exact_basis.hpp"
#include "chowkit/poly_field.hpp"
#include "chowkit/trig_poly.hpp"

namespace chowkit {

template <class Field>
struct LabeledField {
  std::string label;
  Field field;
};

/// Ordered, labeled family of vector fields. Labels must be unique and the
/// family nonempty; `validate` enforces both.
template <class Field>
struct FieldFamily {
  std::vector<LabeledField<Field>> members;

  void add(std::string label, Field field) { members.push_back({std::move(label), std::move(field)}); }
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }

  /// Members sorted by label; the canonical iteration order everywhere.
  std::vector<LabeledField<Field>> in_label_order() const;
  void validate() const;
};

using CircleFamily = FieldFamily<TrigPoly>;
using EuclideanFamily = FieldFamily<PolyField>;

/// The four-field generating family {cos θ, sin θ, cos 2θ, sin 2θ}·∂θ,
/// labeled cos1, sin1, cos2, sin2.
CircleFamily standard_circle_family();

/// One element of an iterated-bracket closure. Seeds have height 0 and one
/// letter; [a, b] has height max(hₐ, h_b)+1 and letters ℓₐ+ℓ_b.
template <class Field>
struct GeneratedField {
  std::string label;
  Field field;
  int height = 0;
  int letters = 1;
  std::optional<std::pair<std::size_t, std::size_t>> parents;  // indices into `generated`
};

struct ClosureReport {
  std::vector<GeneratedField<TrigPoly>> generated;  // independent, discovery order
  int max_depth = 0;
  int max_mode_cap = 0;
  int depth_used = 0;        // rounds executed
  bool fixed_point = false;  // last round added no independent field
  std::size_t rank = 0;
  std::size_t discarded_over_cap = 0;
  std::vector<int> spanned_modes;  // modes k ≤ cap whose basis fields all lie in the span
  bool spanning = false;           // all modes 0..cap spanned
};

/// Iterated Lie-bracket closure of a circle family on the truncation to modes
/// ≤ max_mode_cap.
///
/// Each round brackets every not-yet-bracketed pair of kept fields (seeds
/// included) in discovery order. Brackets whose effective mode exceeds the
/// cap are discarded, not truncated. Survivors are kept iff exactly
/// independent of everything kept so far. Stops after a round that adds
/// nothing (a fixed point) or after max_depth rounds.
///
/// Throws EmptyFamily, DomainError (duplicate labels, max_depth < 1, cap below
/// a seed's mode).
ClosureReport closure(const CircleFamily& family, int max_depth, int max_mode_cap);

/// True iff the closure's span contains every basis field of modes 0..n.
/// Throws DomainError if n exceeds the report's cap.
bool spanning_test(const ClosureReport& report, int n);

/// Writes fields as exact combinations of a report's generated fields.
class ClosureCertificate {
 public:
  explicit ClosureCertificate(const ClosureReport& report);
  /// Coefficients over `generated` indices, or nullopt if v is not spanned.
  std::optional<std::vector<std::pair<std::size_t, Rational>>> express(const TrigPoly& v) const;

 private:
  ExactBasis basis_;
  int cap_;
};

struct EuclideanClosure {
  std::vector<GeneratedField<PolyField>> generated;
  int depth_used = 0;
  bool fixed_point = false;
};

/// Symbolic closure of polynomial fields (no mode cap; independence is over
/// the full coefficient vectors). Throws DimensionMismatch for mixed
/// dimensions.
EuclideanClosure euclidean_closure(const EuclideanFamily& family, int max_depth);

/// Rank of {V(x) : V in the depth-limited closure}; at most n.
std::size_t lie_rank_at_point(const EuclideanFamily& family, std::span<const Rational> x, int max_depth);
/// Convenience overload; doubles convert exactly to rationals.
std::size_t lie_rank_at_point(const EuclideanFamily& family, std::span<const double> x, int max_depth);

}  // namespace chowkit
