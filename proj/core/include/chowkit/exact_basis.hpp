// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "chowkit/rational.hpp"

namespace chowkit {

/// Sparse rational vector keyed by column index; zero entries are not stored.
using SparseVector = std::map<std::size_t, Rational>;

/// Incremental row-echelon basis over Q.
///
/// Each inserted vector carries an integer id. Besides the echelon rows the
/// basis remembers how every row is written in terms of the inserted ids, so
/// `express` can return a certificate v = Σ cᵢ·(vector with id i).
class ExactBasis {
 public:
  /// Inserts v under `id`. Returns true iff v was independent of the
  /// current span (only then is it kept).
  bool insert(const SparseVector& v, std::size_t id);

  /// True iff v lies in the span.
  bool contains(const SparseVector& v) const;

  /// Coefficients over inserted ids, or nullopt if v is outside the span.
  std::optional<SparseVector> express(const SparseVector& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    SparseVector vec;    // pivot entry normalized to 1, all keys ≥ pivot
    SparseVector combo;  // vec = Σ combo[id]·inserted[id]
  };

  // Reduces v (and its combo) against the rows; returns the remainder.
  void reduce(SparseVector& v, SparseVector* combo) const;

  std::map<std::size_t, Row> rows_;  // keyed by pivot column
};

/// Rank of a dense list of rational vectors.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& vectors);

SparseVector to_sparse(const std::vector<Rational>& dense);

}  // namespace chowkit
