// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "chowkit/exact_basis.hpp"

#include <vector>

namespace chowkit {

namespace {

// a -= factor * b, dropping entries that cancel.
void axpy(SparseVector& a, const Rational& factor, const SparseVector& b) {
  for (const auto& [k, v] : b) {
    auto [it, inserted] = a.try_emplace(k, -factor * v);
    if (!inserted) {
      it->second -= factor * v;
      if (it->second == 0) a.erase(it);
    }
  }
}

}  // namespace

void ExactBasis::reduce(SparseVector& v, SparseVector* combo) const {
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t key = it->first;
    auto row = rows_.find(key);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    axpy(v, factor, row->second.vec);
    if (combo) axpy(*combo, factor, row->second.combo);
    // Row entries all sit at keys ≥ pivot, so everything below `key` is final.
    it = v.lower_bound(key);
  }
}

bool ExactBasis::insert(const SparseVector& v, std::size_t id) {
  SparseVector rem = v;
  SparseVector combo{{id, Rational(1)}};
  reduce(rem, &combo);
  if (rem.empty()) return false;

  const std::size_t pivot = rem.begin()->first;
  const Rational scale = 1 / rem.begin()->second;
  for (auto& [k, c] : rem) c *= scale;
  for (auto& [k, c] : combo) c *= scale;
  rows_.emplace(pivot, Row{std::move(rem), std::move(combo)});
  return true;
}

bool ExactBasis::contains(const SparseVector& v) const {
  SparseVector rem = v;
  reduce(rem, nullptr);
  return rem.empty();
}

std::optional<SparseVector> ExactBasis::express(const SparseVector& v) const {
  SparseVector rem = v;
  SparseVector combo;
  reduce(rem, &combo);
  if (!rem.empty()) return std::nullopt;
  // reduce accumulated −(coefficients); flip to get v = Σ c·inserted.
  for (auto& [k, c] : combo) c = -c;
  return combo;
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.emplace(i, dense[i]);
  }
  return v;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& vectors) {
  ExactBasis basis;
  std::size_t id = 0;
  for (const auto& v : vectors) basis.insert(to_sparse(v), id++);
  return basis.rank();
}

}  // namespace chowkit
