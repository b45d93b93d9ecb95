// Copyright 2026 The galdesc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force enumeration of solutions of polynomial systems over finite
// fields, used by the point-count oracles.

#include <cstddef>
#include <functional>
#include <vector>

#include "galdesc/groebner.hpp"

namespace galdesc {

inline constexpr std::size_t kDefaultPointBudget = 1'000'000;

/// All elements of a finite field in index order. Throws NotFiniteBase.
template <class K>
std::vector<Elem<K>> field_elements(const FieldPtr<K>& f);

template <class K>
using CoeffMap = std::function<Elem<K>(const Elem<K>&)>;

/// Points of `over`^nvars where every equation vanishes. Coefficients are
/// carried into `over` by `map` (lift_coeff when empty). Throws
/// BudgetExceeded when |over|^nvars exceeds the budget.
template <class K>
std::vector<std::vector<Elem<K>>> enumerate_points(const std::vector<MultiPoly<K>>& eqs, std::size_t nvars,
                                                   const FieldPtr<K>& over,
                                                   std::size_t budget = kDefaultPointBudget,
                                                   const CoeffMap<K>& map = {});

template <class K>
std::size_t count_points(const std::vector<MultiPoly<K>>& eqs, std::size_t nvars, const FieldPtr<K>& over,
                         std::size_t budget = kDefaultPointBudget, const CoeffMap<K>& map = {}) {
  return enumerate_points(eqs, nvars, over, budget, map).size();
}

}  // namespace galdesc
