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

// Ideals, Buchberger's algorithm and the operations built on it: normal
// forms, membership, equality and elimination.

#include <cstddef>
#include <string>
#include <vector>

#include "galdesc/mpoly.hpp"

namespace galdesc {

inline constexpr std::size_t kDefaultReductionBudget = 1'000'000;

template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<MultiPoly<K>> gens;
};

/// Checks that all generators live in `ring`.
template <class K>
Ideal<K> make_ideal(RingPtr<K> ring, std::vector<MultiPoly<K>> gens);

template <class K>
struct GroebnerBasis {
  RingPtr<K> ring;
  MonomialOrder order;
  /// Reduced and monic, sorted by (total degree, lex) of leading monomials.
  std::vector<MultiPoly<K>> polys;

  bool is_unit() const { return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero(); }
  bool is_zero_ideal() const { return polys.empty(); }
};

/// Reduced Groebner basis. Each reduction step counts against the budget;
/// exceeding it throws BudgetExceeded.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& order,
                            std::size_t budget = kDefaultReductionBudget);

template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const GroebnerBasis<K>& gb,
                         std::size_t budget = kDefaultReductionBudget);

template <class K>
bool contains(const GroebnerBasis<K>& gb, const MultiPoly<K>& p) {
  return normal_form(p, gb).is_zero();
}

/// Leading monomial of a nonzero polynomial.
template <class K>
Monomial leading_monomial(const MultiPoly<K>& p, const MonomialOrder& order);

/// Each generator of either ideal reduces to zero modulo a grevlex basis of
/// the other. Throws ShapeMismatch for different rings.
template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b, std::size_t budget = kDefaultReductionBudget);

/// I intersected with k[keep] (or Omega[keep]), presented in the ring whose
/// variables are `keep` in the given order.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::string>& keep,
                   std::size_t budget = kDefaultReductionBudget);

template <class K>
std::string to_string(const Ideal<K>& ideal);

}  // namespace galdesc
