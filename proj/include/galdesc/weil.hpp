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

// Weil restriction along a finite separable extension K = k[x]/(f), by
// expanding X_i = sum_j x^j X_i_j over the power basis of K.

#include <cstddef>
#include <vector>

#include "galdesc/descent.hpp"
#include "galdesc/points.hpp"
#include "galdesc/report.hpp"

namespace galdesc {

template <class K>
struct SeparableExtensionData {
  FieldPtr<K> ext;    // K over k
  FieldPtr<K> omega;  // a Galois closure holding every embedding
  std::vector<Elem<K>> embeddings;  // images of the generator of K in omega

  std::size_t degree() const { return ext->degree(); }
};

/// Checks separability (NotSeparable), that each embedding is a root of K's
/// modulus (NotARoot), and that there are d distinct ones.
template <class K>
SeparableExtensionData<K> make_separable_data(FieldPtr<K> ext, FieldPtr<K> omega, std::vector<Elem<K>> embeddings);

/// All roots of K's modulus in a finite omega, by enumeration.
template <class K>
std::vector<Elem<K>> find_embeddings(const FieldPtr<K>& ext, const FieldPtr<K>& omega);

template <class K>
struct RestrictionResult {
  AffineAlgebra<K> restricted;  // over k, variables <X>_<j>
  RingPtr<K> expanded_ring;     // K[<X>_<j>]
  /// X_i -> sum_j x^j X_i_j, in expanded_ring.
  std::vector<MultiPoly<K>> substitution;
};

template <class K>
RestrictionResult<K> weil_restrict(const AffineAlgebra<K>& v, const SeparableExtensionData<K>& data);

/// A test algebra: a finite product of extensions of k (k itself included).
/// For infinite k, `samples[a]` lists candidate points over factor a, each a
/// flat vector of (#X * d) coordinates.
template <class K>
struct TestAlgebra {
  std::vector<FieldPtr<K>> factors;
  std::vector<std::vector<std::vector<Elem<K>>>> samples;
};

/// R(A) -> V(K (x) A), (p_ij) |-> (sum_j x^j p_ij), checked factor by factor:
/// exhaustively over finite factors, on samples otherwise. Throws
/// MismatchFound(witness).
template <class K>
VerificationReport verify_universal_points(const AffineAlgebra<K>& v, const RestrictionResult<K>& r,
                                           const TestAlgebra<K>& a, std::size_t budget = kDefaultPointBudget);

template <class K>
struct EtaleSplitting {
  /// Each idempotent as an element of K (x) Omega = Omega[x]/(f), lowest degree first.
  std::vector<std::vector<Elem<K>>> idempotents;
  VerificationReport report;
};

/// Lagrange idempotents prod_{u != s} (x - u(x)) / (s(x) - u(x)), verified
/// through the structure constants of K (x) Omega over k.
template <class K>
EtaleSplitting<K> etale_splitting(const SeparableExtensionData<K>& data);

/// #R(Omega) = prod over embeddings of #(eV)(Omega). Throws CountMismatch.
template <class K>
VerificationReport conjugate_product_check(const AffineAlgebra<K>& v, const RestrictionResult<K>& r,
                                           const SeparableExtensionData<K>& data,
                                           std::size_t budget = kDefaultPointBudget);

/// N_{K/k}(sum_j x^j Y_j) as a polynomial over k in the given variables
/// (indices into `ring`).
template <class K>
MultiPoly<K> norm_polynomial(const SeparableExtensionData<K>& data, const RingPtr<K>& ring,
                             const std::vector<std::size_t>& vars);

}  // namespace galdesc
