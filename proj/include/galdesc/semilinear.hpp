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

// Vector-space descent along a finite Galois extension Omega/k. A semilinear
// action on Omega^n is stored through its Omega-linear parts c_s, acting by
// v |-> c_s * s(v) with s applied entrywise.

#include <optional>
#include <random>
#include <vector>

#include "galdesc/galois.hpp"
#include "galdesc/report.hpp"

namespace galdesc {

template <class K>
using OmegaVector = std::vector<Elem<K>>;

template <class K>
class SemilinearModule {
 public:
  SemilinearModule(GaloisGroup<K> group, std::size_t dim, std::vector<Matrix<Elem<K>>> cocycle);

  const GaloisGroup<K>& group() const { return group_; }
  const FieldPtr<K>& field() const { return group_.field(); }
  std::size_t dim() const { return dim_; }
  const Matrix<Elem<K>>& cocycle(std::size_t s) const { return cocycle_[s]; }

  /// c_s * s(v).
  OmegaVector<K> act(std::size_t s, const OmegaVector<K>& v) const;
  /// The k-linear map v |-> c_s s(v) on k-coordinates of Omega^n.
  Matrix<K> action_matrix(std::size_t s) const;

 private:
  GaloisGroup<K> group_;
  std::size_t dim_;
  std::vector<Matrix<Elem<K>>> cocycle_;
};

/// A finite-dimensional k-space; when it arises inside Omega^n the embedding
/// lists a k-basis as Omega-vectors.
template <class K>
struct KSpace {
  BaseField field;
  std::size_t dim = 0;
  std::optional<std::vector<OmegaVector<K>>> embedding;
};

/// Checks c_id = I, invertibility of each c_s, and c_{st} = c_s s(c_t).
/// Throws IdentityNotTrivial, SingularMatrix(s) or CocycleViolation(s, t).
template <class K>
VerificationReport validate_action(const SemilinearModule<K>& m);

/// k-basis of {v : c_s s(v) = v for all s}, computed as a joint kernel over k.
/// Throws InternalContradiction when the dimension is not dim_Omega.
template <class K>
KSpace<K> fixed_subspace(const SemilinearModule<K>& m);

/// Omega (x) W with the canonical action (every c_s = I).
template <class K>
SemilinearModule<K> extend_scalars(const KSpace<K>& w, const GaloisGroup<K>& group);

/// Matrix whose columns are the fixed basis; invertible for valid actions.
template <class K>
Matrix<Elem<K>> counit_check(const SemilinearModule<K>& m);

/// Descends an Omega-subspace W (spanning vectors) of a module: checks
/// stability under each generator of Gamma, returns W^Gamma and verifies
/// Omega * W^Gamma = W. Throws NotStable(s, witness).
template <class K>
KSpace<K> descend_subspace(const SemilinearModule<K>& m, const std::vector<OmegaVector<K>>& w);

/// Same, for W inside Omega (x) V0 with the canonical action.
template <class K>
KSpace<K> descend_subspace(const KSpace<K>& v0, const GaloisGroup<K>& group, const std::vector<OmegaVector<K>>& w);

/// The coboundary c_s = b^-1 s(b) of an invertible b.
template <class K>
SemilinearModule<K> coboundary_module(const GaloisGroup<K>& group, const Matrix<Elem<K>>& b);

/// Random element of Omega with small coefficients.
template <class K>
Elem<K> random_element(const FieldPtr<K>& f, std::mt19937_64& rng, long range = 3) {
  std::vector<K> c;
  for (std::size_t i = 0; i < f->degree(); ++i) c.push_back(random_scalar<K>(f->base(), rng, range));
  return f->from_coeffs(std::move(c));
}

/// Random invertible n x n matrix over Omega (rejection sampling).
template <class K>
Matrix<Elem<K>> random_invertible(const FieldPtr<K>& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix<Elem<K>> b(n, n, f->zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = random_element(f, rng);
    if (is_invertible(b)) return b;
  }
}

extern template class SemilinearModule<Rational>;
extern template class SemilinearModule<Zp>;

}  // namespace galdesc
