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

// Galois descent for affine algebras. A descent datum on A = Omega[x]/I is a
// family of semilinear ring automorphisms theta_s of A, each given by the
// images of the variables, with theta_s acting on coefficients through s.

#include <cstddef>
#include <string>
#include <vector>

#include "galdesc/galois.hpp"
#include "galdesc/groebner.hpp"
#include "galdesc/report.hpp"

namespace galdesc {

template <class K>
struct AffineAlgebra {
  RingPtr<K> ring;
  Ideal<K> relations;

  const FieldPtr<K>& field() const { return ring->field; }
  std::size_t nvars() const { return ring->nvars(); }
};

/// Checks that relations live in `ring`.
template <class K>
AffineAlgebra<K> make_algebra(RingPtr<K> ring, std::vector<MultiPoly<K>> relations);

template <class K>
struct SemilinearAlgebraAutomorphism {
  std::size_t sigma = 0;  // index into the group
  std::vector<MultiPoly<K>> images;
};

template <class K>
struct AffineDescentDatum {
  AffineAlgebra<K> algebra;
  GaloisGroup<K> group;
  /// One entry per group element, in group order.
  std::vector<SemilinearAlgebraAutomorphism<K>> maps;

  const std::vector<MultiPoly<K>>& images(std::size_t s) const { return maps[s].images; }
};

/// A k-algebra A0 = k[T]/J together with inverse isomorphisms between
/// Omega (x) A0 and A, both given on variables.
template <class K>
struct Model {
  AffineAlgebra<K> algebra0;
  /// Omega[T]: the ring of Omega (x) A0 before imposing J.
  RingPtr<K> split_ring;
  /// Image of each T in the ring of A.
  std::vector<MultiPoly<K>> splitting;
  /// Image of each x of A in split_ring.
  std::vector<MultiPoly<K>> inverse;
};

/// theta_s o theta_u on variables: the images of theta_u pushed through theta_s.
template <class K>
std::vector<MultiPoly<K>> compose_images(const Automorphism<K>& s, const std::vector<MultiPoly<K>>& outer,
                                         const std::vector<MultiPoly<K>>& inner);

/// Well-definedness, theta_id = id, theta_s o theta_u = theta_su and
/// theta_s o theta_{s^-1} = id, all modulo the relations.
/// Throws NotWellDefined(s, g), CocycleViolation(s, u, x), NotInvertible(s).
template <class K>
VerificationReport validate_datum(const AffineDescentDatum<K>& d);

/// Model of A^Gamma generated by t_ij = sum_s s(t^j) theta_s(x_i), presented
/// as k[T]/J with J reduced for grevlex. Verifies that the t_ij are fixed and
/// that x -> sum_j c_j T_ij inverts the splitting map.
template <class K>
Model<K> descend_algebra(const AffineDescentDatum<K>& d, std::size_t budget = kDefaultReductionBudget);

/// Omega (x) A0 with theta_s acting on coefficients only.
template <class K>
AffineDescentDatum<K> canonical_datum(const AffineAlgebra<K>& a0, const GaloisGroup<K>& group);

/// The tautological model of a canonical datum: A0 itself, splitting x -> x.
template <class K>
Model<K> canonical_model(const AffineAlgebra<K>& a0, const GaloisGroup<K>& group);

/// True iff the model's splitting is an isomorphism and theta_s agrees with
/// the transport of s (x) id through it, for every s and variable.
template <class K>
bool splits(const Model<K>& m, const AffineDescentDatum<K>& d, std::size_t budget = kDefaultReductionBudget);

/// Descends an ideal W of Omega (x) A0 (given in Omega[T]). Throws
/// NotStable(s, g). The result contains J and is a reduced grevlex basis.
template <class K>
Ideal<K> descend_ideal(const Model<K>& m, const GaloisGroup<K>& group, const Ideal<K>& w,
                       std::size_t budget = kDefaultReductionBudget);

/// Descends an Omega-algebra map alpha: B -> A (images of B's variables in the
/// ring of A) to A0-images of B0's variables. Throws NotEquivariant(s, y) and
/// TransportNotRational.
template <class K>
std::vector<MultiPoly<K>> descend_morphism(const AffineDescentDatum<K>& da, const Model<K>& ma,
                                           const AffineDescentDatum<K>& db, const Model<K>& mb,
                                           const std::vector<MultiPoly<K>>& alpha,
                                           std::size_t budget = kDefaultReductionBudget);

/// Conjugate data for V over a finite extension K0 = k[s]/(g) of k sitting in
/// Omega. roots[e] is the image of s under embedding e (roots[0] fixes the
/// model's embedding) and phi[a][b] gives the variable images of an
/// isomorphism Omega[x]/(aV) -> Omega[x]/(bV).
template <class K>
struct EmbeddingFamily {
  std::vector<Elem<K>> roots;
  std::vector<std::vector<std::vector<MultiPoly<K>>>> phi;
};

template <class K>
struct EmbeddingDescent {
  AffineDescentDatum<K> datum;
  Model<K> model;
};

/// Checks phi_{a,c} = phi_{b,c} o phi_{a,b} and phi_{wa,wb} = w(phi_{a,b}),
/// builds theta_w = phi_{w0,0} o w on the first conjugate and descends it.
/// Throws ConditionAViolated(a, b, c) or ConditionBViolated(a, b, w).
template <class K>
EmbeddingDescent<K> descend_from_embeddings(const AffineAlgebra<K>& v, const GaloisGroup<K>& group,
                                            const EmbeddingFamily<K>& family,
                                            std::size_t budget = kDefaultReductionBudget);

/// The algebra Omega[x]/(eV) for the embedding sending s to `root`.
template <class K>
AffineAlgebra<K> conjugate_algebra(const AffineAlgebra<K>& v, const FieldPtr<K>& omega, const Elem<K>& root);

/// Gamma acting on V(Omega) for finite Omega: (s * P)_j = s(theta_{s^-1}(x_j)(P)).
template <class K>
struct PointAction {
  std::vector<std::vector<Elem<K>>> points;
  /// perm[s][p] = index of s * points[p].
  std::vector<std::vector<std::size_t>> perm;

  std::vector<std::size_t> fixed_points() const;
};

/// Enumerates V(Omega), builds the permutations and checks the action law.
template <class K>
PointAction<K> derive_point_action(const AffineDescentDatum<K>& d, std::size_t budget = 1'000'000);

}  // namespace galdesc
