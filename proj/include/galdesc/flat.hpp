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

// Faithfully flat descent for finite-dimensional commutative algebras over
// the base field. Tensor powers are concrete coordinate spaces: B^(x)r has
// basis tuples (i_0, ..., i_{r-1}) in row-major order.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "galdesc/semilinear.hpp"
#include "galdesc/matrix.hpp"
#include "galdesc/report.hpp"

namespace galdesc {

template <class K>
struct FiniteAlgebra {
  BaseField base;
  std::size_t dim = 0;
  /// products[i][j] = coordinates of b_i b_j.
  std::vector<std::vector<std::vector<K>>> products;
  std::vector<K> unit;
  std::string name;

  K zero() const { return scalar_from_int<K>(base, 0); }
  K one() const { return scalar_from_int<K>(base, 1); }
  std::vector<K> basis(std::size_t i) const;
  std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b) const;
  /// Multiplication by a, acting on coordinate columns.
  Matrix<K> left_matrix(const std::vector<K>& a) const;
};

/// Checks commutativity, associativity and the unit law on basis elements.
template <class K>
FiniteAlgebra<K> make_finite_algebra(BaseField base, std::vector<std::vector<std::vector<K>>> products,
                                     std::vector<K> unit, std::string name = "");

template <class K>
FiniteAlgebra<K> base_algebra(const BaseField& base);
/// k^n with componentwise product.
template <class K>
FiniteAlgebra<K> split_algebra(const BaseField& base, std::size_t n);
/// k[t]/(f) on the power basis.
template <class K>
FiniteAlgebra<K> field_algebra(const FieldPtr<K>& f);
template <class K>
FiniteAlgebra<K> zero_algebra(const BaseField& base);

template <class K>
struct AlgebraMap {
  FiniteAlgebra<K> source;
  FiniteAlgebra<K> target;
  Matrix<K> matrix;  // target.dim x source.dim
};

/// NotWellDefined unless unital and multiplicative on basis pairs.
template <class K>
AlgebraMap<K> make_algebra_map(FiniteAlgebra<K> source, FiniteAlgebra<K> target, Matrix<K> matrix);
/// k -> B.
template <class K>
AlgebraMap<K> structure_map(const FiniteAlgebra<K>& b);

/// Basis elements are coordinate vectors in the target.
template <class K>
VerificationReport check_faithfully_flat(const AlgebraMap<K>& f,
                                         const std::optional<std::vector<std::vector<K>>>& basis = std::nullopt);

inline constexpr std::size_t kMaxTensorDim = 4096;

template <class K>
struct AmitsurComplex {
  FiniteAlgebra<K> algebra;
  Matrix<K> augmentation;  // k -> B
  /// d[j] : B^(x)(j+1) -> B^(x)(j+2), the alternating sum of face maps.
  std::vector<Matrix<K>> d;
};

/// Faces of the cosimplicial algebra: e_i inserts 1 at position i of B^(x)r.
template <class K>
Matrix<K> face_map(const FiniteAlgebra<K>& b, std::size_t r, std::size_t i);

template <class K>
AmitsurComplex<K> amitsur_complex(const AlgebraMap<K>& f, std::size_t r_max = 3);

struct ExactnessDegree {
  std::size_t degree;
  std::size_t kernel;
  std::size_t image;
};

struct ExactnessReport {
  std::vector<ExactnessDegree> degrees;
  VerificationReport report;
};

/// With module_dim = n the complex is tensored with k^n first.
template <class K>
ExactnessReport check_exactness(const AmitsurComplex<K>& c, std::optional<std::size_t> module_dim = std::nullopt);

/// h_j(b_0 (x) rest) = g(b_0) rest; checks h d + d h = 1 in every degree.
template <class K>
VerificationReport verify_contracting_homotopy(const AmitsurComplex<K>& c, const AlgebraMap<K>& section);

/// M' = B^rank. phi : M' (x) B -> B (x) M'. Both sides use coordinates
/// (a, slot1, slot2) where a is the B-basis vector of M' and each slot is a
/// B-coordinate; in M' (x) B slot1 belongs to M', in B (x) M' slot2 does.
template <class K>
struct ModuleDatum {
  FiniteAlgebra<K> algebra;
  std::size_t rank = 0;
  Matrix<K> phi;
};

/// The flip (b m) (x) b' |-> b (x) (b' m), which is the identity in these coordinates.
template <class K>
ModuleDatum<K> canonical_module_datum(const FiniteAlgebra<K>& b, std::size_t rank);

/// k-matrix on M' of the B-linear map with the given rank x rank entries in B.
template <class K>
Matrix<K> b_linear_matrix(const FiniteAlgebra<K>& b, const std::vector<std::vector<std::vector<K>>>& entries);

/// (id (x) g) phi (g^-1 (x) id) for a B-linear automorphism g of M'.
template <class K>
ModuleDatum<K> twist_datum(const ModuleDatum<K>& d, const Matrix<K>& g);

template <class K>
ModuleDatum<K> random_module_datum(const FiniteAlgebra<K>& b, std::size_t rank, std::mt19937_64& rng);

/// NotBilinearCompatible, NotInvertible, CocycleFailed.
template <class K>
VerificationReport check_cocycle(const ModuleDatum<K>& d, const AlgebraMap<K>& f);

template <class K>
struct DescendedModule {
  /// Columns span M inside M' (k-coordinates (a, slot)).
  Matrix<K> basis;
  VerificationReport report;
  std::size_t dim() const { return basis.cols(); }
};

template <class K>
DescendedModule<K> reconstruct_module(const ModuleDatum<K>& d, const AlgebraMap<K>& f);

/// Flat datum of a semilinear module over a full Galois group, through a
/// trace-dual basis; does not use the fixed subspace.
template <class K>
ModuleDatum<K> datum_from_semilinear(const SemilinearModule<K>& m);

}  // namespace galdesc
