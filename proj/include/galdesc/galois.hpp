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

// Finite automorphism groups of simple extensions, stored as generator
// images with composition table, plus the two structural checks used by the
// descent layers: the fixed field and the twisted group algebra map.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galdesc/field.hpp"
#include "galdesc/linalg.hpp"

namespace galdesc {

/// A k-automorphism of Omega, determined by the image of the generator t.
template <class K>
class Automorphism {
 public:
  Automorphism(Elem<K> image, std::string name);

  const Elem<K>& image() const { return image_; }
  const std::string& name() const { return name_; }
  /// k-matrix on the power basis; column c holds image^c.
  const Matrix<K>& matrix() const { return matrix_; }
  bool is_identity() const { return image_ == image_.field()->gen(); }

  Elem<K> operator()(const Elem<K>& a) const;
  std::vector<Elem<K>> operator()(const std::vector<Elem<K>>& v) const;
  /// Entrywise application.
  Matrix<Elem<K>> operator()(const Matrix<Elem<K>>& m) const;

 private:
  Elem<K> image_;
  std::string name_;
  Matrix<K> matrix_;
};

/// s o t, i.e. t is applied first.
template <class K>
Automorphism<K> compose(const Automorphism<K>& s, const Automorphism<K>& t, std::string name = "");

/// Checks f(image) = 0 and invertibility of the induced k-linear map.
template <class K>
Automorphism<K> verify_automorphism(const FieldPtr<K>& field, const Elem<K>& image, std::string name = "");

template <class K>
class GaloisGroup {
 public:
  static constexpr std::size_t kIdentity = 0;

  /// Verifies every element and that the list is closed under composition
  /// (never completes a partial list). The identity is moved to index 0.
  static GaloisGroup from_elements(const FieldPtr<K>& field, std::vector<Automorphism<K>> elems);

  const FieldPtr<K>& field() const { return field_; }
  std::size_t order() const { return elems_.size(); }
  /// |Gamma| = [Omega : k].
  bool is_full() const { return elems_.size() == field_->degree(); }
  const Automorphism<K>& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Automorphism<K>>& elements() const { return elems_; }
  /// Index of elems[i] o elems[j].
  std::size_t compose(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::optional<std::size_t> find_image(const Elem<K>& image) const;
  /// Greedy generating set in element order (a single Frobenius for cyclic
  /// finite-field groups).
  std::vector<std::size_t> generators() const;
  /// Subgroup generated by the given elements (closure computed from the table).
  GaloisGroup subgroup(const std::vector<std::size_t>& gens) const;
  /// Exhaustive associativity / identity / inverse check of the table.
  bool satisfies_group_axioms() const;

 private:
  FieldPtr<K> field_;
  std::vector<Automorphism<K>> elems_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

/// Gal(F_{p^n}/F_p) = {t -> t^(p^i)}, named id, frob, frob^2, ...
GaloisGroup<Zp> frobenius_group(const FieldPtr<Zp>& ext);

/// Phi_m from x^m - 1 = prod_{d | m} Phi_d.
UPoly<Rational> cyclotomic_polynomial(int m);

/// QQ[t]/(Phi_m) and its automorphisms s_a : t -> t^a, gcd(a, m) = 1.
std::pair<FieldPtr<Rational>, GaloisGroup<Rational>> cyclotomic_group(int m);

/// k-basis of the fixed field Omega^Gamma (elements of Omega).
template <class K>
std::vector<Elem<K>> check_fixed_field(const GaloisGroup<K>& group);

template <class K>
struct TwistedGroupAlgebraMap {
  Matrix<K> matrix;  // n^2 x (n |Gamma|), column sigma*n + a is t^a sigma
  std::size_t rank;
};

/// The k-linear map Omega[Gamma] -> End_k(Omega), sum a_s s |-> (c |-> sum a_s s(c)).
/// Throws RankDeficient unless it is an isomorphism.
template <class K>
TwistedGroupAlgebraMap<K> dedekind_check(const GaloisGroup<K>& group);

extern template class Automorphism<Rational>;
extern template class Automorphism<Zp>;
extern template class GaloisGroup<Rational>;
extern template class GaloisGroup<Zp>;

}  // namespace galdesc
