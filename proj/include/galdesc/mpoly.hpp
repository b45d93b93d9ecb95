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

// Sparse multivariate polynomials with coefficients in a Field<K> (either the
// base field k or an extension Omega). A ring is a field plus an ordered list
// of variable names; polynomials keep a pointer to their ring.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galdesc/field.hpp"
#include "galdesc/monomial.hpp"

namespace galdesc {

template <class K>
struct PolyRing {
  FieldPtr<K> field;
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return i;
    }
    return std::nullopt;
  }
  bool same_as(const PolyRing& o) const { return this == &o || (vars == o.vars && field->same_as(*o.field)); }
  /// "GF(9)[x, y]".
  std::string name() const;
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

/// Throws InvalidArgument on duplicate or malformed variable names.
template <class K>
RingPtr<K> make_ring(FieldPtr<K> field, std::vector<std::string> vars);

template <class K>
class MultiPoly {
 public:
  using Coeff = Elem<K>;
  using Terms = std::map<Monomial, Coeff>;

  explicit MultiPoly(RingPtr<K> ring) : ring_(std::move(ring)) {}
  static MultiPoly constant(RingPtr<K> ring, const Coeff& c);
  static MultiPoly from_int(RingPtr<K> ring, long n);
  static MultiPoly variable(RingPtr<K> ring, std::size_t i);
  static MultiPoly variable(RingPtr<K> ring, const std::string& name);
  static MultiPoly term(RingPtr<K> ring, Monomial m, const Coeff& c);

  const RingPtr<K>& ring() const { return ring_; }
  const FieldPtr<K>& field() const { return ring_->field; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coeff constant_term() const { return coeff(Monomial(ring_->nvars(), 0)); }
  Coeff coeff(const Monomial& m) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// True when every coefficient lies in the base field k.
  bool has_base_coefficients() const;
  /// True when no variable outside `allowed` occurs.
  bool uses_only(const std::vector<bool>& allowed) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Coeff& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r += b;
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r -= b;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.mul(b); }
  friend MultiPoly operator*(const Coeff& c, const MultiPoly& a) { return a.scaled(c); }
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  MultiPoly scaled(const Coeff& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
  }

 private:
  MultiPoly mul(const MultiPoly& b) const;
  void check_ring(const MultiPoly& b) const;

  RingPtr<K> ring_;
  Terms terms_;
};

/// Carries c into `target`: identity when the fields agree, otherwise c must
/// lie in k and is embedded. Throws ShapeMismatch.
template <class K>
Elem<K> lift_coeff(const Elem<K>& c, const FieldPtr<K>& target);

/// Replaces variable i by images[i] (all in one target ring), lifting
/// coefficients into the target field.
template <class K>
MultiPoly<K> substitute(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& images, const RingPtr<K>& target);

/// Same polynomial viewed in another ring; variable i goes to index[i].
template <class K>
MultiPoly<K> map_variables(const MultiPoly<K>& p, const RingPtr<K>& target, const std::vector<std::size_t>& index);

/// map_variables by name: every variable of p must exist in target.
template <class K>
MultiPoly<K> change_ring(const MultiPoly<K>& p, const RingPtr<K>& target);

template <class K>
MultiPoly<K> map_coefficients(const MultiPoly<K>& p, const std::function<Elem<K>(const Elem<K>&)>& fn);

/// Applies sigma to the coefficients, then substitutes variables by images.
template <class K, class Sigma>
MultiPoly<K> apply_semilinear(const Sigma& sigma, const std::vector<MultiPoly<K>>& images, const MultiPoly<K>& p) {
  const RingPtr<K> target = images.empty() ? p.ring() : images.front().ring();
  MultiPoly<K> twisted = map_coefficients<K>(p, [&](const Elem<K>& c) { return sigma(c); });
  return substitute(twisted, images, target);
}

/// p = sum_j t^j p_j with every p_j over k (ring `kring`, same variables).
template <class K>
std::vector<MultiPoly<K>> components(const MultiPoly<K>& p, const RingPtr<K>& kring);

/// Evaluates p at a point whose entries live in some field F; coefficients are
/// carried to F by `coeff_map`.
template <class K>
Elem<K> evaluate(const MultiPoly<K>& p, const std::vector<Elem<K>>& point,
                 const std::function<Elem<K>(const Elem<K>&)>& coeff_map);

/// Evaluation with coefficients lifted by lift_coeff into the point's field.
template <class K>
Elem<K> evaluate(const MultiPoly<K>& p, const std::vector<Elem<K>>& point);

/// Terms in descending grevlex order; non-base coefficients in parentheses.
template <class K>
std::string to_string(const MultiPoly<K>& p);

/// Coefficient text as it appears in front of a monomial.
template <class K>
std::string coeff_string(const Elem<K>& c);

extern template class MultiPoly<Rational>;
extern template class MultiPoly<Zp>;

}  // namespace galdesc
