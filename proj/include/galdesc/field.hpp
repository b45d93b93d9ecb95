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

// Simple extensions Omega = k[t]/(f) of a base field k (QQ or F_p). The base
// field itself is represented as the degree-one case f = t, so every scalar
// that flows through the polynomial and descent layers is an Elem<K>.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "galdesc/scalar.hpp"
#include "galdesc/upoly.hpp"

namespace galdesc {

template <class K>
class Elem;
template <class K>
class Field;
template <class K>
using FieldPtr = std::shared_ptr<const Field<K>>;

/// How irreducibility of the modulus is known. Over F_p it is always checked;
/// over QQ the caller may assert it (no factoring engine), and built-in
/// families (cyclotomic) carry it by construction.
enum class Irreducibility { Verified, BuiltIn, Asserted, Unverified };

template <class K>
class Field : public std::enable_shared_from_this<Field<K>> {
 public:
  struct Token {};
  Field(Token, BaseField base, UPoly<K> modulus, Irreducibility irr, std::string name,
        FieldPtr<K> base_field);

  const BaseField& base() const { return base_; }
  const UPoly<K>& modulus() const { return modulus_; }
  std::size_t degree() const { return n_; }
  Irreducibility irreducibility() const { return irr_; }
  /// False only for a QQ modulus whose irreducibility was not asserted.
  bool known_field() const { return irr_ != Irreducibility::Unverified; }
  const std::string& name() const { return name_; }
  bool is_finite() const { return base_.is_finite(); }
  /// p^n for finite fields; throws NotFiniteBase otherwise.
  mpz_class order() const;

  /// The degree-one field k underlying this extension.
  FieldPtr<K> base_field() const;

  K base_zero() const { return zero_; }
  K base_one() const { return one_like(zero_); }
  Elem<K> zero() const;
  Elem<K> one() const;
  Elem<K> gen() const;
  Elem<K> from_int(long n) const;
  Elem<K> from_base(const K& c) const;
  Elem<K> from_coeffs(std::vector<K> c) const;
  /// The element sum c_j p^j -> sum c_j t^j, for enumerating finite fields.
  Elem<K> element_at(std::uint64_t index) const;

  /// Reduces a coefficient vector of length <= 2n-1 modulo f.
  std::vector<K> reduce(std::vector<K> c) const;

  bool same_as(const Field& other) const {
    return this == &other || (base_ == other.base_ && modulus_ == other.modulus_);
  }

 private:
  BaseField base_;
  UPoly<K> modulus_;
  std::size_t n_;
  Irreducibility irr_;
  std::string name_;
  FieldPtr<K> base_field_;
  K zero_;
  std::vector<std::vector<K>> xpow_;  // t^(n+i) mod f, i = 0..n-2
};

/// Element of a Field<K>, stored as its residue polynomial of degree < n.
template <class K>
class Elem {
 public:
  Elem() = default;
  Elem(FieldPtr<K> f, std::vector<K> c) : f_(std::move(f)), c_(std::move(c)) {}

  const FieldPtr<K>& field() const { return f_; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& coeff(std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in k (all coefficients of t^j, j>0, vanish).
  bool is_base() const;

  friend Elem operator+(const Elem& a, const Elem& b) {
    Elem r = a;
    r += b;
    return r;
  }
  friend Elem operator-(const Elem& a, const Elem& b) {
    Elem r = a;
    r -= b;
    return r;
  }
  friend Elem operator-(const Elem& a) {
    Elem r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Elem operator*(const Elem& a, const Elem& b) { return a.mul(b); }
  friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }
  Elem& operator+=(const Elem& b) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  Elem& operator-=(const Elem& b) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  Elem& operator*=(const Elem& b) { return *this = mul(b); }
  friend bool operator==(const Elem& a, const Elem& b) { return a.c_ == b.c_; }

  Elem scaled(const K& s) const {
    Elem r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Throws DivisionByZero for 0 and NotInvertible for a zero divisor of an
  /// unverified QQ modulus.
  Elem inverse() const;
  Elem pow(mpz_class e) const;
  /// Index sum c_j p^j; finite fields only.
  std::uint64_t index() const;

 private:
  Elem mul(const Elem& b) const;

  FieldPtr<K> f_;
  std::vector<K> c_;
};

template <class K>
bool is_zero(const Elem<K>& a) { return a.is_zero(); }
template <class K>
bool is_one(const Elem<K>& a) { return a.is_one(); }
template <class K>
Elem<K> zero_like(const Elem<K>& a) { return a.field()->zero(); }
template <class K>
Elem<K> one_like(const Elem<K>& a) { return a.field()->one(); }
template <class K>
Elem<K> inverse(const Elem<K>& a) { return a.inverse(); }
/// Residue polynomial in t; "0" for zero.
template <class K>
std::string to_string(const Elem<K>& a);

/// Builds k[t]/(modulus) after checking the invariants: monic, degree >= 1,
/// matching characteristic, squarefree, and (over F_p) irreducible.
template <class K>
FieldPtr<K> make_extension(const BaseField& base, const UPoly<K>& modulus,
                           bool irreducible_asserted = false, std::string name = "");

/// The base field as a degree-one extension.
template <class K>
FieldPtr<K> prime_field(const BaseField& base);

/// True iff f is irreducible over F_p (gcd tests against t^(p^i) - t).
bool is_irreducible_mod_p(const UPoly<Zp>& f);

/// Lexicographically least irreducible monic polynomial of degree n over F_p,
/// comparing coefficients from t^(n-1) down to t^0.
UPoly<Zp> default_modulus(std::uint64_t p, std::size_t n);

/// GF(p^n) with the default modulus.
FieldPtr<Zp> finite_field(std::uint64_t p, std::size_t n);

template <class K>
Elem<K> field_invert(const Elem<K>& a) {
  return a.inverse();
}

extern template class Field<Rational>;
extern template class Field<Zp>;
extern template class Elem<Rational>;
extern template class Elem<Zp>;

}  // namespace galdesc
