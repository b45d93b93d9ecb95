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

// Base scalars: arbitrary-precision rationals and residues modulo a prime.
// Generic code in this library is written against the small free-function
// interface below (is_zero, zero_like, one_like, inverse, to_string) plus the
// usual arithmetic operators.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "galdesc/error.hpp"

namespace galdesc {

using Rational = mpq_class;

/// The prime field or the rationals, identified by characteristic.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static BaseField prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return p_ != 0; }
  std::string name() const;

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  explicit BaseField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of Z/pZ. The modulus travels with the value so that generic code
/// can build zeros and ones from any element it already holds.
struct Zp {
  std::int64_t v = 0;
  std::int64_t p = 2;

  Zp() = default;
  Zp(std::int64_t value, std::int64_t modulus) : v(value % modulus), p(modulus) {
    if (v < 0) v += p;
  }

  friend Zp operator+(Zp a, Zp b) {
    std::int64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return raw(s, a.p);
  }
  friend Zp operator-(Zp a, Zp b) {
    std::int64_t s = a.v - b.v;
    if (s < 0) s += a.p;
    return raw(s, a.p);
  }
  friend Zp operator-(Zp a) { return raw(a.v == 0 ? 0 : a.p - a.v, a.p); }
  friend Zp operator*(Zp a, Zp b) { return raw((a.v * b.v) % a.p, a.p); }
  friend Zp operator/(Zp a, Zp b);
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v && a.p == b.p; }

  static Zp raw(std::int64_t value, std::int64_t modulus) {
    Zp z;
    z.v = value;
    z.p = modulus;
    return z;
  }
};

Zp inverse(Zp a);
inline Zp operator/(Zp a, Zp b) { return a * inverse(b); }
inline bool is_zero(Zp a) { return a.v == 0; }
inline bool is_one(Zp a) { return a.v == 1; }
inline Zp zero_like(Zp a) { return Zp::raw(0, a.p); }
inline Zp one_like(Zp a) { return Zp::raw(1, a.p); }
std::string to_string(Zp a);

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
Rational inverse(const Rational& a);
std::string to_string(const Rational& a);

/// Per-scalar glue between BaseField descriptors and element values.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool matches(const BaseField& b) { return !b.is_finite(); }
  static Rational from_int(const BaseField&, long n) { return Rational(n); }
  static Rational from_rational(const BaseField&, const Rational& q) { return q; }
  static BaseField field_of(const Rational&) { return BaseField::rationals(); }
  /// A representative that compares and hashes canonically.
  static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct ScalarTraits<Zp> {
  static bool matches(const BaseField& b) { return b.is_finite(); }
  static Zp from_int(const BaseField& b, long n) {
    return Zp(n, static_cast<std::int64_t>(b.characteristic()));
  }
  /// Throws DivisionByZero when the denominator vanishes mod p.
  static Zp from_rational(const BaseField& b, const Rational& q);
  static BaseField field_of(const Zp& a) { return BaseField::prime(static_cast<std::uint64_t>(a.p)); }
  static bool less(const Zp& a, const Zp& b) { return a.v < b.v; }
};

template <class K>
K scalar_from_int(const BaseField& b, long n) {
  return ScalarTraits<K>::from_int(b, n);
}

/// Small random scalar: uniform residue over F_p, integer in [-range, range] over Q.
template <class K, class Rng>
K random_scalar(const BaseField& b, Rng& rng, long range = 3) {
  if (b.is_finite()) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(b.characteristic()) - 1);
    return scalar_from_int<K>(b, d(rng));
  }
  std::uniform_int_distribution<long> d(-range, range);
  return scalar_from_int<K>(b, d(rng));
}

}  // namespace galdesc
