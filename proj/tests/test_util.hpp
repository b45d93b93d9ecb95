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

// Small builders shared by the unit tests.

#include <initializer_list>
#include <vector>

#include "galdesc/error.hpp"
#include "galdesc/field.hpp"
#include "galdesc/galois.hpp"

namespace galdesc::testing {

inline UPoly<Zp> zpoly(std::uint64_t p, std::initializer_list<long> low_first) {
  const BaseField b = BaseField::prime(p);
  std::vector<Zp> c;
  for (long x : low_first) c.push_back(scalar_from_int<Zp>(b, x));
  return UPoly<Zp>(c, scalar_from_int<Zp>(b, 0));
}

inline UPoly<Rational> qpoly(std::initializer_list<long> low_first) {
  std::vector<Rational> c;
  for (long x : low_first) c.emplace_back(x);
  return UPoly<Rational>(c, Rational(0));
}

inline FieldPtr<Zp> gf(std::uint64_t p, std::initializer_list<long> modulus) {
  return make_extension<Zp>(BaseField::prime(p), zpoly(p, modulus));
}

/// QQ(i) = QQ[t]/(t^2 + 1).
inline FieldPtr<Rational> gaussian() {
  return make_extension<Rational>(BaseField::rationals(), qpoly({1, 0, 1}), true);
}

/// QQ(i) with {id, conj}.
inline GaloisGroup<Rational> gaussian_group() {
  auto f = gaussian();
  return GaloisGroup<Rational>::from_elements(
      f, {Automorphism<Rational>(f->gen(), "id"), verify_automorphism(f, -f->gen(), "conj")});
}

template <class K>
Elem<K> elem(const FieldPtr<K>& f, std::initializer_list<long> low_first) {
  std::vector<K> c;
  for (long x : low_first) c.push_back(scalar_from_int<K>(f->base(), x));
  return f->from_coeffs(c);
}

template <class Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Unsupported;
}

}  // namespace galdesc::testing
