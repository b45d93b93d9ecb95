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

#include "galdesc/scalar.hpp"

namespace galdesc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BaseField BaseField::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ULL << 31)) {
    throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return BaseField(p);
}

std::string BaseField::name() const {
  return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Zp inverse(Zp a) {
  if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(a.p) + ")");
  std::int64_t r0 = a.p, r1 = a.v, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return Zp(s0, a.p);
}

std::string to_string(Zp a) { return std::to_string(a.v); }

Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in QQ");
  return Rational(1) / a;
}

std::string to_string(const Rational& a) { return a.get_str(); }

Zp ScalarTraits<Zp>::from_rational(const BaseField& b, const Rational& q) {
  const auto p = static_cast<long>(b.characteristic());
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  Zp n(num.get_si(), p);
  Zp d(den.get_si(), p);
  return n / d;
}

}  // namespace galdesc
