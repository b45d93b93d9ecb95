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

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "galdesc/scalar.hpp"

namespace galdesc {

/// Dense univariate polynomial over a base scalar K, lowest degree first.
/// The zero polynomial has degree -1 and an empty coefficient list.
template <class K>
class UPoly {
 public:
  explicit UPoly(K zero) : zero_(zero_like(zero)) {}
  UPoly(std::vector<K> coeffs, K zero) : zero_(zero_like(zero)), c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(K coeff, std::size_t degree) {
    std::vector<K> c(degree + 1, zero_like(coeff));
    c[degree] = coeff;
    return UPoly(std::move(c), coeff);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& zero() const { return zero_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && is_one(c_.back()); }

  UPoly monic() const {
    if (is_zero()) return *this;
    K li = inverse(lead());
    std::vector<K> c(c_.size(), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * li;
    return UPoly(std::move(c), zero_);
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(c), a.zero_);
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(c), a.zero_);
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (galdesc::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c), a.zero_);
  }
  friend UPoly operator*(const K& s, const UPoly& a) {
    std::vector<K> c(a.c_.size(), a.zero_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return UPoly(std::move(c), a.zero_);
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<K> r = c_;
    if (degree() < d.degree()) return {UPoly(zero_), *this};
    std::vector<K> q(c_.size() - d.c_.size() + 1, zero_);
    K li = inverse(d.lead());
    for (int i = degree(); i >= d.degree(); --i) {
      K f = r[i] * li;
      if (galdesc::is_zero(f)) continue;
      const std::size_t shift = static_cast<std::size_t>(i - d.degree());
      q[shift] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[shift + j] -= f * d.c_[j];
    }
    r.resize(d.c_.size() - 1, zero_);
    return {UPoly(std::move(q), zero_), UPoly(std::move(r), zero_)};
  }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(zero_);
    std::vector<K> c(c_.size() - 1, zero_);
    K n = zero_;
    K one = one_like(zero_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      n += one;
      c[i - 1] = n * c_[i];
    }
    return UPoly(std::move(c), zero_);
  }

  K eval(const K& x) const {
    K acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && galdesc::is_zero(c_.back())) c_.pop_back();
  }

  K zero_;
  std::vector<K> c_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s) with s*a = g mod m, g monic.
template <class K>
std::pair<UPoly<K>, UPoly<K>> gcd_cofactor(const UPoly<K>& a, const UPoly<K>& m) {
  UPoly<K> r0 = m, r1 = a % m;
  UPoly<K> s0(m.zero()), s1 = UPoly<K>::monomial(one_like(m.zero()), 0);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly<K> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  K li = inverse(r0.lead());
  return {li * r0, li * s0};
}

/// base^e mod m by square and multiply, e given as an arbitrary-precision integer.
template <class K>
UPoly<K> powmod(const UPoly<K>& base, mpz_class e, const UPoly<K>& m) {
  UPoly<K> result = UPoly<K>::monomial(one_like(m.zero()), 0) % m;
  UPoly<K> b = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

/// Human-readable rendering in the given variable, highest degree first.
template <class K>
std::string to_string(const UPoly<K>& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const K& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

}  // namespace galdesc
