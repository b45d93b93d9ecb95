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

#include "galdesc/field.hpp"

namespace galdesc {

template <class K>
Field<K>::Field(Token, BaseField base, UPoly<K> modulus, Irreducibility irr, std::string name,
                FieldPtr<K> base_field)
    : base_(base),
      modulus_(std::move(modulus)),
      n_(static_cast<std::size_t>(modulus_.degree())),
      irr_(irr),
      name_(std::move(name)),
      base_field_(std::move(base_field)),
      zero_(scalar_from_int<K>(base, 0)) {
  // t^n = -(f_0 + ... + f_{n-1} t^{n-1}); higher powers by shifting.
  if (n_ >= 2) {
    std::vector<K> cur(n_, zero_);
    for (std::size_t j = 0; j < n_; ++j) cur[j] = -modulus_.coeff(j);
    xpow_.push_back(cur);
    for (std::size_t i = 1; i + 1 < n_; ++i) {
      std::vector<K> next(n_, zero_);
      K top = cur[n_ - 1];
      for (std::size_t j = n_ - 1; j > 0; --j) next[j] = cur[j - 1];
      for (std::size_t j = 0; j < n_; ++j) next[j] += top * xpow_[0][j];
      xpow_.push_back(next);
      cur = std::move(next);
    }
  }
}

template <class K>
mpz_class Field<K>::order() const {
  if (!base_.is_finite()) throw Error(Errc::NotFiniteBase, name_ + " is not finite");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), base_.characteristic(), n_);
  return q;
}

template <class K>
FieldPtr<K> Field<K>::base_field() const {
  if (base_field_) return base_field_;
  return this->shared_from_this();
}

template <class K>
Elem<K> Field<K>::zero() const {
  return Elem<K>(this->shared_from_this(), std::vector<K>(n_, zero_));
}

template <class K>
Elem<K> Field<K>::one() const {
  return from_int(1);
}

template <class K>
Elem<K> Field<K>::gen() const {
  std::vector<K> c(n_, zero_);
  if (n_ == 1) {
    c[0] = -modulus_.coeff(0);
  } else {
    c[1] = base_one();
  }
  return Elem<K>(this->shared_from_this(), std::move(c));
}

template <class K>
Elem<K> Field<K>::from_int(long n) const {
  return from_base(scalar_from_int<K>(base_, n));
}

template <class K>
Elem<K> Field<K>::from_base(const K& c) const {
  std::vector<K> v(n_, zero_);
  v[0] = c;
  return Elem<K>(this->shared_from_this(), std::move(v));
}

template <class K>
Elem<K> Field<K>::from_coeffs(std::vector<K> c) const {
  if (c.size() > 2 * n_ - 1) {
    c = (UPoly<K>(std::move(c), zero_) % modulus_).coeffs();
  } else if (c.size() > n_) {
    c = reduce(std::move(c));
  }
  c.resize(n_, zero_);
  return Elem<K>(this->shared_from_this(), std::move(c));
}

template <class K>
Elem<K> Field<K>::element_at(std::uint64_t index) const {
  if (!base_.is_finite()) throw Error(Errc::NotFiniteBase, name_ + " is not finite");
  std::vector<K> c(n_, zero_);
  const auto p = base_.characteristic();
  for (std::size_t j = 0; j < n_; ++j) {
    c[j] = scalar_from_int<K>(base_, static_cast<long>(index % p));
    index /= p;
  }
  return Elem<K>(this->shared_from_this(), std::move(c));
}

template <class K>
std::vector<K> Field<K>::reduce(std::vector<K> c) const {
  if (n_ == 1) {
    // f = t - a: substitute t = a.
    K a = -modulus_.coeff(0);
    K acc = zero_;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
    return {acc};
  }
  std::vector<K> out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(c.size(), n_)));
  out.resize(n_, zero_);
  for (std::size_t i = n_; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    const auto& row = xpow_[i - n_];
    for (std::size_t j = 0; j < n_; ++j) out[j] += c[i] * row[j];
  }
  return out;
}

template <class K>
bool Elem<K>::is_zero() const {
  for (const auto& x : c_) {
    if (!galdesc::is_zero(x)) return false;
  }
  return true;
}

template <class K>
bool Elem<K>::is_one() const {
  if (c_.empty() || !galdesc::is_one(c_[0])) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!galdesc::is_zero(c_[i])) return false;
  }
  return true;
}

template <class K>
bool Elem<K>::is_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!galdesc::is_zero(c_[i])) return false;
  }
  return true;
}

template <class K>
Elem<K> Elem<K>::mul(const Elem& b) const {
  const std::size_t n = c_.size();
  if (n == 1) return Elem(f_, {c_[0] * b.c_[0]});
  std::vector<K> prod(2 * n - 1, zero_like(c_[0]));
  for (std::size_t i = 0; i < n; ++i) {
    if (galdesc::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += c_[i] * b.c_[j];
  }
  return Elem(f_, f_->reduce(std::move(prod)));
}

template <class K>
Elem<K> Elem<K>::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0 in " + f_->name());
  const K z = f_->base_zero();
  if (c_.size() == 1) return Elem(f_, {galdesc::inverse(c_[0])});
  UPoly<K> a(c_, z);
  auto [g, s] = gcd_cofactor(a, f_->modulus());
  if (g.degree() != 0) {
    throw Error(Errc::NotInvertible, to_string(*this) + " is a zero divisor modulo " +
                                         galdesc::to_string(f_->modulus()));
  }
  std::vector<K> c = s.coeffs();
  c.resize(c_.size(), z);
  return Elem(f_, std::move(c));
}

template <class K>
Elem<K> Elem<K>::pow(mpz_class e) const {
  if (e < 0) return inverse().pow(-e);
  Elem result = f_->one();
  Elem b = *this;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

template <class K>
std::uint64_t Elem<K>::index() const {
  if constexpr (std::is_same_v<K, Zp>) {
    std::uint64_t idx = 0;
    for (std::size_t j = c_.size(); j-- > 0;) {
      idx = idx * static_cast<std::uint64_t>(c_[j].p) + static_cast<std::uint64_t>(c_[j].v);
    }
    return idx;
  } else {
    throw Error(Errc::NotFiniteBase, "index() needs a finite field");
  }
}

template <class K>
std::string to_string(const Elem<K>& a) {
  return to_string(UPoly<K>(a.coeffs(), a.field()->base_zero()), "t");
}

namespace {

template <class K>
bool squarefree(const UPoly<K>& f) {
  UPoly<K> d = f.derivative();
  if (d.is_zero()) return f.degree() == 0;
  return gcd(f, d).degree() == 0;
}

}  // namespace

bool is_irreducible_mod_p(const UPoly<Zp>& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Zp z = f.zero();
  const auto p = static_cast<unsigned long>(z.p);
  UPoly<Zp> x = UPoly<Zp>::monomial(one_like(z), 1);
  UPoly<Zp> xp = x;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    xp = powmod(xp, mpz_class(p), f);
    if (gcd(xp - x, f).degree() != 0) return false;
  }
  return true;
}

UPoly<Zp> default_modulus(std::uint64_t p, std::size_t n) {
  const BaseField b = BaseField::prime(p);
  const Zp z = scalar_from_int<Zp>(b, 0);
  if (n == 1) return UPoly<Zp>({z, one_like(z)}, z);
  // Digits d[0] is the coefficient of t^(n-1) (most significant).
  std::vector<std::uint64_t> d(n, 0);
  while (true) {
    std::vector<Zp> c(n + 1, z);
    for (std::size_t i = 0; i < n; ++i) c[n - 1 - i] = Zp(static_cast<std::int64_t>(d[i]), static_cast<std::int64_t>(p));
    c[n] = one_like(z);
    UPoly<Zp> f(c, z);
    if (!is_zero(f.coeff(0)) && is_irreducible_mod_p(f)) return f;
    std::size_t i = n;
    while (i-- > 0) {
      if (++d[i] < p) break;
      d[i] = 0;
      if (i == 0) throw Error(Errc::InternalContradiction, "no irreducible polynomial found");
    }
  }
}

template <class K>
FieldPtr<K> prime_field(const BaseField& base) {
  if (!ScalarTraits<K>::matches(base)) {
    throw Error(Errc::CharacteristicMismatch, "scalar type does not match " + base.name());
  }
  const K z = scalar_from_int<K>(base, 0);
  UPoly<K> t({z, one_like(z)}, z);
  return std::make_shared<const Field<K>>(typename Field<K>::Token{}, base, t, Irreducibility::Verified,
                                          base.name(), nullptr);
}

template <class K>
FieldPtr<K> make_extension(const BaseField& base, const UPoly<K>& modulus, bool irreducible_asserted,
                           std::string name) {
  if (!ScalarTraits<K>::matches(base)) {
    throw Error(Errc::CharacteristicMismatch, "scalar type does not match " + base.name());
  }
  if constexpr (std::is_same_v<K, Zp>) {
    for (const auto& c : modulus.coeffs()) {
      if (static_cast<std::uint64_t>(c.p) != base.characteristic()) {
        throw Error(Errc::CharacteristicMismatch,
                    "modulus coefficient in GF(" + std::to_string(c.p) + ") over " + base.name());
      }
    }
  }
  if (modulus.degree() < 1 || !modulus.is_monic()) {
    throw Error(Errc::NotMonic, galdesc::to_string(modulus) + " must be monic of degree >= 1");
  }
  if (!squarefree(modulus)) {
    throw Error(Errc::NotSquarefree, galdesc::to_string(modulus) + " has a repeated factor");
  }
  Irreducibility irr = Irreducibility::Verified;
  if constexpr (std::is_same_v<K, Zp>) {
    if (!is_irreducible_mod_p(modulus)) {
      throw Error(Errc::NotIrreducible, galdesc::to_string(modulus) + " is reducible over " + base.name());
    }
  } else {
    irr = modulus.degree() == 1 ? Irreducibility::Verified
                                : (irreducible_asserted ? Irreducibility::Asserted : Irreducibility::Unverified);
  }
  if (name.empty()) {
    if (base.is_finite()) {
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), base.characteristic(), static_cast<unsigned long>(modulus.degree()));
      name = "GF(" + q.get_str() + ")";
    } else {
      name = base.name() + "[t]/(" + galdesc::to_string(modulus) + ")";
    }
  }
  FieldPtr<K> bf = modulus.degree() == 1 ? nullptr : prime_field<K>(base);
  return std::make_shared<const Field<K>>(typename Field<K>::Token{}, base, modulus, irr, std::move(name),
                                          std::move(bf));
}

FieldPtr<Zp> finite_field(std::uint64_t p, std::size_t n) {
  return make_extension<Zp>(BaseField::prime(p), default_modulus(p, n));
}

template class Field<Rational>;
template class Field<Zp>;
template class Elem<Rational>;
template class Elem<Zp>;
template std::string to_string(const Elem<Rational>&);
template std::string to_string(const Elem<Zp>&);
template FieldPtr<Rational> prime_field(const BaseField&);
template FieldPtr<Zp> prime_field(const BaseField&);
template FieldPtr<Rational> make_extension(const BaseField&, const UPoly<Rational>&, bool, std::string);
template FieldPtr<Zp> make_extension(const BaseField&, const UPoly<Zp>&, bool, std::string);

}  // namespace galdesc
