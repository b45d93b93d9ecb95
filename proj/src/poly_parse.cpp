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

#include "galdesc/poly_parse.hpp"

#include <cctype>

namespace galdesc {

namespace {

template <class V, class Hooks>
class Parser {
 public:
  Parser(std::string_view s, Hooks& h) : s_(s), h_(h) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  V term() {
    V v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        V d = unary();
        v = h_.divide(v, d, at);
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (eat('-')) return h_.integer(mpz_class(0)) - unary();
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    V base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    if (pos_ - start > 6) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    V r = h_.integer(mpz_class(1));
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return h_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return h_.identifier(std::string(s_.substr(start, pos_ - start)), start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  Hooks& h_;
  std::size_t pos_ = 0;
};

template <class K>
struct MultiHooks {
  RingPtr<K> ring;

  MultiPoly<K> integer(const mpz_class& n) const {
    const K c = ScalarTraits<K>::from_rational(ring->field->base(), Rational(n));
    return MultiPoly<K>::constant(ring, ring->field->from_base(c));
  }
  MultiPoly<K> identifier(const std::string& name, std::size_t at) const {
    if (auto i = ring->index_of(name)) return MultiPoly<K>::variable(ring, *i);
    if (name == "t") {
      if (ring->field->degree() == 1) throw SyntaxError(at, "t is not defined over " + ring->field->name());
      return MultiPoly<K>::constant(ring, ring->field->gen());
    }
    throw SyntaxError(at, "unknown variable '" + name + "' in " + ring->name());
  }
  MultiPoly<K> divide(const MultiPoly<K>& a, const MultiPoly<K>& d, std::size_t at) const {
    if (!d.is_constant()) throw SyntaxError(at, "division by a non-constant");
    if (d.is_zero()) throw SyntaxError(at, "division by zero");
    return a.scaled(d.constant_term().inverse());
  }
};

template <class K>
struct UniHooks {
  BaseField base;
  K zero;

  UPoly<K> integer(const mpz_class& n) const {
    return UPoly<K>({ScalarTraits<K>::from_rational(base, Rational(n))}, zero);
  }
  UPoly<K> identifier(const std::string& name, std::size_t at) const {
    if (name != "t") throw SyntaxError(at, "expected a polynomial in t, found '" + name + "'");
    return UPoly<K>::monomial(one_like(zero), 1);
  }
  UPoly<K> divide(const UPoly<K>& a, const UPoly<K>& d, std::size_t at) const {
    if (d.degree() != 0) throw SyntaxError(at, d.is_zero() ? "division by zero" : "division by a non-constant");
    return inverse(d.coeff(0)) * a;
  }
};

}  // namespace

template <class K>
MultiPoly<K> parse_poly(const RingPtr<K>& ring, std::string_view text) {
  MultiHooks<K> hooks{ring};
  try {
    return Parser<MultiPoly<K>, MultiHooks<K>>(text, hooks).parse();
  } catch (const Error& e) {
    // e.g. a denominator divisible by p.
    throw SyntaxError(0, e.what());
  }
}

template <class K>
UPoly<K> parse_upoly(const BaseField& base, std::string_view text) {
  UniHooks<K> hooks{base, scalar_from_int<K>(base, 0)};
  try {
    return Parser<UPoly<K>, UniHooks<K>>(text, hooks).parse();
  } catch (const Error& e) {
    throw SyntaxError(0, e.what());
  }
}

template <class K>
Elem<K> parse_elem(const FieldPtr<K>& field, std::string_view text) {
  UPoly<K> u = parse_upoly<K>(field->base(), text);
  if (field->degree() == 1 && u.degree() > 0) throw SyntaxError(0, "t is not defined over " + field->name());
  return field->from_coeffs(u.coeffs());
}

template MultiPoly<Rational> parse_poly(const RingPtr<Rational>&, std::string_view);
template MultiPoly<Zp> parse_poly(const RingPtr<Zp>&, std::string_view);
template UPoly<Rational> parse_upoly(const BaseField&, std::string_view);
template UPoly<Zp> parse_upoly(const BaseField&, std::string_view);
template Elem<Rational> parse_elem(const FieldPtr<Rational>&, std::string_view);
template Elem<Zp> parse_elem(const FieldPtr<Zp>&, std::string_view);

}  // namespace galdesc
