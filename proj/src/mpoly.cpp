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

#include "galdesc/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace galdesc {

template <class K>
std::string PolyRing<K>::name() const {
  std::string s = field->name() + "[";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + vars[i];
  return s + "]";
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

template <class K>
RingPtr<K> make_ring(FieldPtr<K> field, std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw Error(Errc::InvalidArgument, "bad variable name '" + v + "'");
    // t is reserved for the field generator in polynomial text.
    if (v == "t") throw Error(Errc::InvalidArgument, "variable name 't' is reserved");
    if (!seen.insert(v).second) throw Error(Errc::InvalidArgument, "duplicate variable '" + v + "'");
  }
  return std::make_shared<const PolyRing<K>>(PolyRing<K>{std::move(field), std::move(vars)});
}

template <class K>
MultiPoly<K> MultiPoly<K>::constant(RingPtr<K> ring, const Coeff& c) {
  MultiPoly p(ring);
  p.add_term(Monomial(ring->nvars(), 0), lift_coeff(c, ring->field));
  return p;
}

template <class K>
MultiPoly<K> MultiPoly<K>::from_int(RingPtr<K> ring, long n) {
  auto c = ring->field->from_int(n);
  return constant(std::move(ring), c);
}

template <class K>
MultiPoly<K> MultiPoly<K>::variable(RingPtr<K> ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error(Errc::InvalidArgument, "variable index out of range");
  Monomial m(ring->nvars(), 0);
  m[i] = 1;
  auto one = ring->field->one();
  return term(std::move(ring), std::move(m), one);
}

template <class K>
MultiPoly<K> MultiPoly<K>::variable(RingPtr<K> ring, const std::string& name) {
  auto i = ring->index_of(name);
  if (!i) throw Error(Errc::InvalidArgument, "no variable '" + name + "' in " + ring->name());
  return variable(std::move(ring), *i);
}

template <class K>
MultiPoly<K> MultiPoly<K>::term(RingPtr<K> ring, Monomial m, const Coeff& c) {
  if (m.size() != ring->nvars()) throw Error(Errc::ShapeMismatch, "exponent vector length");
  MultiPoly p(ring);
  p.add_term(m, lift_coeff(c, ring->field));
  return p;
}

template <class K>
bool MultiPoly<K>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

template <class K>
Elem<K> MultiPoly<K>::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field()->zero() : it->second;
}

template <class K>
int MultiPoly<K>::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, galdesc::total_degree(m));
  return d;
}

template <class K>
int MultiPoly<K>::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

template <class K>
bool MultiPoly<K>::has_base_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_base(); });
}

template <class K>
bool MultiPoly<K>::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0 && !allowed[i]) return false;
    }
  return true;
}

template <class K>
void MultiPoly<K>::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

template <class K>
MultiPoly<K> MultiPoly<K>::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

template <class K>
void MultiPoly<K>::check_ring(const MultiPoly& b) const {
  if (!ring_->same_as(*b.ring_)) {
    throw Error(Errc::ShapeMismatch, "polynomials from " + ring_->name() + " and " + b.ring_->name());
  }
}

template <class K>
MultiPoly<K>& MultiPoly<K>::operator+=(const MultiPoly& b) {
  check_ring(b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

template <class K>
MultiPoly<K>& MultiPoly<K>::operator-=(const MultiPoly& b) {
  check_ring(b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

template <class K>
MultiPoly<K> MultiPoly<K>::scaled(const Coeff& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  const Coeff cc = lift_coeff(c, field());
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * cc);
  return r;
}

template <class K>
MultiPoly<K> MultiPoly<K>::mul(const MultiPoly& b) const {
  check_ring(b);
  MultiPoly r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

template <class K>
MultiPoly<K> MultiPoly<K>::pow(unsigned e) const {
  MultiPoly result = from_int(ring_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class K>
Elem<K> lift_coeff(const Elem<K>& c, const FieldPtr<K>& target) {
  if (c.field() == target || c.field()->same_as(*target)) return c;
  if (c.field()->base() == target->base() && c.is_base()) return target->from_base(c.coeff(0));
  throw Error(Errc::ShapeMismatch, "coefficient " + to_string(c) + " of " + c.field()->name() +
                                       " does not lie in " + target->name());
}

template <class K>
MultiPoly<K> substitute(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& images, const RingPtr<K>& target) {
  const std::size_t n = p.ring()->nvars();
  if (images.size() != n) throw Error(Errc::ShapeMismatch, "need one image per variable");
  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<MultiPoly<K>>> powers(n);
  auto power = [&](std::size_t i, int e) -> const MultiPoly<K>& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(MultiPoly<K>::from_int(target, 1));
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * images[i]);
    return row[static_cast<std::size_t>(e)];
  };
  MultiPoly<K> out(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly<K> term = MultiPoly<K>::constant(target, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) term = term * power(i, m[i]);
    }
    out += term;
  }
  return out;
}

template <class K>
MultiPoly<K> map_variables(const MultiPoly<K>& p, const RingPtr<K>& target, const std::vector<std::size_t>& index) {
  MultiPoly<K> out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(target->nvars(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) mm[index[i]] += m[i];
    }
    out.add_term(mm, lift_coeff(c, target->field));
  }
  return out;
}

template <class K>
MultiPoly<K> change_ring(const MultiPoly<K>& p, const RingPtr<K>& target) {
  std::vector<std::size_t> index;
  for (const auto& v : p.ring()->vars) {
    auto i = target->index_of(v);
    if (!i) {
      // Only matters when the variable actually occurs.
      index.push_back(target->nvars());
      continue;
    }
    index.push_back(*i);
  }
  std::vector<bool> present;
  for (auto i : index) present.push_back(i < target->nvars());
  if (!p.uses_only(present)) {
    throw Error(Errc::ShapeMismatch, "polynomial uses variables missing from " + target->name());
  }
  for (auto& i : index) {
    if (i == target->nvars()) i = 0;
  }
  return map_variables(p, target, index);
}

template <class K>
MultiPoly<K> map_coefficients(const MultiPoly<K>& p, const std::function<Elem<K>(const Elem<K>&)>& fn) {
  MultiPoly<K> out(p.ring());
  for (const auto& [m, c] : p.terms()) out.add_term(m, fn(c));
  return out;
}

template <class K>
std::vector<MultiPoly<K>> components(const MultiPoly<K>& p, const RingPtr<K>& kring) {
  const std::size_t d = p.field()->degree();
  if (kring->field->degree() != 1 || kring->nvars() != p.ring()->nvars()) {
    throw Error(Errc::ShapeMismatch, "component ring must be over k with the same variables");
  }
  std::vector<MultiPoly<K>> out(d, MultiPoly<K>(kring));
  for (const auto& [m, c] : p.terms())
    for (std::size_t j = 0; j < d; ++j) out[j].add_term(m, kring->field->from_base(c.coeff(j)));
  return out;
}

template <class K>
Elem<K> evaluate(const MultiPoly<K>& p, const std::vector<Elem<K>>& point,
                 const std::function<Elem<K>(const Elem<K>&)>& coeff_map) {
  if (point.size() != p.ring()->nvars()) throw Error(Errc::ShapeMismatch, "point has wrong length");
  if (point.empty()) return coeff_map(p.constant_term());
  Elem<K> acc = point[0].field()->zero();
  for (const auto& [m, c] : p.terms()) {
    Elem<K> t = coeff_map(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

template <class K>
Elem<K> evaluate(const MultiPoly<K>& p, const std::vector<Elem<K>>& point) {
  FieldPtr<K> f = point.empty() ? p.field() : point[0].field();
  return evaluate<K>(p, point, [&](const Elem<K>& c) { return lift_coeff(c, f); });
}

template <class K>
std::string coeff_string(const Elem<K>& c) {
  if (c.is_base()) return to_string(c.coeff(0));
  return "(" + to_string(c) + ")";
}

template <class K>
std::string to_string(const MultiPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Elem<K>>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  const auto order = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) { return order.compare(a->first, b->first) > 0; });
  std::string out;
  for (const auto* t : terms) {
    std::string cs = coeff_string(t->second);
    const bool neg = cs[0] == '-';
    if (neg) cs = cs.substr(1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      const int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.ring()->vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
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

#define GALDESC_INSTANTIATE(K)                                                                                   \
  template struct PolyRing<K>;                                                                                   \
  template class MultiPoly<K>;                                                                                   \
  template RingPtr<K> make_ring(FieldPtr<K>, std::vector<std::string>);                                         \
  template Elem<K> lift_coeff(const Elem<K>&, const FieldPtr<K>&);                                              \
  template MultiPoly<K> substitute(const MultiPoly<K>&, const std::vector<MultiPoly<K>>&, const RingPtr<K>&);   \
  template MultiPoly<K> map_variables(const MultiPoly<K>&, const RingPtr<K>&, const std::vector<std::size_t>&); \
  template MultiPoly<K> change_ring(const MultiPoly<K>&, const RingPtr<K>&);                                    \
  template MultiPoly<K> map_coefficients(const MultiPoly<K>&, const std::function<Elem<K>(const Elem<K>&)>&);   \
  template std::vector<MultiPoly<K>> components(const MultiPoly<K>&, const RingPtr<K>&);                        \
  template Elem<K> evaluate(const MultiPoly<K>&, const std::vector<Elem<K>>&,                                   \
                            const std::function<Elem<K>(const Elem<K>&)>&);                                     \
  template Elem<K> evaluate(const MultiPoly<K>&, const std::vector<Elem<K>>&);                                  \
  template std::string coeff_string(const Elem<K>&);                                                            \
  template std::string to_string(const MultiPoly<K>&);

GALDESC_INSTANTIATE(Rational)
GALDESC_INSTANTIATE(Zp)

}  // namespace galdesc
