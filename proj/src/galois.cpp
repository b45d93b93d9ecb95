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

#include "galdesc/galois.hpp"

#include <map>
#include <numeric>

namespace galdesc {

template <class K>
Automorphism<K>::Automorphism(Elem<K> image, std::string name)
    : image_(std::move(image)), name_(std::move(name)), matrix_(image_.field()->degree(), image_.field()->degree(),
                                                                 image_.field()->base_zero()) {
  const auto& f = image_.field();
  Elem<K> pw = f->one();
  for (std::size_t c = 0; c < f->degree(); ++c) {
    for (std::size_t r = 0; r < f->degree(); ++r) matrix_(r, c) = pw.coeff(r);
    pw = pw * image_;
  }
}

template <class K>
Elem<K> Automorphism<K>::operator()(const Elem<K>& a) const {
  const std::size_t n = matrix_.rows();
  std::vector<K> out(n, a.field()->base_zero());
  for (std::size_t c = 0; c < n; ++c) {
    const K& ac = a.coeff(c);
    if (is_zero(ac)) continue;
    for (std::size_t r = 0; r < n; ++r) out[r] += matrix_(r, c) * ac;
  }
  return Elem<K>(a.field(), std::move(out));
}

template <class K>
std::vector<Elem<K>> Automorphism<K>::operator()(const std::vector<Elem<K>>& v) const {
  std::vector<Elem<K>> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back((*this)(e));
  return out;
}

template <class K>
Matrix<Elem<K>> Automorphism<K>::operator()(const Matrix<Elem<K>>& m) const {
  Matrix<Elem<K>> out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (*this)(m(i, j));
  return out;
}

template <class K>
Automorphism<K> compose(const Automorphism<K>& s, const Automorphism<K>& t, std::string name) {
  return Automorphism<K>(s(t.image()), std::move(name));
}

template <class K>
Automorphism<K> verify_automorphism(const FieldPtr<K>& field, const Elem<K>& image, std::string name) {
  Elem<K> acc = field->zero();
  const auto& f = field->modulus().coeffs();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * image + field->from_base(f[i]);
  if (!acc.is_zero()) {
    throw Error(Errc::NotARoot, "f(" + to_string(image) + ") = " + to_string(acc) + " in " + field->name());
  }
  Automorphism<K> a(image, std::move(name));
  if (!is_invertible(a.matrix())) {
    throw Error(Errc::NotInvertible, "t -> " + to_string(image) + " does not induce a bijection of " + field->name());
  }
  return a;
}

template <class K>
GaloisGroup<K> GaloisGroup<K>::from_elements(const FieldPtr<K>& field, std::vector<Automorphism<K>> elems) {
  GaloisGroup g;
  g.field_ = field;
  for (auto& e : elems) {
    if (!e.image().field()->same_as(*field)) {
      throw Error(Errc::InvalidArgument, "automorphism " + e.name() + " belongs to another field");
    }
    e = verify_automorphism(field, e.image(), e.name());
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (elems[i].image() == elems[j].image()) {
        throw Error(Errc::InvalidArgument, "automorphism listed twice: t -> " + to_string(elems[i].image()));
      }
    }
  }
  auto id = std::find_if(elems.begin(), elems.end(), [](const auto& e) { return e.is_identity(); });
  if (id == elems.end()) {
    throw Error(Errc::NotClosed, "the identity t -> t is missing");
  }
  std::rotate(elems.begin(), id, id + 1);
  g.elems_ = std::move(elems);
  const std::size_t n = g.elems_.size();
  g.table_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem<K> img = g.elems_[i](g.elems_[j].image());
      auto idx = g.find_image(img);
      if (!idx) {
        throw Error(Errc::NotClosed, g.elems_[i].name() + " o " + g.elems_[j].name() + " = (t -> " + to_string(img) +
                                         ") is not in the list");
      }
      g.table_[i][j] = *idx;
    }
  }
  g.inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.table_[i][j] == kIdentity) g.inverse_[i] = j;
    }
  }
  return g;
}

template <class K>
std::optional<std::size_t> GaloisGroup<K>::find(std::string_view name) const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].name() == name) return i;
  }
  return std::nullopt;
}

template <class K>
std::optional<std::size_t> GaloisGroup<K>::find_image(const Elem<K>& image) const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].image() == image) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<bool> closure(const std::vector<std::vector<std::size_t>>& table, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(table.size(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto g : gens) {
      std::size_t x = table[members[k]][g];
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  return in;
}

}  // namespace

template <class K>
std::vector<std::size_t> GaloisGroup<K>::generators() const {
  std::vector<std::size_t> gens;
  std::vector<bool> in = closure(table_, gens);
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (in[i]) continue;
    gens.push_back(i);
    in = closure(table_, gens);
  }
  return gens;
}

template <class K>
GaloisGroup<K> GaloisGroup<K>::subgroup(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in = closure(table_, gens);
  std::vector<Automorphism<K>> sub;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (in[i]) sub.push_back(elems_[i]);
  return from_elements(field_, std::move(sub));
}

template <class K>
bool GaloisGroup<K>::satisfies_group_axioms() const {
  const std::size_t n = elems_.size();
  if (!elems_[kIdentity].is_identity()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i][kIdentity] != i || table_[kIdentity][i] != i) return false;
    if (table_[i][inverse_[i]] != kIdentity || table_[inverse_[i]][i] != kIdentity) return false;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]]) return false;
  }
  return true;
}

GaloisGroup<Zp> frobenius_group(const FieldPtr<Zp>& ext) {
  if (!ext->is_finite()) throw Error(Errc::NotFiniteBase, ext->name());
  const auto p = static_cast<long>(ext->base().characteristic());
  std::vector<Automorphism<Zp>> elems;
  Elem<Zp> img = ext->gen();
  for (std::size_t i = 0; i < ext->degree(); ++i) {
    std::string name = i == 0 ? "id" : (i == 1 ? "frob" : "frob^" + std::to_string(i));
    elems.emplace_back(img, name);
    img = img.pow(mpz_class(p));
  }
  auto g = GaloisGroup<Zp>::from_elements(ext, std::move(elems));
  if (!g.is_full()) throw Error(Errc::InternalContradiction, "Frobenius group of wrong order");
  return g;
}

UPoly<Rational> cyclotomic_polynomial(int m) {
  static std::map<int, UPoly<Rational>> memo;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  const Rational z(0);
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1, z);
  c[0] = -1;
  c[static_cast<std::size_t>(m)] = 1;
  UPoly<Rational> f(c, z);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) f = f.divmod(cyclotomic_polynomial(d)).first;
  }
  memo.emplace(m, f);
  return f;
}

std::pair<FieldPtr<Rational>, GaloisGroup<Rational>> cyclotomic_group(int m) {
  if (m < 3) throw Error(Errc::InvalidArgument, "cyclotomic index must be >= 3");
  const BaseField q = BaseField::rationals();
  auto checked = make_extension<Rational>(q, cyclotomic_polynomial(m), true);
  auto field = std::make_shared<const Field<Rational>>(Field<Rational>::Token{}, q, checked->modulus(),
                                                       Irreducibility::BuiltIn, "Cyclo(" + std::to_string(m) + ")",
                                                       checked->base_field());
  std::vector<Automorphism<Rational>> elems;
  for (int a = 1; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    elems.emplace_back(field->gen().pow(mpz_class(a)), a == 1 ? "id" : "s" + std::to_string(a));
  }
  auto g = GaloisGroup<Rational>::from_elements(field, std::move(elems));
  if (!g.is_full()) throw Error(Errc::InternalContradiction, "cyclotomic group of wrong order");
  return {field, std::move(g)};
}

template <class K>
std::vector<Elem<K>> check_fixed_field(const GaloisGroup<K>& group) {
  const auto& f = group.field();
  const std::size_t n = f->degree();
  Matrix<K> stacked(0, n, f->base_zero());
  const Matrix<K> id = Matrix<K>::identity(n, f->base_zero());
  for (const auto& s : group.elements()) stacked = vstack(stacked, s.matrix() - id);
  Matrix<K> ker = kernel(stacked);
  std::vector<Elem<K>> basis;
  for (std::size_t j = 0; j < ker.cols(); ++j) basis.push_back(f->from_coeffs(ker.column(j)));
  return basis;
}

template <class K>
TwistedGroupAlgebraMap<K> dedekind_check(const GaloisGroup<K>& group) {
  const auto& f = group.field();
  const std::size_t n = f->degree();
  Matrix<K> m(n * n, n * group.order(), f->base_zero());
  Elem<K> ta = f->one();
  for (std::size_t a = 0; a < n; ++a) {
    Matrix<K> left = mult_matrix(ta);
    for (std::size_t s = 0; s < group.order(); ++s) {
      Matrix<K> endo = left * group[s].matrix();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r * n + c, s * n + a) = endo(r, c);
    }
    ta = ta * f->gen();
  }
  std::size_t rk = rank(m);
  if (rk != n * n || m.cols() != n * n) {
    throw Error(Errc::RankDeficient, "Omega[Gamma] -> End_k(Omega) has rank " + std::to_string(rk) + ", expected " +
                                         std::to_string(n * n));
  }
  return {std::move(m), rk};
}

template class Automorphism<Rational>;
template class Automorphism<Zp>;
template class GaloisGroup<Rational>;
template class GaloisGroup<Zp>;
template Automorphism<Rational> compose(const Automorphism<Rational>&, const Automorphism<Rational>&, std::string);
template Automorphism<Zp> compose(const Automorphism<Zp>&, const Automorphism<Zp>&, std::string);
template Automorphism<Rational> verify_automorphism(const FieldPtr<Rational>&, const Elem<Rational>&, std::string);
template Automorphism<Zp> verify_automorphism(const FieldPtr<Zp>&, const Elem<Zp>&, std::string);
template std::vector<Elem<Rational>> check_fixed_field(const GaloisGroup<Rational>&);
template std::vector<Elem<Zp>> check_fixed_field(const GaloisGroup<Zp>&);
template TwistedGroupAlgebraMap<Rational> dedekind_check(const GaloisGroup<Rational>&);
template TwistedGroupAlgebraMap<Zp> dedekind_check(const GaloisGroup<Zp>&);

}  // namespace galdesc
