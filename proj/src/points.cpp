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

#include "galdesc/points.hpp"

namespace galdesc {

template <class K>
std::vector<Elem<K>> field_elements(const FieldPtr<K>& f) {
  const mpz_class q = f->order();
  if (q > 1'000'000) throw Error(Errc::BudgetExceeded, f->name() + " is too large to enumerate");
  std::vector<Elem<K>> out;
  for (std::uint64_t i = 0; i < q.get_ui(); ++i) out.push_back(f->element_at(i));
  return out;
}

namespace {

// Equation with coefficients already in the target field.
template <class K>
struct Mapped {
  std::vector<std::pair<Monomial, Elem<K>>> terms;
};

}  // namespace

template <class K>
std::vector<std::vector<Elem<K>>> enumerate_points(const std::vector<MultiPoly<K>>& eqs, std::size_t nvars,
                                                   const FieldPtr<K>& over, std::size_t budget,
                                                   const CoeffMap<K>& map) {
  const auto elems = field_elements(over);
  const std::size_t q = elems.size();
  double total = 1;
  for (std::size_t i = 0; i < nvars; ++i) total *= static_cast<double>(q);
  if (total > static_cast<double>(budget)) {
    throw Error(Errc::BudgetExceeded, std::to_string(q) + "^" + std::to_string(nvars) + " points exceed budget " +
                                          std::to_string(budget));
  }
  std::vector<Mapped<K>> mapped;
  int maxdeg = 0;
  for (const auto& e : eqs) {
    if (e.ring()->nvars() != nvars) throw Error(Errc::ShapeMismatch, "equation in the wrong number of variables");
    Mapped<K> m;
    for (const auto& [mono, c] : e.terms()) {
      m.terms.emplace_back(mono, map ? map(c) : lift_coeff(c, over));
      for (int x : mono) maxdeg = std::max(maxdeg, x);
    }
    mapped.push_back(std::move(m));
  }
  // pow[v][e] = elems[v]^e.
  std::vector<std::vector<Elem<K>>> pow(q);
  for (std::size_t v = 0; v < q; ++v) {
    pow[v].push_back(over->one());
    for (int e = 1; e <= maxdeg; ++e) pow[v].push_back(pow[v].back() * elems[v]);
  }

  std::vector<std::vector<Elem<K>>> out;
  std::vector<std::size_t> idx(nvars, 0);
  while (true) {
    bool ok = true;
    for (const auto& m : mapped) {
      Elem<K> acc = over->zero();
      for (const auto& [mono, c] : m.terms) {
        Elem<K> t = c;
        for (std::size_t i = 0; i < nvars; ++i) {
          if (mono[i] > 0) t *= pow[idx[i]][static_cast<std::size_t>(mono[i])];
        }
        acc += t;
      }
      if (!acc.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<Elem<K>> pt;
      for (auto i : idx) pt.push_back(elems[i]);
      out.push_back(std::move(pt));
    }
    std::size_t k = 0;
    while (k < nvars && ++idx[k] == q) idx[k++] = 0;
    if (k == nvars) break;
  }
  return out;
}

template std::vector<Elem<Rational>> field_elements(const FieldPtr<Rational>&);
template std::vector<Elem<Zp>> field_elements(const FieldPtr<Zp>&);
template std::vector<std::vector<Elem<Rational>>> enumerate_points(const std::vector<MultiPoly<Rational>>&,
                                                                   std::size_t, const FieldPtr<Rational>&,
                                                                   std::size_t, const CoeffMap<Rational>&);
template std::vector<std::vector<Elem<Zp>>> enumerate_points(const std::vector<MultiPoly<Zp>>&, std::size_t,
                                                             const FieldPtr<Zp>&, std::size_t,
                                                             const CoeffMap<Zp>&);

}  // namespace galdesc
