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

#include "galdesc/groebner.hpp"

#include <algorithm>
#include <map>

namespace galdesc {

namespace {

// Dense term list in descending order for a fixed monomial order.
template <class K>
struct DPoly {
  std::vector<std::pair<Monomial, Elem<K>>> terms;
  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  bool is_constant() const { return !terms.empty() && total_degree(lm()) == 0; }
};

struct Greater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

template <class K>
using Work = std::map<Monomial, Elem<K>, Greater>;

template <class K>
void accumulate(Work<K>& w, Monomial m, const Elem<K>& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = w.try_emplace(std::move(m), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) w.erase(it);
}

template <class K>
DPoly<K> to_dpoly(Work<K>& w) {
  DPoly<K> d;
  d.terms.reserve(w.size());
  for (auto& [m, c] : w) d.terms.emplace_back(m, std::move(c));
  return d;
}

template <class K>
DPoly<K> to_dpoly(const MultiPoly<K>& p, const MonomialOrder& order) {
  Work<K> w(Greater{&order});
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return to_dpoly(w);
}

template <class K>
MultiPoly<K> to_multi(const DPoly<K>& d, const RingPtr<K>& ring) {
  MultiPoly<K> p(ring);
  for (const auto& [m, c] : d.terms) p.add_term(m, c);
  return p;
}

template <class K>
void make_monic(DPoly<K>& d) {
  if (d.empty() || d.terms.front().second.is_one()) return;
  const Elem<K> inv = d.terms.front().second.inverse();
  for (auto& [m, c] : d.terms) c *= inv;
}

template <class K>
class Reducer {
 public:
  Reducer(const MonomialOrder& order, std::size_t budget) : order_(order), budget_(budget) {}

  // Full reduction of p by monic divisors.
  DPoly<K> reduce(const DPoly<K>& p, const std::vector<const DPoly<K>*>& basis) {
    Work<K> w(Greater{&order_});
    for (const auto& [m, c] : p.terms) w.emplace(m, c);
    return reduce(w, basis);
  }

  DPoly<K> reduce(Work<K>& w, const std::vector<const DPoly<K>*>& basis) {
    DPoly<K> rem;
    while (!w.empty()) {
      auto it = w.begin();
      const DPoly<K>* g = nullptr;
      for (const auto* b : basis) {
        if (divides(b->lm(), it->first)) {
          g = b;
          break;
        }
      }
      if (!g) {
        rem.terms.emplace_back(it->first, std::move(it->second));
        w.erase(it);
        continue;
      }
      tick();
      const Monomial q = mono_div(it->first, g->lm());
      const Elem<K> c = it->second;
      w.erase(it);
      for (std::size_t k = 1; k < g->terms.size(); ++k) {
        accumulate(w, mono_mul(q, g->terms[k].first), -(c * g->terms[k].second));
      }
    }
    return rem;
  }

  DPoly<K> spoly(const DPoly<K>& f, const DPoly<K>& g) {
    const Monomial l = mono_lcm(f.lm(), g.lm());
    const Monomial a = mono_div(l, f.lm());
    const Monomial b = mono_div(l, g.lm());
    Work<K> w(Greater{&order_});
    for (std::size_t k = 1; k < f.terms.size(); ++k) accumulate(w, mono_mul(a, f.terms[k].first), f.terms[k].second);
    for (std::size_t k = 1; k < g.terms.size(); ++k) accumulate(w, mono_mul(b, g.terms[k].first), -g.terms[k].second);
    return to_dpoly(w);
  }

  const MonomialOrder& order() const { return order_; }

 private:
  void tick() {
    if (++steps_ > budget_) {
      throw Error(Errc::BudgetExceeded, "more than " + std::to_string(budget_) + " reduction steps");
    }
  }

  const MonomialOrder& order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

template <class K>
std::vector<const DPoly<K>*> pointers(const std::vector<DPoly<K>>& v) {
  std::vector<const DPoly<K>*> out;
  for (const auto& d : v) out.push_back(&d);
  return out;
}

template <class K>
GroebnerBasis<K> unit_basis(const RingPtr<K>& ring, const MonomialOrder& order) {
  return GroebnerBasis<K>{ring, order, {MultiPoly<K>::from_int(ring, 1)}};
}

}  // namespace

template <class K>
Ideal<K> make_ideal(RingPtr<K> ring, std::vector<MultiPoly<K>> gens) {
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*ring)) {
      throw Error(Errc::ShapeMismatch, "generator from " + g.ring()->name() + " in an ideal of " + ring->name());
    }
  }
  return Ideal<K>{std::move(ring), std::move(gens)};
}

template <class K>
Monomial leading_monomial(const MultiPoly<K>& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || order.compare(m, *best) > 0) best = &m;
  }
  return *best;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& order, std::size_t budget) {
  Reducer<K> red(order, budget);
  std::vector<DPoly<K>> g;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add = [&](DPoly<K> d) {
    make_monic(d);
    for (std::size_t i = 0; i < g.size(); ++i) pairs.push_back({i, g.size(), mono_lcm(g[i].lm(), d.lm())});
    g.push_back(std::move(d));
  };

  for (const auto& p : ideal.gens) {
    DPoly<K> r = red.reduce(to_dpoly(p, order), pointers(g));
    if (r.empty()) continue;
    if (r.is_constant()) return unit_basis(ideal.ring, order);
    add(std::move(r));
  }
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (order.compare(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    }
    Pair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (coprime(g[pr.i].lm(), g[pr.j].lm())) continue;
    DPoly<K> s = red.spoly(g[pr.i], g[pr.j]);
    DPoly<K> r = red.reduce(s, pointers(g));
    if (r.empty()) continue;
    if (r.is_constant()) return unit_basis(ideal.ring, order);
    add(std::move(r));
  }

  // Minimalize, then inter-reduce the tails.
  std::vector<std::size_t> idx(g.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return order.compare(g[a].lm(), g[b].lm()) < 0; });
  std::vector<DPoly<K>> minimal;
  for (auto k : idx) {
    bool redundant = false;
    for (const auto& m : minimal) {
      if (divides(m.lm(), g[k].lm())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g[k]));
  }
  std::vector<DPoly<K>> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const DPoly<K>*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(&minimal[l]);
    }
    DPoly<K> r = red.reduce(minimal[k], others);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const DPoly<K>& a, const DPoly<K>& b) {
    const int da = total_degree(a.lm()), db = total_degree(b.lm());
    if (da != db) return da < db;
    return a.lm() > b.lm();
  });
  GroebnerBasis<K> out{ideal.ring, order, {}};
  for (const auto& d : reduced) out.polys.push_back(to_multi(d, ideal.ring));
  return out;
}

template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const GroebnerBasis<K>& gb, std::size_t budget) {
  if (!p.ring()->same_as(*gb.ring)) throw Error(Errc::ShapeMismatch, "normal form across rings");
  Reducer<K> red(gb.order, budget);
  std::vector<DPoly<K>> basis;
  for (const auto& g : gb.polys) basis.push_back(to_dpoly(g, gb.order));
  for (auto& b : basis) make_monic(b);
  return to_multi(red.reduce(to_dpoly(p, gb.order), pointers(basis)), gb.ring);
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b, std::size_t budget) {
  if (!a.ring->same_as(*b.ring)) {
    throw Error(Errc::ShapeMismatch, "ideals of " + a.ring->name() + " and " + b.ring->name());
  }
  auto inside = [&](const Ideal<K>& x, const Ideal<K>& y) {
    GroebnerBasis<K> gb = buchberger(y, MonomialOrder::grevlex(), budget);
    return std::all_of(x.gens.begin(), x.gens.end(),
                       [&](const MultiPoly<K>& p) { return normal_form(p, gb, budget).is_zero(); });
  };
  return inside(a, b) && inside(b, a);
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::string>& keep, std::size_t budget) {
  const auto& ring = *ideal.ring;
  std::vector<bool> kept(ring.nvars(), false);
  for (const auto& v : keep) {
    auto i = ring.index_of(v);
    if (!i) throw Error(Errc::InvalidArgument, "no variable '" + v + "' in " + ring.name());
    kept[*i] = true;
  }
  // Eliminated variables first, then the kept ones in the requested order.
  std::vector<std::string> perm_vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!kept[i]) perm_vars.push_back(ring.vars[i]);
  }
  const std::size_t split = perm_vars.size();
  perm_vars.insert(perm_vars.end(), keep.begin(), keep.end());
  auto perm_ring = make_ring(ring.field, perm_vars);
  auto out_ring = make_ring(ring.field, keep);

  Ideal<K> permuted{perm_ring, {}};
  for (const auto& g : ideal.gens) permuted.gens.push_back(change_ring(g, perm_ring));
  GroebnerBasis<K> gb = buchberger(permuted, MonomialOrder::block(split), budget);

  std::vector<bool> allowed(perm_vars.size(), false);
  for (std::size_t i = split; i < perm_vars.size(); ++i) allowed[i] = true;
  Ideal<K> out{out_ring, {}};
  for (const auto& p : gb.polys) {
    if (p.uses_only(allowed)) out.gens.push_back(change_ring(p, out_ring));
  }
  return out;
}

template <class K>
std::string to_string(const Ideal<K>& ideal) {
  if (ideal.gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) s += (i ? ", " : "") + to_string(ideal.gens[i]);
  return s + ")";
}

#define GALDESC_INSTANTIATE(K)                                                                         \
  template Ideal<K> make_ideal(RingPtr<K>, std::vector<MultiPoly<K>>);                                 \
  template Monomial leading_monomial(const MultiPoly<K>&, const MonomialOrder&);                       \
  template GroebnerBasis<K> buchberger(const Ideal<K>&, const MonomialOrder&, std::size_t);            \
  template MultiPoly<K> normal_form(const MultiPoly<K>&, const GroebnerBasis<K>&, std::size_t);        \
  template bool ideal_equal(const Ideal<K>&, const Ideal<K>&, std::size_t);                            \
  template Ideal<K> eliminate(const Ideal<K>&, const std::vector<std::string>&, std::size_t);          \
  template std::string to_string(const Ideal<K>&);

GALDESC_INSTANTIATE(Rational)
GALDESC_INSTANTIATE(Zp)

}  // namespace galdesc
