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

#include "galdesc/descent.hpp"

#include <map>

#include "galdesc/points.hpp"

namespace galdesc {

namespace {

template <class K>
GroebnerBasis<K> relation_basis(const AffineAlgebra<K>& a, std::size_t budget) {
  return buchberger(a.relations, MonomialOrder::grevlex(), budget);
}

template <class K>
bool vanishes(const MultiPoly<K>& p, const GroebnerBasis<K>& gb, std::size_t budget) {
  return normal_form(p, gb, budget).is_zero();
}

// s applied to coefficients, then variables replaced; explicit target so that
// zero-variable sources still land in the right ring.
template <class K>
MultiPoly<K> twist(const Automorphism<K>& s, const std::vector<MultiPoly<K>>& images, const MultiPoly<K>& p,
                   const RingPtr<K>& target) {
  return substitute(map_coefficients<K>(p, [&](const Elem<K>& c) { return s(c); }), images, target);
}

template <class K>
std::vector<MultiPoly<K>> variables(const RingPtr<K>& r) {
  std::vector<MultiPoly<K>> out;
  for (std::size_t i = 0; i < r->nvars(); ++i) out.push_back(MultiPoly<K>::variable(r, i));
  return out;
}

std::vector<std::size_t> positions(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = offset + i;
  return out;
}

// Omega[_a0.._a(m-1), _b0.._b(r-1)]: internal names never clash with user ones.
template <class K>
RingPtr<K> combined_ring(const FieldPtr<K>& f, std::size_t m, std::size_t r) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < m; ++i) vars.push_back("_a" + std::to_string(i));
  for (std::size_t j = 0; j < r; ++j) vars.push_back("_b" + std::to_string(j));
  return make_ring(f, vars);
}

template <class K>
void check_field(const FieldPtr<K>& a, const FieldPtr<K>& b, const std::string& what) {
  if (!a->same_as(*b)) throw Error(Errc::ShapeMismatch, what + ": " + a->name() + " vs " + b->name());
}

template <class K>
std::string images_string(const std::vector<MultiPoly<K>>& im, const RingPtr<K>& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < im.size(); ++i) s += (i ? ", " : "") + r->vars[i] + " -> " + to_string(im[i]);
  return s + "}";
}

template <class K>
void check_datum_shape(const AffineDescentDatum<K>& d) {
  check_field(d.algebra.field(), d.group.field(), "datum algebra and group");
  if (d.maps.size() != d.group.order()) throw Error(Errc::ShapeMismatch, "one automorphism per group element");
  for (std::size_t s = 0; s < d.maps.size(); ++s) {
    if (d.maps[s].sigma != s) throw Error(Errc::ShapeMismatch, "automorphisms must follow group order");
    if (d.maps[s].images.size() != d.algebra.nvars()) throw Error(Errc::ShapeMismatch, "one image per variable");
    for (const auto& p : d.maps[s].images) {
      if (!p.ring()->same_as(*d.algebra.ring)) throw Error(Errc::ShapeMismatch, "image outside the algebra's ring");
    }
  }
}

}  // namespace

template <class K>
AffineAlgebra<K> make_algebra(RingPtr<K> ring, std::vector<MultiPoly<K>> relations) {
  Ideal<K> rel = make_ideal(ring, std::move(relations));
  return AffineAlgebra<K>{std::move(ring), std::move(rel)};
}

template <class K>
std::vector<MultiPoly<K>> compose_images(const Automorphism<K>& s, const std::vector<MultiPoly<K>>& outer,
                                         const std::vector<MultiPoly<K>>& inner) {
  std::vector<MultiPoly<K>> out;
  for (const auto& p : inner) out.push_back(twist(s, outer, p, p.ring()));
  return out;
}

template <class K>
VerificationReport validate_datum(const AffineDescentDatum<K>& d) {
  check_datum_shape(d);
  const auto& g = d.group;
  const auto& ring = d.algebra.ring;
  const std::size_t budget = kDefaultReductionBudget;
  VerificationReport report;
  const auto gb = relation_basis(d.algebra, budget);
  if (gb.is_unit()) report.add("relations generate the unit ideal (empty scheme)");
  const auto xs = variables(ring);

  for (std::size_t s = 0; s < g.order(); ++s) {
    for (const auto& rel : d.algebra.relations.gens) {
      auto nf = normal_form(twist(g[s], d.images(s), rel, ring), gb, budget);
      if (!nf.is_zero()) {
        throw Error(Errc::NotWellDefined, "theta_" + g[s].name() + " maps " + to_string(rel) + " to " +
                                              to_string(nf) + " modulo the relations");
      }
    }
  }
  report.add("every theta_s preserves the relations");

  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!vanishes(d.images(0)[i] - xs[i], gb, budget)) {
      throw Error(Errc::CocycleViolation, "(id, id): theta_id(" + ring->vars[i] + ") = " +
                                              to_string(d.images(0)[i]));
    }
  }
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (std::size_t u = 0; u < g.order(); ++u) {
      auto comp = compose_images(g[s], d.images(s), d.images(u));
      const auto& expect = d.images(g.compose(s, u));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!vanishes(comp[i] - expect[i], gb, budget)) {
          throw Error(Errc::CocycleViolation, "(" + g[s].name() + ", " + g[u].name() + ") at " + ring->vars[i] +
                                                  ": " + to_string(comp[i]) + " != " + to_string(expect[i]));
        }
      }
    }
  }
  report.add("theta_s o theta_u = theta_su for all " + std::to_string(g.order() * g.order()) + " pairs");

  for (std::size_t s = 0; s < g.order(); ++s) {
    auto comp = compose_images(g[s], d.images(s), d.images(g.inverse(s)));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!vanishes(comp[i] - xs[i], gb, budget)) {
        throw Error(Errc::NotInvertible, "theta_" + g[s].name() + " has no inverse at " + ring->vars[i]);
      }
    }
  }
  report.add("every theta_s is invertible");
  return report;
}

template <class K>
Model<K> descend_algebra(const AffineDescentDatum<K>& d, std::size_t budget) {
  validate_datum(d);
  const auto& g = d.group;
  if (!g.is_full()) {
    throw Error(Errc::InvalidArgument, "descent needs the full group of " + g.field()->name() + ", got " +
                                           std::to_string(g.order()) + " elements");
  }
  const auto& omega = g.field();
  const auto& ring = d.algebra.ring;
  const std::size_t n = omega->degree();
  const std::size_t m = ring->nvars();
  const auto gb = relation_basis(d.algebra, budget);

  std::vector<Elem<K>> tpow{omega->one()};
  for (std::size_t j = 1; j < n; ++j) tpow.push_back(tpow.back() * omega->gen());

  // Invariant generators t_ij = sum_s s(t^j) theta_s(x_i).
  std::vector<MultiPoly<K>> inv;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly<K> acc(ring);
      for (std::size_t s = 0; s < g.order(); ++s) acc += d.images(s)[i].scaled(g[s](tpow[j]));
      inv.push_back(acc);
    }
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t k = 0; k < inv.size(); ++k) {
      if (!vanishes(twist(g[s], d.images(s), inv[k], ring) - inv[k], gb, budget)) {
        throw Error(Errc::SplittingCheckFailed, "invariant " + to_string(inv[k]) + " moved by " + g[s].name());
      }
    }

  std::string prefix = "T";
  auto tname = [&](std::size_t i, std::size_t j) { return prefix + std::to_string(i + 1) + "_" + std::to_string(j); };
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t i = 0; i < m && !clash; ++i)
      for (std::size_t j = 0; j < n && !clash; ++j) clash = ring->index_of(tname(i, j)).has_value();
    if (clash) prefix += "T";
  }
  std::vector<std::string> tnames;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) tnames.push_back(tname(i, j));
  const std::size_t r = tnames.size();
  auto kring = make_ring(omega->base_field(), tnames);
  auto split_ring = make_ring(omega, tnames);

  // Graph ideal I + (T - t) in Omega[x, T], then eliminate x.
  auto comb = combined_ring(omega, m, r);
  const auto xpos = positions(m, 0);
  const auto tpos = positions(r, m);
  Ideal<K> graph{comb, {}};
  for (const auto& rel : d.algebra.relations.gens) graph.gens.push_back(map_variables(rel, comb, xpos));
  for (std::size_t k = 0; k < r; ++k) {
    graph.gens.push_back(MultiPoly<K>::variable(comb, m + k) - map_variables(inv[k], comb, xpos));
  }
  std::vector<std::string> keep(comb->vars.begin() + static_cast<std::ptrdiff_t>(m), comb->vars.end());
  Ideal<K> j_omega = eliminate(graph, keep, budget);
  Ideal<K> j_omega_t{split_ring, {}};
  for (const auto& p : j_omega.gens) j_omega_t.gens.push_back(map_variables(p, split_ring, positions(r, 0)));

  Ideal<K> j_k{kring, {}};
  for (const auto& p : j_omega_t.gens)
    for (auto& c : components(p, kring)) {
      if (!c.is_zero()) j_k.gens.push_back(std::move(c));
    }
  Ideal<K> j_k_ext{split_ring, {}};
  for (const auto& p : j_k.gens) j_k_ext.gens.push_back(change_ring(p, split_ring));
  if (!ideal_equal(j_k_ext, j_omega_t, budget)) {
    throw Error(Errc::SplittingCheckFailed, "k-components do not regenerate the Omega-kernel");
  }
  auto j_red = buchberger(j_k, MonomialOrder::grevlex(), budget);

  // x_i = sum_j (D^-1)_{id, j} t_ij with D_{j, s} = s(t^j).
  Matrix<Elem<K>> dm(n, g.order(), omega->zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < g.order(); ++s) dm(j, s) = g[s](tpow[j]);
  auto dinv = inverse(dm);
  if (!dinv) throw Error(Errc::SplittingCheckFailed, "twisted basis matrix is singular");
  std::vector<MultiPoly<K>> back;
  for (std::size_t i = 0; i < m; ++i) {
    MultiPoly<K> acc(split_ring);
    for (std::size_t j = 0; j < n; ++j) {
      acc += MultiPoly<K>::variable(split_ring, i * n + j).scaled((*dinv)(GaloisGroup<K>::kIdentity, j));
    }
    back.push_back(acc);
  }

  Ideal<K> other{comb, {}};
  for (const auto& p : j_red.polys) other.gens.push_back(map_variables(p, comb, tpos));
  for (std::size_t i = 0; i < m; ++i) {
    other.gens.push_back(MultiPoly<K>::variable(comb, i) - map_variables(back[i], comb, tpos));
  }
  if (!ideal_equal(graph, other, budget)) {
    throw Error(Errc::SplittingCheckFailed, "Omega (x) A0 -> A is not an isomorphism");
  }
  return Model<K>{make_algebra(kring, j_red.polys), split_ring, inv, back};
}

template <class K>
AffineDescentDatum<K> canonical_datum(const AffineAlgebra<K>& a0, const GaloisGroup<K>& group) {
  const auto& omega = group.field();
  if (a0.field()->degree() != 1 || !(a0.field()->base() == omega->base())) {
    throw Error(Errc::ShapeMismatch, a0.field()->name() + " is not the base field of " + omega->name());
  }
  auto ring = make_ring(omega, a0.ring->vars);
  std::vector<MultiPoly<K>> rel;
  for (const auto& p : a0.relations.gens) rel.push_back(change_ring(p, ring));
  AffineDescentDatum<K> d{make_algebra(ring, rel), group, {}};
  for (std::size_t s = 0; s < group.order(); ++s) d.maps.push_back({s, variables(ring)});
  return d;
}

template <class K>
Model<K> canonical_model(const AffineAlgebra<K>& a0, const GaloisGroup<K>& group) {
  auto d = canonical_datum(a0, group);
  auto split_ring = make_ring(group.field(), a0.ring->vars);
  return Model<K>{a0, split_ring, variables(d.algebra.ring), variables(split_ring)};
}

template <class K>
bool splits(const Model<K>& model, const AffineDescentDatum<K>& d, std::size_t budget) {
  check_datum_shape(d);
  const auto& g = d.group;
  const auto& ring = d.algebra.ring;
  const auto& omega = g.field();
  const std::size_t m = ring->nvars();
  const std::size_t r = model.algebra0.nvars();
  if (model.splitting.size() != r) throw Error(Errc::ShapeMismatch, "one splitting image per model variable");
  const auto gb = relation_basis(d.algebra, budget);

  // A0's relations must die in A.
  for (const auto& rel : model.algebra0.relations.gens) {
    if (!vanishes(substitute(rel, model.splitting, ring), gb, budget)) return false;
  }
  auto comb = combined_ring(omega, m, r);
  const auto xpos = positions(m, 0);
  const auto tpos = positions(r, m);
  Ideal<K> graph{comb, {}};
  for (const auto& rel : d.algebra.relations.gens) graph.gens.push_back(map_variables(rel, comb, xpos));
  for (std::size_t k = 0; k < r; ++k) {
    graph.gens.push_back(MultiPoly<K>::variable(comb, m + k) - map_variables(model.splitting[k], comb, xpos));
  }
  // psi(x_i) is the normal form of x_i for an order eliminating x.
  auto gbg = buchberger(graph, MonomialOrder::block(m), budget);
  std::vector<bool> t_only(m + r, false);
  for (std::size_t k = m; k < m + r; ++k) t_only[k] = true;
  std::vector<std::size_t> back_index(m + r, 0);
  for (std::size_t k = 0; k < r; ++k) back_index[m + k] = k;
  std::vector<MultiPoly<K>> psi;
  Ideal<K> other{comb, {}};
  for (const auto& rel : model.algebra0.relations.gens) other.gens.push_back(map_variables(rel, comb, tpos));
  for (std::size_t i = 0; i < m; ++i) {
    auto nf = normal_form(MultiPoly<K>::variable(comb, i), gbg, budget);
    if (!nf.uses_only(t_only)) return false;
    other.gens.push_back(MultiPoly<K>::variable(comb, i) - nf);
    psi.push_back(map_variables(nf, model.split_ring, back_index));
  }
  if (!ideal_equal(graph, other, budget)) return false;

  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t i = 0; i < m; ++i) {
      if (!vanishes(twist(g[s], model.splitting, psi[i], ring) - d.images(s)[i], gb, budget)) return false;
    }
  return true;
}

template <class K>
Ideal<K> descend_ideal(const Model<K>& model, const GaloisGroup<K>& group, const Ideal<K>& w, std::size_t budget) {
  if (!w.ring->same_as(*model.split_ring)) {
    throw Error(Errc::ShapeMismatch, "ideal must live in " + model.split_ring->name());
  }
  if (!group.is_full()) throw Error(Errc::InvalidArgument, "descent needs the full Galois group");
  const auto& omega = group.field();
  Ideal<K> full{w.ring, w.gens};
  for (const auto& p : model.algebra0.relations.gens) full.gens.push_back(change_ring(p, w.ring));
  auto gbw = buchberger(full, MonomialOrder::grevlex(), budget);
  for (auto s : group.generators()) {
    for (const auto& p : w.gens) {
      auto image = map_coefficients<K>(p, [&](const Elem<K>& c) { return group[s](c); });
      auto nf = normal_form(image, gbw, budget);
      if (!nf.is_zero()) {
        throw Error(Errc::NotStable, group[s].name() + " maps " + to_string(p) + " to " + to_string(image) +
                                         ", outside W (remainder " + to_string(nf) + ")");
      }
    }
  }
  const auto& kring = model.algebra0.ring;
  Ideal<K> i0{kring, model.algebra0.relations.gens};
  Elem<K> tj = omega->one();
  for (std::size_t j = 0; j < omega->degree(); ++j, tj *= omega->gen()) {
    for (const auto& p : w.gens) {
      MultiPoly<K> acc(w.ring);
      for (std::size_t s = 0; s < group.order(); ++s) {
        acc += map_coefficients<K>(p, [&](const Elem<K>& c) { return group[s](tj * c); });
      }
      if (!acc.has_base_coefficients()) {
        throw Error(Errc::InternalContradiction, "trace component " + to_string(acc) + " is not over k");
      }
      if (!acc.is_zero()) i0.gens.push_back(change_ring(acc, kring));
    }
  }
  auto red = buchberger(i0, MonomialOrder::grevlex(), budget);
  Ideal<K> out{kring, red.polys};
  Ideal<K> ext{w.ring, {}};
  for (const auto& p : out.gens) ext.gens.push_back(change_ring(p, w.ring));
  if (!ideal_equal(ext, full, budget)) throw Error(Errc::SplittingCheckFailed, "Omega * W0 != W");
  return out;
}

template <class K>
std::vector<MultiPoly<K>> descend_morphism(const AffineDescentDatum<K>& da, const Model<K>& ma,
                                           const AffineDescentDatum<K>& db, const Model<K>& mb,
                                           const std::vector<MultiPoly<K>>& alpha, std::size_t budget) {
  check_datum_shape(da);
  check_datum_shape(db);
  const auto& g = da.group;
  if (db.group.order() != g.order()) throw Error(Errc::ShapeMismatch, "data over different groups");
  const auto& ra = da.algebra.ring;
  const auto& rb = db.algebra.ring;
  if (alpha.size() != rb->nvars()) throw Error(Errc::ShapeMismatch, "one image per variable of the source");
  for (const auto& p : alpha) {
    if (!p.ring()->same_as(*ra)) throw Error(Errc::ShapeMismatch, "morphism images must live in " + ra->name());
  }
  const auto gba = relation_basis(da.algebra, budget);
  for (const auto& rel : db.algebra.relations.gens) {
    if (!vanishes(substitute(rel, alpha, ra), gba, budget)) {
      throw Error(Errc::NotWellDefined, "alpha does not respect " + to_string(rel));
    }
  }
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t l = 0; l < alpha.size(); ++l) {
      auto lhs = twist(g[s], da.images(s), alpha[l], ra);
      auto rhs = substitute(db.images(s)[l], alpha, ra);
      if (!vanishes(lhs - rhs, gba, budget)) {
        throw Error(Errc::NotEquivariant, "(" + g[s].name() + ", " + rb->vars[l] + "): " + to_string(lhs) +
                                              " != " + to_string(rhs));
      }
    }

  Ideal<K> ja{ma.split_ring, {}};
  for (const auto& p : ma.algebra0.relations.gens) ja.gens.push_back(change_ring(p, ma.split_ring));
  auto gbj = buchberger(ja, MonomialOrder::grevlex(), budget);
  std::vector<MultiPoly<K>> out;
  for (const auto& tb : mb.splitting) {
    auto in_a = substitute(tb, alpha, ra);
    auto in_a0 = normal_form(substitute(in_a, ma.inverse, ma.split_ring), gbj, budget);
    if (!in_a0.has_base_coefficients()) {
      throw Error(Errc::TransportNotRational, "transported image " + to_string(in_a0) + " is not over k");
    }
    out.push_back(change_ring(in_a0, ma.algebra0.ring));
  }

  std::vector<MultiPoly<K>> lifted;
  for (const auto& p : out) lifted.push_back(change_ring(p, ma.split_ring));
  for (std::size_t l = 0; l < alpha.size(); ++l) {
    auto via = substitute(substitute(mb.inverse[l], lifted, ma.split_ring), ma.splitting, ra);
    if (!vanishes(via - alpha[l], gba, budget)) {
      throw Error(Errc::InternalContradiction, "re-extended map differs from alpha at " + rb->vars[l]);
    }
  }
  return out;
}

template <class K>
AffineAlgebra<K> conjugate_algebra(const AffineAlgebra<K>& v, const FieldPtr<K>& omega, const Elem<K>& root) {
  std::vector<Elem<K>> rpow{omega->one()};
  for (std::size_t j = 1; j < v.field()->degree(); ++j) rpow.push_back(rpow.back() * root);
  auto embed = [&](const Elem<K>& c) {
    Elem<K> acc = omega->zero();
    for (std::size_t j = 0; j < rpow.size(); ++j) acc += rpow[j].scaled(c.coeff(j));
    return acc;
  };
  auto ring = make_ring(omega, v.ring->vars);
  std::vector<MultiPoly<K>> rel;
  for (const auto& p : v.relations.gens) {
    MultiPoly<K> q(ring);
    for (const auto& [mono, c] : p.terms()) q.add_term(mono, embed(c));
    rel.push_back(q);
  }
  return make_algebra(ring, rel);
}

template <class K>
EmbeddingDescent<K> descend_from_embeddings(const AffineAlgebra<K>& v, const GaloisGroup<K>& group,
                                            const EmbeddingFamily<K>& fam, std::size_t budget) {
  const auto& omega = group.field();
  const std::size_t e = fam.roots.size();
  if (e == 0) throw Error(Errc::InvalidArgument, "at least one embedding is required");
  for (const auto& r : fam.roots) {
    check_field(r.field(), omega, "embedding root");
    Elem<K> val = omega->zero();
    const auto& f = v.field()->modulus().coeffs();
    for (std::size_t j = f.size(); j-- > 0;) val = val * r + omega->from_base(f[j]);
    if (!val.is_zero()) {
      throw Error(Errc::NotARoot, to_string(r) + " is not a root of " + to_string(v.field()->modulus()));
    }
  }
  if (fam.phi.size() != e) throw Error(Errc::ShapeMismatch, "phi must be an e x e family");
  std::vector<AffineAlgebra<K>> conj;
  std::vector<GroebnerBasis<K>> gbs;
  for (const auto& r : fam.roots) {
    conj.push_back(conjugate_algebra(v, omega, r));
    gbs.push_back(relation_basis(conj.back(), budget));
  }
  const auto& ring = conj[0].ring;
  const std::size_t m = ring->nvars();
  auto label = [](std::size_t a) { return "e" + std::to_string(a); };
  for (std::size_t a = 0; a < e; ++a) {
    if (fam.phi[a].size() != e) throw Error(Errc::ShapeMismatch, "phi must be an e x e family");
    for (std::size_t b = 0; b < e; ++b) {
      if (fam.phi[a][b].size() != m) throw Error(Errc::ShapeMismatch, "one phi image per variable");
      for (const auto& rel : conj[a].relations.gens) {
        if (!vanishes(substitute(rel, fam.phi[a][b], ring), gbs[b], budget)) {
          throw Error(Errc::NotWellDefined, "phi_{" + label(a) + "," + label(b) + "} does not respect " +
                                                to_string(rel));
        }
      }
    }
  }
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b)
      for (std::size_t c = 0; c < e; ++c)
        for (std::size_t i = 0; i < m; ++i) {
          auto comp = substitute(fam.phi[a][b][i], fam.phi[b][c], ring);
          if (!vanishes(comp - fam.phi[a][c][i], gbs[c], budget)) {
            throw Error(Errc::ConditionAViolated, "(" + label(a) + ", " + label(b) + ", " + label(c) + ") at " +
                                                      ring->vars[i]);
          }
        }
  // w . a: the embedding w o a.
  std::vector<std::vector<std::size_t>> act(group.order(), std::vector<std::size_t>(e));
  for (std::size_t w = 0; w < group.order(); ++w)
    for (std::size_t a = 0; a < e; ++a) {
      const Elem<K> img = group[w](fam.roots[a]);
      std::size_t found = e;
      for (std::size_t b = 0; b < e; ++b) {
        if (fam.roots[b] == img) found = b;
      }
      if (found == e) throw Error(Errc::InvalidArgument, "embeddings are not permuted by " + group[w].name());
      act[w][a] = found;
    }
  for (std::size_t w = 0; w < group.order(); ++w)
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t b = 0; b < e; ++b)
        for (std::size_t i = 0; i < m; ++i) {
          auto moved = map_coefficients<K>(fam.phi[a][b][i], [&](const Elem<K>& c) { return group[w](c); });
          if (!vanishes(moved - fam.phi[act[w][a]][act[w][b]][i], gbs[act[w][b]], budget)) {
            throw Error(Errc::ConditionBViolated, "(" + label(a) + ", " + label(b) + ", " + group[w].name() +
                                                      ") at " + ring->vars[i]);
          }
        }
  AffineDescentDatum<K> d{conj[0], group, {}};
  for (std::size_t w = 0; w < group.order(); ++w) d.maps.push_back({w, fam.phi[act[w][0]][0]});
  Model<K> model = descend_algebra(d, budget);
  return EmbeddingDescent<K>{std::move(d), std::move(model)};
}

template <class K>
std::vector<std::size_t> PointAction<K>::fixed_points() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    bool fixed = true;
    for (const auto& row : perm) fixed = fixed && row[p] == p;
    if (fixed) out.push_back(p);
  }
  return out;
}

template <class K>
PointAction<K> derive_point_action(const AffineDescentDatum<K>& d, std::size_t budget) {
  const auto& omega = d.group.field();
  if (!omega->is_finite()) throw Error(Errc::NotFiniteBase, omega->name() + " is not finite");
  validate_datum(d);
  const auto& g = d.group;
  PointAction<K> act;
  act.points = enumerate_points(d.algebra.relations.gens, d.algebra.nvars(), omega, budget);
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  auto key = [](const std::vector<Elem<K>>& pt) {
    std::vector<std::uint64_t> k;
    for (const auto& c : pt) k.push_back(c.index());
    return k;
  };
  for (std::size_t p = 0; p < act.points.size(); ++p) index[key(act.points[p])] = p;
  for (std::size_t s = 0; s < g.order(); ++s) {
    const auto& inv_images = d.images(g.inverse(s));
    std::vector<std::size_t> row;
    for (const auto& pt : act.points) {
      std::vector<Elem<K>> image;
      for (const auto& q : inv_images) image.push_back(g[s](evaluate(q, pt)));
      auto it = index.find(key(image));
      if (it == index.end()) throw Error(Errc::InternalContradiction, g[s].name() + " moves a point off V");
      row.push_back(it->second);
    }
    act.perm.push_back(std::move(row));
  }
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t p = 0; p < act.points.size(); ++p) {
        if (act.perm[g.compose(s, u)][p] != act.perm[s][act.perm[u][p]]) {
          throw Error(Errc::InternalContradiction, "point action fails the composition law at (" + g[s].name() +
                                                       ", " + g[u].name() + ")");
        }
      }
  return act;
}

#define GALDESC_INSTANTIATE(K)                                                                                 \
  template AffineAlgebra<K> make_algebra(RingPtr<K>, std::vector<MultiPoly<K>>);                              \
  template std::vector<MultiPoly<K>> compose_images(const Automorphism<K>&, const std::vector<MultiPoly<K>>&, \
                                                    const std::vector<MultiPoly<K>>&);                        \
  template VerificationReport validate_datum(const AffineDescentDatum<K>&);                                   \
  template Model<K> descend_algebra(const AffineDescentDatum<K>&, std::size_t);                               \
  template AffineDescentDatum<K> canonical_datum(const AffineAlgebra<K>&, const GaloisGroup<K>&);             \
  template Model<K> canonical_model(const AffineAlgebra<K>&, const GaloisGroup<K>&);                          \
  template bool splits(const Model<K>&, const AffineDescentDatum<K>&, std::size_t);                           \
  template Ideal<K> descend_ideal(const Model<K>&, const GaloisGroup<K>&, const Ideal<K>&, std::size_t);      \
  template std::vector<MultiPoly<K>> descend_morphism(const AffineDescentDatum<K>&, const Model<K>&,          \
                                                      const AffineDescentDatum<K>&, const Model<K>&,          \
                                                      const std::vector<MultiPoly<K>>&, std::size_t);         \
  template AffineAlgebra<K> conjugate_algebra(const AffineAlgebra<K>&, const FieldPtr<K>&, const Elem<K>&);   \
  template EmbeddingDescent<K> descend_from_embeddings(const AffineAlgebra<K>&, const GaloisGroup<K>&,        \
                                                       const EmbeddingFamily<K>&, std::size_t);               \
  template struct PointAction<K>;                                                                             \
  template PointAction<K> derive_point_action(const AffineDescentDatum<K>&, std::size_t);

GALDESC_INSTANTIATE(Rational)
GALDESC_INSTANTIATE(Zp)

}  // namespace galdesc
