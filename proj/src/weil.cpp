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

#include "galdesc/weil.hpp"

namespace galdesc {

namespace {

template <class K>
Elem<K> eval_upoly(const UPoly<K>& f, const Elem<K>& at) {
  Elem<K> acc = at.field()->zero();
  for (std::size_t j = f.coeffs().size(); j-- > 0;) acc = acc * at + at.field()->from_base(f.coeffs()[j]);
  return acc;
}

template <class K>
bool separable(const UPoly<K>& f) {
  return gcd(f, f.derivative()).degree() == 0;
}

// Elements of K (x) L = L[x]/(f) as coefficient vectors of length d.
template <class K>
class Tensor {
 public:
  Tensor(const UPoly<K>& f, FieldPtr<K> l) : l_(std::move(l)) {
    for (const auto& c : f.coeffs()) f_.push_back(l_->from_base(c));
    d_ = f_.size() - 1;
  }

  std::size_t degree() const { return d_; }
  std::vector<Elem<K>> zero() const { return std::vector<Elem<K>>(d_, l_->zero()); }
  std::vector<Elem<K>> one() const {
    auto z = zero();
    z[0] = l_->one();
    return z;
  }
  /// K -> K (x) L, c |-> c (x) 1.
  std::vector<Elem<K>> from_k_ext(const Elem<K>& c) const {
    std::vector<Elem<K>> z;
    for (std::size_t j = 0; j < d_; ++j) z.push_back(l_->from_base(c.coeff(j)));
    return z;
  }
  std::vector<Elem<K>> mul(const std::vector<Elem<K>>& a, const std::vector<Elem<K>>& b) const {
    std::vector<Elem<K>> r(2 * d_ - 1, l_->zero());
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < d_; ++j) r[i + j] += a[i] * b[j];
    }
    for (std::size_t k = r.size(); k-- > d_;) {
      const Elem<K> c = r[k];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < d_; ++j) r[k - d_ + j] -= c * f_[j];
    }
    r.resize(d_);
    return r;
  }
  static void add_to(std::vector<Elem<K>>& a, const std::vector<Elem<K>>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }
  static bool is_zero(const std::vector<Elem<K>>& a) {
    for (const auto& x : a) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

 private:
  FieldPtr<K> l_;
  std::vector<Elem<K>> f_;
  std::size_t d_;
};

// Value of a K-polynomial at a point of (K (x) L)^m.
template <class K>
std::vector<Elem<K>> eval_tensor(const Tensor<K>& ten, const MultiPoly<K>& g,
                                 const std::vector<std::vector<Elem<K>>>& pt) {
  auto acc = ten.zero();
  for (const auto& [mono, c] : g.terms()) {
    auto term = ten.from_k_ext(c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (int e = 0; e < mono[i]; ++e) term = ten.mul(term, pt[i]);
    Tensor<K>::add_to(acc, term);
  }
  return acc;
}

template <class K>
std::string point_string(const std::vector<Elem<K>>& flat) {
  std::string s = "(";
  for (std::size_t i = 0; i < flat.size(); ++i) s += (i ? ", " : "") + to_string(flat[i]);
  return s + ")";
}

// Returns (#R-points, #V-points) among the candidates; throws on disagreement.
template <class K>
std::pair<std::size_t, std::size_t> compare_on(const AffineAlgebra<K>& v, const RestrictionResult<K>& r,
                                               const FieldPtr<K>& l,
                                               const std::function<bool(std::vector<Elem<K>>&)>& next) {
  const std::size_t d = v.field()->degree();
  const std::size_t m = v.nvars();
  Tensor<K> ten(v.field()->modulus(), l);
  std::size_t nr = 0, nv = 0;
  std::vector<Elem<K>> flat;
  while (next(flat)) {
    bool in_r = true;
    for (const auto& g : r.restricted.relations.gens) {
      if (!evaluate(g, flat).is_zero()) {
        in_r = false;
        break;
      }
    }
    std::vector<std::vector<Elem<K>>> pt(m);
    for (std::size_t i = 0; i < m; ++i) pt[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * d),
                                                     flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
    bool in_v = true;
    for (const auto& g : v.relations.gens) {
      if (!Tensor<K>::is_zero(eval_tensor(ten, g, pt))) {
        in_v = false;
        break;
      }
    }
    if (in_r != in_v) {
      throw Error(Errc::MismatchFound, point_string(flat) + " over " + l->name() + (in_r ? " is" : " is not") +
                                           " a point of the restriction but" + (in_v ? " is" : " is not") +
                                           " a point of V");
    }
    nr += in_r;
    nv += in_v;
  }
  return {nr, nv};
}

}  // namespace

template <class K>
SeparableExtensionData<K> make_separable_data(FieldPtr<K> ext, FieldPtr<K> omega, std::vector<Elem<K>> embeddings) {
  if (!separable(ext->modulus())) {
    throw Error(Errc::NotSeparable, to_string(ext->modulus()) + " has a repeated root");
  }
  if (!(ext->base() == omega->base())) throw Error(Errc::CharacteristicMismatch, ext->name() + " vs " + omega->name());
  if (embeddings.size() != ext->degree()) {
    throw Error(Errc::InvalidArgument, "need " + std::to_string(ext->degree()) + " embeddings, got " +
                                           std::to_string(embeddings.size()));
  }
  for (std::size_t a = 0; a < embeddings.size(); ++a) {
    if (!embeddings[a].field()->same_as(*omega)) throw Error(Errc::ShapeMismatch, "embedding outside " + omega->name());
    if (!eval_upoly(ext->modulus(), embeddings[a]).is_zero()) {
      throw Error(Errc::NotARoot, to_string(embeddings[a]) + " is not a root of " + to_string(ext->modulus()));
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (embeddings[a] == embeddings[b]) throw Error(Errc::NotSeparable, "repeated embedding " + to_string(embeddings[a]));
    }
  }
  return SeparableExtensionData<K>{std::move(ext), std::move(omega), std::move(embeddings)};
}

template <class K>
std::vector<Elem<K>> find_embeddings(const FieldPtr<K>& ext, const FieldPtr<K>& omega) {
  std::vector<Elem<K>> roots;
  for (const auto& e : field_elements(omega)) {
    if (eval_upoly(ext->modulus(), e).is_zero()) roots.push_back(e);
  }
  return roots;
}

template <class K>
RestrictionResult<K> weil_restrict(const AffineAlgebra<K>& v, const SeparableExtensionData<K>& data) {
  const auto& ext = data.ext;
  if (!v.field()->same_as(*ext)) throw Error(Errc::ShapeMismatch, "V must be over " + ext->name());
  if (!separable(ext->modulus())) throw Error(Errc::NotSeparable, to_string(ext->modulus()) + " has a repeated root");
  const std::size_t d = ext->degree();
  std::vector<std::string> names;
  for (const auto& x : v.ring->vars)
    for (std::size_t j = 0; j < d; ++j) names.push_back(x + "_" + std::to_string(j));
  auto kring = make_ring(ext->base_field(), names);
  auto expanded = make_ring(ext, names);
  std::vector<MultiPoly<K>> subst;
  for (std::size_t i = 0; i < v.nvars(); ++i) {
    MultiPoly<K> s(expanded);
    Elem<K> xj = ext->one();
    for (std::size_t j = 0; j < d; ++j, xj *= ext->gen()) s += MultiPoly<K>::variable(expanded, i * d + j).scaled(xj);
    subst.push_back(s);
  }
  std::vector<MultiPoly<K>> rel;
  for (const auto& g : v.relations.gens) {
    auto comps = components(substitute(g, subst, expanded), kring);
    rel.insert(rel.end(), comps.begin(), comps.end());
  }
  return RestrictionResult<K>{make_algebra(kring, rel), expanded, subst};
}

template <class K>
VerificationReport verify_universal_points(const AffineAlgebra<K>& v, const RestrictionResult<K>& r,
                                           const TestAlgebra<K>& a, std::size_t budget) {
  VerificationReport report;
  const std::size_t coords = v.nvars() * v.field()->degree();
  mpz_class total_r = 1, total_v = 1;
  for (std::size_t f = 0; f < a.factors.size(); ++f) {
    const auto& l = a.factors[f];
    if (!(l->base() == v.field()->base())) throw Error(Errc::CharacteristicMismatch, l->name());
    std::pair<std::size_t, std::size_t> counts;
    std::string mode;
    if (l->is_finite()) {
      const auto elems = field_elements(l);
      double size = 1;
      for (std::size_t i = 0; i < coords; ++i) size *= static_cast<double>(elems.size());
      if (size > static_cast<double>(budget)) {
        throw Error(Errc::BudgetExceeded, l->name() + "^" + std::to_string(coords) + " exceeds the point budget");
      }
      std::vector<std::size_t> idx(coords, 0);
      bool first = true, done = false;
      counts = compare_on<K>(v, r, l, [&](std::vector<Elem<K>>& flat) {
        if (done) return false;
        if (!first) {
          std::size_t k = 0;
          while (k < coords && ++idx[k] == elems.size()) idx[k++] = 0;
          if (k == coords) {
            done = true;
            return false;
          }
        }
        first = false;
        flat.clear();
        for (auto i : idx) flat.push_back(elems[i]);
        return true;
      });
      mode = "exhaustive";
    } else {
      if (f >= a.samples.size()) throw Error(Errc::InvalidArgument, "infinite factor " + l->name() + " needs samples");
      std::size_t next = 0;
      const auto& samples = a.samples[f];
      for (const auto& s : samples) {
        if (s.size() != coords) throw Error(Errc::ShapeMismatch, "sample point has the wrong length");
      }
      counts = compare_on<K>(v, r, l, [&](std::vector<Elem<K>>& flat) {
        if (next == samples.size()) return false;
        flat = samples[next++];
        return true;
      });
      mode = "sampled, " + std::to_string(samples.size()) + " candidates";
    }
    total_r *= counts.first;
    total_v *= counts.second;
    report.add("factor " + l->name() + ": R has " + std::to_string(counts.first) + " points, V over K (x) " +
               l->name() + " has " + std::to_string(counts.second) + " (" + mode + ")");
  }
  report.add("A-points: " + total_r.get_str() + " == " + total_v.get_str());
  return report;
}

template <class K>
EtaleSplitting<K> etale_splitting(const SeparableExtensionData<K>& data) {
  const auto& omega = data.omega;
  const std::size_t d = data.degree();
  const std::size_t n = omega->degree();
  Tensor<K> ten(data.ext->modulus(), omega);
  EtaleSplitting<K> out;
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<Elem<K>> e = ten.one();
    Elem<K> denom = omega->one();
    for (std::size_t u = 0; u < d; ++u) {
      if (u == s) continue;
      auto lin = ten.zero();
      if (d > 1) lin[1] = omega->one();
      lin[0] = -data.embeddings[u];
      // d == 1 never reaches here.
      e = ten.mul(e, lin);
      denom *= data.embeddings[s] - data.embeddings[u];
    }
    if (denom.is_zero()) throw Error(Errc::NotSeparable, "two embeddings coincide");
    const Elem<K> inv = denom.inverse();
    for (auto& c : e) c *= inv;
    out.idempotents.push_back(e);
  }

  // Structure constants of K (x) Omega on the k-basis x^a t^c (index a n + c).
  const std::size_t dim = d * n;
  auto basis = [&](std::size_t idx) {
    auto z = ten.zero();
    std::vector<K> c(n, omega->base_zero());
    c[idx % n] = omega->base_one();
    z[idx / n] = omega->from_coeffs(c);
    return z;
  };
  auto coords = [&](const std::vector<Elem<K>>& z) {
    std::vector<K> v;
    for (const auto& c : z) v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
    return v;
  };
  std::vector<Matrix<K>> left;  // left[u] column w = coords(b_u b_w)
  for (std::size_t u = 0; u < dim; ++u) {
    Matrix<K> m(dim, dim, omega->base_zero());
    for (std::size_t w = 0; w < dim; ++w) {
      auto col = coords(ten.mul(basis(u), basis(w)));
      for (std::size_t i = 0; i < dim; ++i) m(i, w) = col[i];
    }
    left.push_back(std::move(m));
  }
  auto left_of = [&](const std::vector<K>& z) {
    Matrix<K> m(dim, dim, omega->base_zero());
    for (std::size_t u = 0; u < dim; ++u) {
      if (!is_zero(z[u])) m = m + z[u] * left[u];
    }
    return m;
  };
  std::vector<K> sum(dim, omega->base_zero());
  for (std::size_t s = 0; s < d; ++s) {
    const auto es = coords(out.idempotents[s]);
    const auto ls = left_of(es);
    for (std::size_t u = 0; u < d; ++u) {
      const auto eu = Matrix<K>::column_vector(coords(out.idempotents[u]), omega->base_zero());
      const auto prod = (ls * eu).column(0);
      const bool ok = u == s ? prod == es : Matrix<K>::column_vector(prod, omega->base_zero()).is_zero();
      if (!ok) throw Error(Errc::InternalContradiction, "idempotents fail e_s e_u = delta e_s");
    }
    if (rank(ls) != n) throw Error(Errc::InternalContradiction, "e_s (K (x) Omega) is not of Omega-dimension 1");
    for (std::size_t i = 0; i < dim; ++i) sum[i] += es[i];
  }
  std::vector<K> unit(dim, omega->base_zero());
  unit[0] = omega->base_one();
  if (sum != unit) throw Error(Errc::InternalContradiction, "idempotents do not sum to 1");
  out.report.add(std::to_string(d) + " orthogonal idempotents in the " + std::to_string(dim) +
                 "-dimensional algebra K (x) " + omega->name());
  out.report.add("e_s e_u = delta_su e_s, sum e_s = 1, each e_s of rank " + std::to_string(n));
  return out;
}

template <class K>
VerificationReport conjugate_product_check(const AffineAlgebra<K>& v, const RestrictionResult<K>& r,
                                           const SeparableExtensionData<K>& data, std::size_t budget) {
  const auto& omega = data.omega;
  if (!omega->is_finite()) throw Error(Errc::NotFiniteBase, omega->name() + " is not finite");
  VerificationReport report;
  const auto nr = count_points(r.restricted.relations.gens, r.restricted.nvars(), omega, budget);
  mpz_class product = 1;
  std::string factors;
  for (const auto& root : data.embeddings) {
    auto conj = conjugate_algebra(v, omega, root);
    const auto c = count_points(conj.relations.gens, conj.nvars(), omega, budget);
    product *= c;
    factors += (factors.empty() ? "" : " * ") + std::to_string(c);
  }
  if (product != nr) {
    throw Error(Errc::CountMismatch, "#R(" + omega->name() + ") = " + std::to_string(nr) + " but the conjugates give " +
                                         factors + " = " + product.get_str());
  }
  report.add("#R(" + omega->name() + ") = " + std::to_string(nr) + " = " + factors);
  return report;
}

template <class K>
MultiPoly<K> norm_polynomial(const SeparableExtensionData<K>& data, const RingPtr<K>& ring,
                             const std::vector<std::size_t>& vars) {
  if (vars.size() != data.degree()) throw Error(Errc::ShapeMismatch, "one variable per basis element");
  auto oring = make_ring(data.omega, ring->vars);
  MultiPoly<K> prod = MultiPoly<K>::from_int(oring, 1);
  for (const auto& root : data.embeddings) {
    MultiPoly<K> lin(oring);
    Elem<K> rj = data.omega->one();
    for (std::size_t j = 0; j < vars.size(); ++j, rj *= root) lin += MultiPoly<K>::variable(oring, vars[j]).scaled(rj);
    prod = prod * lin;
  }
  if (!prod.has_base_coefficients()) throw Error(Errc::InternalContradiction, "norm form is not over k");
  return change_ring(prod, ring);
}

#define GALDESC_INSTANTIATE(K)                                                                                  \
  template SeparableExtensionData<K> make_separable_data(FieldPtr<K>, FieldPtr<K>, std::vector<Elem<K>>);      \
  template std::vector<Elem<K>> find_embeddings(const FieldPtr<K>&, const FieldPtr<K>&);                       \
  template RestrictionResult<K> weil_restrict(const AffineAlgebra<K>&, const SeparableExtensionData<K>&);      \
  template VerificationReport verify_universal_points(const AffineAlgebra<K>&, const RestrictionResult<K>&,    \
                                                      const TestAlgebra<K>&, std::size_t);                     \
  template EtaleSplitting<K> etale_splitting(const SeparableExtensionData<K>&);                                \
  template VerificationReport conjugate_product_check(const AffineAlgebra<K>&, const RestrictionResult<K>&,    \
                                                      const SeparableExtensionData<K>&, std::size_t);          \
  template MultiPoly<K> norm_polynomial(const SeparableExtensionData<K>&, const RingPtr<K>&,                   \
                                        const std::vector<std::size_t>&);

GALDESC_INSTANTIATE(Rational)
GALDESC_INSTANTIATE(Zp)

}  // namespace galdesc
