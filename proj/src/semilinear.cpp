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

#include "galdesc/semilinear.hpp"

namespace galdesc {

namespace {

template <class K>
std::string vec_string(const OmegaVector<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

template <class K>
Matrix<Elem<K>> as_columns(const std::vector<OmegaVector<K>>& vs, std::size_t n, const FieldPtr<K>& f) {
  return from_columns(vs, n, f->zero());
}

}  // namespace

template <class K>
SemilinearModule<K>::SemilinearModule(GaloisGroup<K> group, std::size_t dim, std::vector<Matrix<Elem<K>>> cocycle)
    : group_(std::move(group)), dim_(dim), cocycle_(std::move(cocycle)) {
  if (cocycle_.size() != group_.order()) {
    throw Error(Errc::ShapeMismatch, "one matrix per group element is required");
  }
  for (const auto& c : cocycle_) {
    if (c.rows() != dim_ || c.cols() != dim_) throw Error(Errc::ShapeMismatch, "cocycle matrix " + c.shape());
  }
}

template <class K>
OmegaVector<K> SemilinearModule<K>::act(std::size_t s, const OmegaVector<K>& v) const {
  Matrix<Elem<K>> col = Matrix<Elem<K>>::column_vector(group_[s](v), field()->zero());
  return (cocycle_[s] * col).column(0);
}

template <class K>
Matrix<K> SemilinearModule<K>::action_matrix(std::size_t s) const {
  const Matrix<K> id = Matrix<K>::identity(dim_, field()->base_zero());
  return restrict_scalars_matrix(cocycle_[s], field()) * kronecker(id, group_[s].matrix());
}

template <class K>
VerificationReport validate_action(const SemilinearModule<K>& m) {
  const auto& g = m.group();
  VerificationReport report;
  const auto id = Matrix<Elem<K>>::identity(m.dim(), m.field()->zero());
  if (!(m.cocycle(GaloisGroup<K>::kIdentity) == id)) {
    throw Error(Errc::IdentityNotTrivial, "c_id = " + to_string(m.cocycle(0)));
  }
  report.add("c_id = I");
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (!is_invertible(m.cocycle(s))) throw Error(Errc::SingularMatrix, "c_" + g[s].name() + " is singular");
  }
  report.add("all c_s invertible");
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (std::size_t t = 0; t < g.order(); ++t) {
      Matrix<Elem<K>> rhs = m.cocycle(s) * g[s](m.cocycle(t));
      if (!(m.cocycle(g.compose(s, t)) == rhs)) {
        throw Error(Errc::CocycleViolation, "(" + g[s].name() + ", " + g[t].name() + "): c_st = " +
                                                to_string(m.cocycle(g.compose(s, t))) + " but c_s s(c_t) = " +
                                                to_string(rhs));
      }
    }
  }
  report.add("c_st = c_s s(c_t) for all " + std::to_string(g.order() * g.order()) + " pairs");
  return report;
}

template <class K>
KSpace<K> fixed_subspace(const SemilinearModule<K>& m) {
  const auto& f = m.field();
  const std::size_t nk = m.dim() * f->degree();
  Matrix<K> stacked(0, nk, f->base_zero());
  const Matrix<K> id = Matrix<K>::identity(nk, f->base_zero());
  for (auto s : m.group().generators()) stacked = vstack(stacked, m.action_matrix(s) - id);
  Matrix<K> ker = kernel(stacked);
  if (ker.cols() != m.dim()) {
    throw Error(Errc::InternalContradiction, "fixed subspace has k-dimension " + std::to_string(ker.cols()) +
                                                 " for a module of dimension " + std::to_string(m.dim()));
  }
  std::vector<OmegaVector<K>> basis;
  for (std::size_t j = 0; j < ker.cols(); ++j) basis.push_back(unflatten(ker.column(j), f));
  if (m.dim() > 0 && rank(as_columns(basis, m.dim(), f)) != m.dim()) {
    throw Error(Errc::InternalContradiction, "fixed basis is not Omega-independent");
  }
  return KSpace<K>{f->base(), m.dim(), std::move(basis)};
}

template <class K>
SemilinearModule<K> extend_scalars(const KSpace<K>& w, const GaloisGroup<K>& group) {
  std::vector<Matrix<Elem<K>>> c(group.order(), Matrix<Elem<K>>::identity(w.dim, group.field()->zero()));
  return SemilinearModule<K>(group, w.dim, std::move(c));
}

template <class K>
Matrix<Elem<K>> counit_check(const SemilinearModule<K>& m) {
  KSpace<K> fixed = fixed_subspace(m);
  Matrix<Elem<K>> p = as_columns(*fixed.embedding, m.dim(), m.field());
  if (!is_invertible(p)) throw Error(Errc::InternalContradiction, "Omega (x) M^Gamma -> M is not bijective");
  return p;
}

template <class K>
KSpace<K> descend_subspace(const SemilinearModule<K>& m, const std::vector<OmegaVector<K>>& w) {
  const auto& f = m.field();
  const std::size_t n = m.dim();
  for (const auto& v : w) {
    if (v.size() != n) throw Error(Errc::ShapeMismatch, "spanning vector of length " + std::to_string(v.size()));
  }
  Matrix<Elem<K>> wm = as_columns(w, n, f);
  const std::size_t r = rank(wm);
  for (auto s : m.group().generators()) {
    for (const auto& v : w) {
      OmegaVector<K> image = m.act(s, v);
      if (rank(hstack(wm, Matrix<Elem<K>>::column_vector(image, f->zero()))) != r) {
        throw Error(Errc::NotStable, m.group()[s].name() + " maps " + vec_string(v) + " to " + vec_string(image) +
                                         ", outside W");
      }
    }
  }
  // Equations of W: rows e with e . w = 0 for all spanning w.
  Matrix<Elem<K>> eqs = kernel(wm.transpose()).transpose();
  const std::size_t nk = n * f->degree();
  Matrix<K> stacked = restrict_scalars_matrix(eqs, f);
  const Matrix<K> id = Matrix<K>::identity(nk, f->base_zero());
  for (auto s : m.group().generators()) stacked = vstack(stacked, m.action_matrix(s) - id);
  Matrix<K> ker = kernel(stacked);
  if (ker.cols() != r) {
    throw Error(Errc::InternalContradiction, "W^Gamma has k-dimension " + std::to_string(ker.cols()) +
                                                 " but W has Omega-dimension " + std::to_string(r));
  }
  std::vector<OmegaVector<K>> basis;
  for (std::size_t j = 0; j < ker.cols(); ++j) basis.push_back(unflatten(ker.column(j), f));
  if (r > 0 && rank(as_columns(basis, n, f)) != r) {
    throw Error(Errc::InternalContradiction, "Omega * W^Gamma != W");
  }
  return KSpace<K>{f->base(), r, std::move(basis)};
}

template <class K>
KSpace<K> descend_subspace(const KSpace<K>& v0, const GaloisGroup<K>& group, const std::vector<OmegaVector<K>>& w) {
  return descend_subspace(extend_scalars(v0, group), w);
}

template <class K>
SemilinearModule<K> coboundary_module(const GaloisGroup<K>& group, const Matrix<Elem<K>>& b) {
  auto binv = inverse(b);
  if (!binv) throw Error(Errc::SingularMatrix, "b is singular");
  std::vector<Matrix<Elem<K>>> c;
  for (std::size_t s = 0; s < group.order(); ++s) c.push_back(*binv * group[s](b));
  return SemilinearModule<K>(group, b.rows(), std::move(c));
}

#define GALDESC_INSTANTIATE(K)                                                                                \
  template class SemilinearModule<K>;                                                                         \
  template VerificationReport validate_action(const SemilinearModule<K>&);                                   \
  template KSpace<K> fixed_subspace(const SemilinearModule<K>&);                                             \
  template SemilinearModule<K> extend_scalars(const KSpace<K>&, const GaloisGroup<K>&);                      \
  template Matrix<Elem<K>> counit_check(const SemilinearModule<K>&);                                         \
  template KSpace<K> descend_subspace(const SemilinearModule<K>&, const std::vector<OmegaVector<K>>&);       \
  template KSpace<K> descend_subspace(const KSpace<K>&, const GaloisGroup<K>&,                               \
                                      const std::vector<OmegaVector<K>>&);                                   \
  template SemilinearModule<K> coboundary_module(const GaloisGroup<K>&, const Matrix<Elem<K>>&);

GALDESC_INSTANTIATE(Rational)
GALDESC_INSTANTIATE(Zp)

}  // namespace galdesc
