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

#include "galdesc/flat.hpp"

#include "galdesc/linalg.hpp"

namespace galdesc {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

template <class K>
std::string vec_string(const std::vector<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

template <class K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& v) {
  return (m * Matrix<K>::column_vector(v, m.zero())).column(0);
}

// Pair space (B (x) B)^r, index (a m + s1) m + s2.
template <class K>
Matrix<K> on_first(const Matrix<K>& x, std::size_t m) {
  return kronecker(x, Matrix<K>::identity(m, x.zero()));
}

template <class K>
Matrix<K> on_second(const Matrix<K>& x, std::size_t m) {
  const std::size_t r = x.rows() / m;
  Matrix<K> out(r * m * m, r * m * m, x.zero());
  for (std::size_t row = 0; row < x.rows(); ++row)
    for (std::size_t col = 0; col < x.cols(); ++col) {
      if (is_zero(x(row, col))) continue;
      const std::size_t c = row / m, q = row % m, a = col / m, s = col % m;
      for (std::size_t s1 = 0; s1 < m; ++s1) out((c * m + s1) * m + q, (a * m + s1) * m + s) = x(row, col);
    }
  return out;
}

// Places a pair-space map on triple slots (u, v) (0-based); the third slot is passive.
template <class K>
Matrix<K> lift_pair(const Matrix<K>& phi, std::size_t m, std::size_t u, std::size_t v) {
  const std::size_t r = phi.rows() / (m * m);
  const std::size_t w = 3 - u - v;
  Matrix<K> out(r * m * m * m, r * m * m * m, phi.zero());
  auto idx = [&](std::size_t a, std::size_t x, std::size_t y, std::size_t z) {
    std::size_t p[3];
    p[u] = x;
    p[v] = y;
    p[w] = z;
    return ((a * m + p[0]) * m + p[1]) * m + p[2];
  };
  for (std::size_t row = 0; row < phi.rows(); ++row)
    for (std::size_t col = 0; col < phi.cols(); ++col) {
      if (is_zero(phi(row, col))) continue;
      const std::size_t c = row / (m * m), q1 = row / m % m, q2 = row % m;
      const std::size_t a = col / (m * m), p1 = col / m % m, p2 = col % m;
      for (std::size_t z = 0; z < m; ++z) out(idx(c, q1, q2, z), idx(a, p1, p2, z)) = phi(row, col);
    }
  return out;
}

template <class K>
void require_base_source(const AlgebraMap<K>& f, const ModuleDatum<K>* d) {
  if (f.source.dim != 1) throw Error(Errc::Unsupported, "module descent is implemented over the base field only");
  if (d != nullptr && d->algebra.dim != f.target.dim) throw Error(Errc::ShapeMismatch, "datum lives over another algebra");
}

}  // namespace

template <class K>
std::vector<K> FiniteAlgebra<K>::basis(std::size_t i) const {
  std::vector<K> v(dim, zero());
  v[i] = one();
  return v;
}

template <class K>
std::vector<K> FiniteAlgebra<K>::mul(const std::vector<K>& a, const std::vector<K>& b) const {
  std::vector<K> out(dim, zero());
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (is_zero(b[j])) continue;
      const K c = a[i] * b[j];
      for (std::size_t l = 0; l < dim; ++l) out[l] += c * products[i][j][l];
    }
  }
  return out;
}

template <class K>
Matrix<K> FiniteAlgebra<K>::left_matrix(const std::vector<K>& a) const {
  Matrix<K> m(dim, dim, zero());
  for (std::size_t j = 0; j < dim; ++j) {
    const auto col = mul(a, basis(j));
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

template <class K>
FiniteAlgebra<K> make_finite_algebra(BaseField base, std::vector<std::vector<std::vector<K>>> products,
                                     std::vector<K> unit, std::string name) {
  FiniteAlgebra<K> a{base, unit.size(), std::move(products), std::move(unit), std::move(name)};
  const std::size_t n = a.dim;
  if (a.products.size() != n) throw Error(Errc::ShapeMismatch, "structure constants need " + std::to_string(n) + " rows");
  for (const auto& row : a.products) {
    if (row.size() != n) throw Error(Errc::ShapeMismatch, "ragged structure constants");
    for (const auto& v : row) {
      if (v.size() != n) throw Error(Errc::ShapeMismatch, "product vector of the wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.mul(a.unit, a.basis(i)) != a.basis(i)) throw Error(Errc::InvalidArgument, "unit law fails on b" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (a.products[i][j] != a.products[j][i]) {
        throw Error(Errc::InvalidArgument, "not commutative on (b" + std::to_string(i) + ", b" + std::to_string(j) + ")");
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (a.mul(a.products[i][j], a.basis(l)) != a.mul(a.basis(i), a.products[j][l])) {
          throw Error(Errc::InvalidArgument, "not associative on (b" + std::to_string(i) + ", b" + std::to_string(j) +
                                                 ", b" + std::to_string(l) + ")");
        }
      }
    }
  }
  if (a.name.empty()) a.name = "B" + std::to_string(n);
  return a;
}

template <class K>
FiniteAlgebra<K> base_algebra(const BaseField& base) {
  return split_algebra<K>(base, 1);
}

template <class K>
FiniteAlgebra<K> split_algebra(const BaseField& base, std::size_t n) {
  const K z = scalar_from_int<K>(base, 0), o = scalar_from_int<K>(base, 1);
  std::vector<std::vector<std::vector<K>>> c(n, std::vector<std::vector<K>>(n, std::vector<K>(n, z)));
  for (std::size_t i = 0; i < n; ++i) c[i][i][i] = o;
  std::string name = base.name();
  if (n != 1) name += "^" + std::to_string(n);
  return make_finite_algebra<K>(base, std::move(c), std::vector<K>(n, o), name);
}

template <class K>
FiniteAlgebra<K> field_algebra(const FieldPtr<K>& f) {
  const std::size_t n = f->degree();
  std::vector<std::vector<std::vector<K>>> c(n, std::vector<std::vector<K>>(n));
  std::vector<Elem<K>> powers{f->one()};
  for (std::size_t i = 1; i < 2 * n; ++i) powers.push_back(powers.back() * f->gen());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = powers[i + j].coeffs();
  return make_finite_algebra<K>(f->base(), std::move(c), f->one().coeffs(), f->name());
}

template <class K>
FiniteAlgebra<K> zero_algebra(const BaseField& base) {
  return FiniteAlgebra<K>{base, 0, {}, {}, "0"};
}

template <class K>
AlgebraMap<K> make_algebra_map(FiniteAlgebra<K> source, FiniteAlgebra<K> target, Matrix<K> matrix) {
  if (!(source.base == target.base)) throw Error(Errc::CharacteristicMismatch, source.name + " vs " + target.name);
  if (matrix.rows() != target.dim || matrix.cols() != source.dim) {
    throw Error(Errc::ShapeMismatch, "map matrix is " + matrix.shape());
  }
  if (mat_vec(matrix, source.unit) != target.unit) throw Error(Errc::NotWellDefined, "1 does not map to 1");
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = 0; j < source.dim; ++j) {
      if (mat_vec(matrix, source.products[i][j]) != target.mul(matrix.column(i), matrix.column(j))) {
        throw Error(Errc::NotWellDefined, "not multiplicative on (b" + std::to_string(i) + ", b" + std::to_string(j) + ")");
      }
    }
  return AlgebraMap<K>{std::move(source), std::move(target), std::move(matrix)};
}

template <class K>
AlgebraMap<K> structure_map(const FiniteAlgebra<K>& b) {
  return make_algebra_map(base_algebra<K>(b.base), b, Matrix<K>::column_vector(b.unit, b.zero()));
}

template <class K>
VerificationReport check_faithfully_flat(const AlgebraMap<K>& f, const std::optional<std::vector<std::vector<K>>>& basis) {
  VerificationReport rep;
  const auto& a = f.source;
  const auto& b = f.target;
  if (b.dim == 0) throw Error(Errc::ZeroTarget, "the target algebra is zero");
  if (a.dim == 1) {
    rep.add(b.name + " is a nonzero algebra over the field " + a.name + ": faithfully flat");
    return rep;
  }
  if (!basis) throw Error(Errc::InvalidArgument, "a module basis is needed when the source is not a field");
  // (a_1, ..., a_s) |-> sum f(a_i) beta_i as a k-linear map A^s -> B
  const std::size_t s = basis->size();
  Matrix<K> m(b.dim, s * a.dim, b.zero());
  for (std::size_t i = 0; i < s; ++i) {
    if ((*basis)[i].size() != b.dim) throw Error(Errc::ShapeMismatch, "basis vector of the wrong length");
    for (std::size_t j = 0; j < a.dim; ++j) {
      const auto col = b.mul(f.matrix.column(j), (*basis)[i]);
      for (std::size_t r = 0; r < b.dim; ++r) m(r, i * a.dim + j) = col[r];
    }
  }
  const std::size_t rk = rank(m);
  if (rk != s * a.dim) throw Error(Errc::BasisNotIndependent, "the basis satisfies an " + a.name + "-linear relation");
  if (rk != b.dim) throw Error(Errc::BasisNotSpanning, "the basis spans " + std::to_string(rk) + " of " + std::to_string(b.dim) + " dimensions");
  rep.add(b.name + " is free of rank " + std::to_string(s) + " over " + a.name + ": faithfully flat");
  return rep;
}

template <class K>
Matrix<K> face_map(const FiniteAlgebra<K>& b, std::size_t r, std::size_t i) {
  const std::size_t m = b.dim;
  const std::size_t src = ipow(m, r);
  const std::size_t tail = ipow(m, r - i);
  Matrix<K> e(src * m, src, b.zero());
  for (std::size_t col = 0; col < src; ++col) {
    const std::size_t head = col / tail, rest = col % tail;
    for (std::size_t u = 0; u < m; ++u) {
      if (!is_zero(b.unit[u])) e((head * m + u) * tail + rest, col) = b.unit[u];
    }
  }
  return e;
}

template <class K>
AmitsurComplex<K> amitsur_complex(const AlgebraMap<K>& f, std::size_t r_max) {
  if (f.source.dim != 1) throw Error(Errc::Unsupported, "Amitsur complexes are built over the base field only");
  try {
    check_faithfully_flat(f);
  } catch (const Error& e) {
    throw Error(Errc::NotFaithfullyFlat, e.what());
  }
  if (r_max < 1) throw Error(Errc::InvalidArgument, "r_max must be at least 1");
  const auto& b = f.target;
  if (static_cast<double>(ipow(b.dim, r_max + 1)) > static_cast<double>(kMaxTensorDim) ||
      std::pow(static_cast<double>(b.dim), static_cast<double>(r_max + 1)) > kMaxTensorDim) {
    throw Error(Errc::BudgetExceeded, "dim " + b.name + "^(x)" + std::to_string(r_max + 1) + " exceeds " +
                                          std::to_string(kMaxTensorDim));
  }
  AmitsurComplex<K> c{b, f.matrix, {}};
  for (std::size_t r = 1; r <= r_max; ++r) {
    Matrix<K> d(ipow(b.dim, r + 1), ipow(b.dim, r), b.zero());
    for (std::size_t i = 0; i <= r; ++i) d = i % 2 == 0 ? d + face_map(b, r, i) : d - face_map(b, r, i);
    c.d.push_back(std::move(d));
  }
  if (!(c.d[0] * c.augmentation).is_zero()) throw Error(Errc::InternalContradiction, "d0 f != 0");
  for (std::size_t j = 1; j < c.d.size(); ++j) {
    if (!(c.d[j] * c.d[j - 1]).is_zero()) throw Error(Errc::InternalContradiction, "d" + std::to_string(j) + " d" + std::to_string(j - 1) + " != 0");
  }
  return c;
}

template <class K>
ExactnessReport check_exactness(const AmitsurComplex<K>& c, std::optional<std::size_t> module_dim) {
  const std::size_t n = module_dim.value_or(1);
  const K z = c.algebra.zero();
  auto coeff = [&](const Matrix<K>& x) { return module_dim ? kronecker(Matrix<K>::identity(n, z), x) : x; };
  ExactnessReport out;
  Matrix<K> prev = coeff(c.augmentation);
  const std::size_t first = rank(prev);
  if (first != n) {
    throw Error(Errc::NotExact, "degree 0: the coefficient module does not inject (rank " + std::to_string(first) + ")");
  }
  for (std::size_t j = 0; j < c.d.size(); ++j) {
    const Matrix<K> dj = coeff(c.d[j]);
    const std::string where = "degree " + std::to_string(j);
    if (!(dj * prev).is_zero()) throw Error(Errc::NotExact, where + ": consecutive differentials do not compose to 0");
    const std::size_t image = rank(prev);
    const std::size_t kernel = dj.cols() - rank(dj);
    if (kernel != image) {
      throw Error(Errc::NotExact, where + ": kernel " + std::to_string(kernel) + " but image " + std::to_string(image));
    }
    out.degrees.push_back({j, kernel, image});
    out.report.add(where + ": dim ker = dim im = " + std::to_string(kernel));
    prev = dj;
  }
  return out;
}

template <class K>
VerificationReport verify_contracting_homotopy(const AmitsurComplex<K>& c, const AlgebraMap<K>& section) {
  const auto& b = c.algebra;
  const std::size_t m = b.dim;
  if (section.source.dim != m || section.target.dim != 1) throw Error(Errc::ShapeMismatch, "section must map B to k");
  const Matrix<K>& g = section.matrix;
  if (!(g * c.augmentation == Matrix<K>::identity(1, b.zero()))) {
    throw Error(Errc::InvalidArgument, "g f != id");
  }
  VerificationReport rep;
  Matrix<K> h_prev = g;
  Matrix<K> d_prev = c.augmentation;
  for (std::size_t j = 0; j < c.d.size(); ++j) {
    const std::size_t dim = ipow(m, j + 1);
    const Matrix<K> h = kronecker(g, Matrix<K>::identity(dim, b.zero()));
    if (!(h * c.d[j] + d_prev * h_prev == Matrix<K>::identity(dim, b.zero()))) {
      throw Error(Errc::InternalContradiction, "h d + d h != 1 in degree " + std::to_string(j));
    }
    rep.add("degree " + std::to_string(j) + ": h d + d h = 1");
    h_prev = h;
    d_prev = c.d[j];
  }
  return rep;
}

template <class K>
ModuleDatum<K> canonical_module_datum(const FiniteAlgebra<K>& b, std::size_t rank) {
  return ModuleDatum<K>{b, rank, Matrix<K>::identity(rank * b.dim * b.dim, b.zero())};
}

template <class K>
Matrix<K> b_linear_matrix(const FiniteAlgebra<K>& b, const std::vector<std::vector<std::vector<K>>>& entries) {
  const std::size_t r = entries.size();
  Matrix<K> g(r * b.dim, r * b.dim, b.zero());
  for (std::size_t c = 0; c < r; ++c) {
    if (entries[c].size() != r) throw Error(Errc::ShapeMismatch, "entries must be square");
    for (std::size_t a = 0; a < r; ++a) g.set_block(c * b.dim, a * b.dim, b.left_matrix(entries[c][a]));
  }
  return g;
}

template <class K>
ModuleDatum<K> twist_datum(const ModuleDatum<K>& d, const Matrix<K>& g) {
  const std::size_t m = d.algebra.dim;
  auto inv = inverse(g);
  if (!inv) throw Error(Errc::NotInvertible, "twist is not invertible");
  return ModuleDatum<K>{d.algebra, d.rank, on_second(g, m) * d.phi * on_first(*inv, m)};
}

template <class K>
ModuleDatum<K> random_module_datum(const FiniteAlgebra<K>& b, std::size_t rank, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::vector<std::vector<K>>> entries(rank, std::vector<std::vector<K>>(rank));
    for (auto& row : entries)
      for (auto& e : row)
        for (std::size_t i = 0; i < b.dim; ++i) e.push_back(random_scalar<K>(b.base, rng));
    const auto g = b_linear_matrix(b, entries);
    if (is_invertible(g)) return twist_datum(canonical_module_datum(b, rank), g);
  }
}

template <class K>
VerificationReport check_cocycle(const ModuleDatum<K>& d, const AlgebraMap<K>& f) {
  require_base_source(f, &d);
  const auto& b = d.algebra;
  const std::size_t m = b.dim;
  const std::size_t pair = d.rank * m * m;
  if (d.phi.rows() != pair || d.phi.cols() != pair) throw Error(Errc::ShapeMismatch, "phi is " + d.phi.shape());
  VerificationReport rep;
  const auto eye = Matrix<K>::identity(d.rank, b.zero());
  for (std::size_t i = 0; i < m; ++i) {
    const auto l = kronecker(eye, b.left_matrix(b.basis(i)));
    const auto l1 = on_first(l, m), l2 = on_second(l, m);
    if (!(d.phi * l1 == l1 * d.phi)) throw Error(Errc::NotBilinearCompatible, "phi does not commute with b" + std::to_string(i) + " (x) 1");
    if (!(d.phi * l2 == l2 * d.phi)) throw Error(Errc::NotBilinearCompatible, "phi does not commute with 1 (x) b" + std::to_string(i));
  }
  rep.add("phi is " + b.name + " (x) " + b.name + "-linear");
  if (!is_invertible(d.phi)) throw Error(Errc::NotInvertible, "phi is not an isomorphism");
  rep.add("phi is invertible");
  const auto p1 = lift_pair(d.phi, m, 1, 2);
  const auto p2 = lift_pair(d.phi, m, 0, 2);
  const auto p3 = lift_pair(d.phi, m, 0, 1);
  const auto comp = p1 * p3;
  for (std::size_t col = 0; col < comp.cols(); ++col) {
    if (comp.column(col) != p2.column(col)) {
      const std::size_t a = col / (m * m * m);
      throw Error(Errc::CocycleFailed, "phi_2 != phi_1 phi_3 on e" + std::to_string(a) + "[" + std::to_string(col / (m * m) % m) +
                                           ", " + std::to_string(col / m % m) + ", " + std::to_string(col % m) + "]");
    }
  }
  rep.add("phi_2 = phi_1 phi_3 on the " + std::to_string(comp.cols()) + "-dimensional triple product");
  return rep;
}

template <class K>
DescendedModule<K> reconstruct_module(const ModuleDatum<K>& d, const AlgebraMap<K>& f) {
  auto rep = check_cocycle(d, f);
  const auto& b = d.algebra;
  const std::size_t m = b.dim, r = d.rank;
  const std::size_t pair = r * m * m;
  const K z = b.zero();
  // T(v) = 1 (x) v - phi(v (x) 1)
  Matrix<K> u1(pair, r * m, z), u2(pair, r * m, z);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t s = 0; s < m; ++s) {
        u1((a * m + i) * m + s, a * m + i) = b.unit[s];
        u2((a * m + s) * m + i, a * m + i) = b.unit[s];
      }
  DescendedModule<K> out{kernel(u2 - d.phi * u1), std::move(rep)};
  const std::size_t dm = out.dim();
  out.report.add("M = {v : 1 (x) v = phi(v (x) 1)} has dimension " + std::to_string(dm));

  const auto eye = Matrix<K>::identity(r, z);
  std::vector<Matrix<K>> act;
  for (std::size_t j = 0; j < m; ++j) act.push_back(kronecker(eye, b.left_matrix(b.basis(j))));
  Matrix<K> mu(r * m, m * dm, z);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < dm; ++k) {
      const auto col = mat_vec(act[j], out.basis.column(k));
      for (std::size_t i = 0; i < r * m; ++i) mu(i, j * dm + k) = col[i];
    }
  if (!is_invertible(mu)) {
    throw Error(Errc::ReconstructionFailed, "B (x) M -> M' is not an isomorphism (" + mu.shape() + ", rank " +
                                                std::to_string(rank(mu)) + ")");
  }
  out.report.add("B (x) M -> M' is an isomorphism");

  // phi((b_j v) (x) b_l) = b_j (x) (b_l v)
  for (std::size_t k = 0; k < dm; ++k)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        const auto left = mat_vec(act[j], out.basis.column(k));
        const auto right = mat_vec(act[l], out.basis.column(k));
        std::vector<K> src(pair, z), dst(pair, z);
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t i = 0; i < m; ++i) {
            src[(a * m + i) * m + l] = left[a * m + i];
            dst[(a * m + j) * m + i] = right[a * m + i];
          }
        if (mat_vec(d.phi, src) != dst) {
          throw Error(Errc::ReconstructionFailed, "the datum induced by M differs from phi at v" + std::to_string(k));
        }
      }
  out.report.add("the datum induced by M equals phi");
  return out;
}

template <class K>
ModuleDatum<K> datum_from_semilinear(const SemilinearModule<K>& sm) {
  const auto& omega = sm.field();
  const std::size_t n = omega->degree(), r = sm.dim();
  if (sm.group().order() != n) throw Error(Errc::InvalidArgument, "the group must be all of Aut(" + omega->name() + "/k)");
  const K z = omega->base_zero();
  std::vector<Elem<K>> powers{omega->one()};
  for (std::size_t i = 1; i < 2 * n; ++i) powers.push_back(powers.back() * omega->gen());
  Matrix<K> gram(n, n, z);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto mm = mult_matrix(powers[i + j]);
      for (std::size_t l = 0; l < n; ++l) gram(i, j) += mm(l, l);
    }
  const auto ginv = inverse(gram);
  if (!ginv) throw Error(Errc::NotSeparable, "the trace form is degenerate");
  // dual[j] has Tr(t^i dual[j]) = delta_ij
  std::vector<std::vector<K>> dual;
  for (std::size_t j = 0; j < n; ++j) dual.push_back(ginv->column(j));

  auto project = [&](const OmegaVector<K>& w) {
    OmegaVector<K> acc(r, omega->zero());
    for (std::size_t s = 0; s < sm.group().order(); ++s) {
      const auto v = sm.act(s, w);
      for (std::size_t c = 0; c < r; ++c) acc[c] += v[c];
    }
    return acc;
  };

  // phi(v (x) b') = sum_j dual_j (x) b' P(t^j v)
  const std::size_t pair = r * n * n;
  Matrix<K> phi(pair, pair, z);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      for (std::size_t j = 0; j < n; ++j) {
        OmegaVector<K> w(r, omega->zero());
        w[a] = powers[s1 + j];
        const auto pw = project(w);
        for (std::size_t s2 = 0; s2 < n; ++s2) {
          const std::size_t col = (a * n + s1) * n + s2;
          for (std::size_t c = 0; c < r; ++c) {
            const Elem<K> y = powers[s2] * pw[c];
            for (std::size_t q1 = 0; q1 < n; ++q1) {
              if (is_zero(dual[j][q1])) continue;
              for (std::size_t q2 = 0; q2 < n; ++q2) phi((c * n + q1) * n + q2, col) += dual[j][q1] * y.coeff(q2);
            }
          }
        }
      }
    }
  return ModuleDatum<K>{field_algebra(omega), r, std::move(phi)};
}

#define GALDESC_INSTANTIATE(K)                                                                                   \
  template struct FiniteAlgebra<K>;                                                                             \
  template FiniteAlgebra<K> make_finite_algebra(BaseField, std::vector<std::vector<std::vector<K>>>,            \
                                                std::vector<K>, std::string);                                   \
  template FiniteAlgebra<K> base_algebra<K>(const BaseField&);                                                  \
  template FiniteAlgebra<K> split_algebra<K>(const BaseField&, std::size_t);                                    \
  template FiniteAlgebra<K> field_algebra(const FieldPtr<K>&);                                                  \
  template FiniteAlgebra<K> zero_algebra<K>(const BaseField&);                                                  \
  template AlgebraMap<K> make_algebra_map(FiniteAlgebra<K>, FiniteAlgebra<K>, Matrix<K>);                       \
  template AlgebraMap<K> structure_map(const FiniteAlgebra<K>&);                                                \
  template VerificationReport check_faithfully_flat(const AlgebraMap<K>&,                                       \
                                                    const std::optional<std::vector<std::vector<K>>>&);         \
  template Matrix<K> face_map(const FiniteAlgebra<K>&, std::size_t, std::size_t);                               \
  template AmitsurComplex<K> amitsur_complex(const AlgebraMap<K>&, std::size_t);                                \
  template ExactnessReport check_exactness(const AmitsurComplex<K>&, std::optional<std::size_t>);               \
  template VerificationReport verify_contracting_homotopy(const AmitsurComplex<K>&, const AlgebraMap<K>&);      \
  template ModuleDatum<K> canonical_module_datum(const FiniteAlgebra<K>&, std::size_t);                         \
  template Matrix<K> b_linear_matrix(const FiniteAlgebra<K>&, const std::vector<std::vector<std::vector<K>>>&); \
  template ModuleDatum<K> twist_datum(const ModuleDatum<K>&, const Matrix<K>&);                                 \
  template ModuleDatum<K> random_module_datum(const FiniteAlgebra<K>&, std::size_t, std::mt19937_64&);          \
  template VerificationReport check_cocycle(const ModuleDatum<K>&, const AlgebraMap<K>&);                       \
  template DescendedModule<K> reconstruct_module(const ModuleDatum<K>&, const AlgebraMap<K>&);                  \
  template ModuleDatum<K> datum_from_semilinear(const SemilinearModule<K>&);

GALDESC_INSTANTIATE(Rational)
GALDESC_INSTANTIATE(Zp)

}  // namespace galdesc
