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

#pragma once

// Bridges between Omega-linear algebra and k-linear algebra: coordinates on
// the power basis 1, t, ..., t^(n-1) and restriction of scalars for matrices.

#include <vector>

#include "galdesc/field.hpp"
#include "galdesc/matrix.hpp"

namespace galdesc {

/// k-matrix of multiplication by a on Omega (column c holds a * t^c).
template <class K>
Matrix<K> mult_matrix(const Elem<K>& a) {
  const auto& f = a.field();
  const std::size_t n = f->degree();
  Matrix<K> m(n, n, f->base_zero());
  Elem<K> col = a;
  const Elem<K> t = f->gen();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col.coeff(r);
    col = col * t;
  }
  return m;
}

/// Writes an Omega-matrix as a k-matrix on the expanded coordinates; entry
/// (i, j) becomes the n x n block mult_matrix(M(i, j)).
template <class K>
Matrix<K> restrict_scalars_matrix(const Matrix<Elem<K>>& m, const FieldPtr<K>& ext) {
  const std::size_t n = ext->degree();
  Matrix<K> r(m.rows() * n, m.cols() * n, ext->base_zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      r.set_block(i * n, j * n, mult_matrix(m(i, j)));
    }
  return r;
}

template <class K>
std::vector<K> flatten(const std::vector<Elem<K>>& v) {
  std::vector<K> out;
  for (const auto& e : v) out.insert(out.end(), e.coeffs().begin(), e.coeffs().end());
  return out;
}

template <class K>
std::vector<Elem<K>> unflatten(const std::vector<K>& v, const FieldPtr<K>& f) {
  const std::size_t n = f->degree();
  std::vector<Elem<K>> out;
  for (std::size_t i = 0; i + n <= v.size(); i += n) {
    out.push_back(f->from_coeffs(std::vector<K>(v.begin() + static_cast<std::ptrdiff_t>(i),
                                                v.begin() + static_cast<std::ptrdiff_t>(i + n))));
  }
  return out;
}

template <class K>
Matrix<Elem<K>> embed_matrix(const Matrix<K>& m, const FieldPtr<K>& f) {
  Matrix<Elem<K>> r(m.rows(), m.cols(), f->zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f->from_base(m(i, j));
  return r;
}

/// Columns of an Omega-matrix as Omega-vectors.
template <class T>
std::vector<std::vector<T>> columns(const Matrix<T>& m) {
  std::vector<std::vector<T>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows, const T& like) {
  Matrix<T> m(rows, cols.size(), like);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace galdesc
