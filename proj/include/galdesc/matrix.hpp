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

// Dense matrices over any exact field-like scalar T (Rational, Zp, Elem<K>).
// Row-major storage; the zero element is carried so that shapes can be built
// without a global notion of "the" field.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galdesc/error.hpp"

namespace galdesc {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& like) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), like);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(Errc::ShapeMismatch, "ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix column_vector(const std::vector<T>& v, const T& like) {
    Matrix m(v.size(), 1, like);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!galdesc::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(Errc::ShapeMismatch, "product of " + a.shape() + " and " + b.shape());
    }
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (galdesc::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(Errc::ShapeMismatch, a.shape() + " vs " + b.shape());
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "hstack " + a.shape() + " | " + b.shape());
  Matrix<T> r(a.rows(), a.cols() + b.cols(), a.zero());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "vstack " + a.shape() + " / " + b.shape());
  Matrix<T> r(a.rows() + b.rows(), a.cols(), a.zero());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

/// Kronecker product a (x) b; index (i*rb + k, j*cb + l).
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class T>
Echelon<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    T inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Kernel basis as the columns of the returned matrix (cols x nullity),
/// one vector per free column, read off the reduced echelon form.
template <class T>
Matrix<T> kernel(const Matrix<T>& a) {
  Echelon<T> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> k(a.cols(), free_cols.size(), a.zero());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = one_like(a.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free_cols[f]);
  }
  return k;
}

template <class T>
struct LinearSolution {
  std::optional<Matrix<T>> particular;  // empty when inconsistent
  Matrix<T> kernel;
  bool consistent() const { return particular.has_value(); }
};

/// All solutions of A X = B: one particular solution plus a kernel basis of A.
template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "A is " + a.shape() + ", b is " + b.shape());
  Echelon<T> e = rref(hstack(a, b));
  LinearSolution<T> sol{std::nullopt, kernel(a)};
  for (auto c : e.pivots) {
    if (c >= a.cols()) return sol;
  }
  Matrix<T> x(a.cols(), b.cols(), a.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  sol.particular = std::move(x);
  return sol;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw Error(Errc::ShapeMismatch, "inverse of " + a.shape());
  auto sol = solve_linear(a, Matrix<T>::identity(a.rows(), a.zero()));
  if (!sol.consistent() || sol.kernel.cols() != 0) return std::nullopt;
  return sol.particular;
}

template <class T>
bool is_invertible(const Matrix<T>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace galdesc
