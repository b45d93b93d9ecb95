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

// Exponent vectors and the three term orders used by the Groebner engine.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace galdesc {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

/// a / b; assumes b divides a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  /// grevlex on the first `split` variables, ties broken by grevlex on the
  /// rest; eliminates the first block.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::GrevLex:
        return grevlex_range(a, b, 0, a.size());
      case Kind::Block: {
        const std::size_t s = std::min(split_, a.size());
        int c = grevlex_range(a, b, 0, s);
        return c != 0 ? c : grevlex_range(a, b, s, a.size());
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex:
        return "lex";
      case Kind::GrevLex:
        return "grevlex";
      case Kind::Block:
        return "block(" + std::to_string(split_) + ")";
    }
    return "";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t split_;
};

}  // namespace galdesc
