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

// Text syntax for polynomials: +, -, *, ^ (non-negative integer exponents),
// division by nonzero constants, integer literals, parentheses, variable
// names of the ring, and t for the generator of the coefficient field.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "galdesc/mpoly.hpp"

namespace galdesc {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what) : std::runtime_error(what), offset_(offset) {}
  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

template <class K>
MultiPoly<K> parse_poly(const RingPtr<K>& ring, std::string_view text);

/// A univariate polynomial in t over the base field, e.g. a modulus.
template <class K>
UPoly<K> parse_upoly(const BaseField& base, std::string_view text);

/// An element of a field, written as a polynomial in t.
template <class K>
Elem<K> parse_elem(const FieldPtr<K>& field, std::string_view text);

}  // namespace galdesc
