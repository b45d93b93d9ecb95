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

#include <stdexcept>
#include <string>
#include <string_view>

namespace galdesc {

enum class Errc {
  // exact-arith
  NotMonic,
  NotSquarefree,
  NotIrreducible,
  CharacteristicMismatch,
  DivisionByZero,
  ShapeMismatch,
  // galois-core
  NotFiniteBase,
  NotARoot,
  NotInvertible,
  NotClosed,
  RankDeficient,
  // semilinear
  CocycleViolation,
  IdentityNotTrivial,
  SingularMatrix,
  InternalContradiction,
  NotStable,
  // poly-ideal / descent-affine
  BudgetExceeded,
  NotWellDefined,
  SplittingCheckFailed,
  NotEquivariant,
  TransportNotRational,
  ConditionAViolated,
  ConditionBViolated,
  // weil-restriction
  NotSeparable,
  MismatchFound,
  CountMismatch,
  // ff-descent
  ZeroTarget,
  BasisNotIndependent,
  BasisNotSpanning,
  NotFaithfullyFlat,
  NotExact,
  NotBilinearCompatible,
  CocycleFailed,
  ReconstructionFailed,
  // misc
  InvalidArgument,
  Unsupported,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception. The code is
/// machine readable; the message carries the witness (group elements,
/// generator index, degree, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace galdesc
