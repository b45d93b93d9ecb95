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

#include "galdesc/error.hpp"

namespace galdesc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotFiniteBase: return "NotFiniteBase";
    case Errc::NotARoot: return "NotARoot";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotClosed: return "NotClosed";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::CocycleViolation: return "CocycleViolation";
    case Errc::IdentityNotTrivial: return "IdentityNotTrivial";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::NotStable: return "NotStable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::SplittingCheckFailed: return "SplittingCheckFailed";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::TransportNotRational: return "TransportNotRational";
    case Errc::ConditionAViolated: return "ConditionAViolated";
    case Errc::ConditionBViolated: return "ConditionBViolated";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::MismatchFound: return "MismatchFound";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::ZeroTarget: return "ZeroTarget";
    case Errc::BasisNotIndependent: return "BasisNotIndependent";
    case Errc::BasisNotSpanning: return "BasisNotSpanning";
    case Errc::NotFaithfullyFlat: return "NotFaithfullyFlat";
    case Errc::NotExact: return "NotExact";
    case Errc::NotBilinearCompatible: return "NotBilinearCompatible";
    case Errc::CocycleFailed: return "CocycleFailed";
    case Errc::ReconstructionFailed: return "ReconstructionFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace galdesc
