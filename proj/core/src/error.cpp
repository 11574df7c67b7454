// Copyright 2026 The oppflags Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oppflags/error.hpp"

namespace oppflags {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kOddDegreeField: return "OddDegreeField";
    case ErrorCode::kInadmissibleParameters: return "InadmissibleParameters";
    case ErrorCode::kNonSquareFieldForHalfIntegerE: return "NonSquareFieldForHalfIntegerE";
    case ErrorCode::kTypeAHasNoPerp: return "TypeAHasNoPerp";
    case ErrorCode::kTypeAHasNoCollinearity: return "TypeAHasNoCollinearity";
    case ErrorCode::kMixedGeometries: return "MixedGeometries";
    case ErrorCode::kNotHyperbolic: return "NotHyperbolic";
    case ErrorCode::kNotAGenerator: return "NotAGenerator";
    case ErrorCode::kNonIntegerResult: return "NonIntegerResult";
    case ErrorCode::kRepresentativeDisagreement: return "RepresentativeDisagreement";
    case ErrorCode::kEvenRankTypeA: return "EvenRankTypeA";
    case ErrorCode::kOutOfRangeIndex: return "OutOfRangeIndex";
    case ErrorCode::kCriterionViolated: return "CriterionViolated";
    case ErrorCode::kEigenIdentityViolated: return "EigenIdentityViolated";
    case ErrorCode::kScaleTooLarge: return "ScaleTooLarge";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kPrimeTooSmall: return "PrimeTooSmall";
    case ErrorCode::kPrimeDisagreement: return "PrimeDisagreement";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kCacheFormat: return "CacheFormat";
  }
  return "Unknown";
}

}  // namespace oppflags
