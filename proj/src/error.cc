// Copyright 2026 The mom Authors.
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

#include "mom/error.h"

namespace mom {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kUnsupportedSize: return "UnsupportedSize";
    case ErrorCode::kMissingModulusEntry: return "MissingModulusEntry";
    case ErrorCode::kSpecMismatch: return "SpecMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kUnsatisfiedCountHypothesis: return "UnsatisfiedCountHypothesis";
    case ErrorCode::kInternalNoSolution: return "InternalNoSolution";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kParameterViolation: return "ParameterViolation";
    case ErrorCode::kTooFewFieldElements: return "TooFewFieldElements";
    case ErrorCode::kDuplicateNodes: return "DuplicateNodes";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kUniverseTooSmall: return "UniverseTooSmall";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kBelowJohnsonRadius: return "BelowJohnsonRadius";
    case ErrorCode::kNoFeasibleM: return "NoFeasibleM";
  }
  return "Unknown";
}

}  // namespace mom
