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

#ifndef MOM_ERROR_H_
#define MOM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mom {

// Every domain failure carries one of these codes. The CLI reports the
// code name verbatim, so renaming an enumerator is a breaking change.
enum class ErrorCode {
  kNonPrimeCharacteristic,
  kUnsupportedSize,
  kMissingModulusEntry,
  kSpecMismatch,
  kDivisionByZero,
  kDimensionMismatch,
  kZeroPolynomial,
  kEmptySet,
  kParseError,
  kInvalidParameters,
  kUnsatisfiedCountHypothesis,
  kInternalNoSolution,
  kSearchSpaceTooLarge,
  kHypothesisViolation,
  kParameterViolation,
  kTooFewFieldElements,
  kDuplicateNodes,
  kUniverseMismatch,
  kUniverseTooSmall,
  kEnumerationTooLarge,
  kBelowJohnsonRadius,
  kNoFeasibleM,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mom

#endif  // MOM_ERROR_H_
