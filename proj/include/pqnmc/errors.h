// Copyright 2026 The Authors.
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

#ifndef PQNMC_ERRORS_H_
#define PQNMC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pqnmc {

enum class ErrorCode {
  kInvalidField,
  kInvalidEdge,
  kInvalidVertex,
  kEnumerationTooLarge,
  kEdgeAlreadyConditioned,
  kDisconnectedGraph,
  kEdgePresent,
  kGraphComplete,
  kParityError,
  kInvalidPermutation,
  kNotAPermutation,
  kDuplicateEdge,
  kInfeasibleBudget,
  kSearchSpaceTooLarge,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Guard violations are resource or domain limits, as opposed to malformed
// input. The CLI maps them to a distinct exit status.
bool IsGuardViolation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pqnmc

#endif  // PQNMC_ERRORS_H_
