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

#include "pqnmc/field.h"

#include <string>

#include "pqnmc/errors.h"

namespace pqnmc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kEdgeAlreadyConditioned: return "EdgeAlreadyConditioned";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kEdgePresent: return "EdgePresent";
    case ErrorCode::kGraphComplete: return "GraphComplete";
    case ErrorCode::kParityError: return "ParityError";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInfeasibleBudget: return "InfeasibleBudget";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool IsGuardViolation(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidField:
    case ErrorCode::kEnumerationTooLarge:
    case ErrorCode::kInfeasibleBudget:
    case ErrorCode::kSearchSpaceTooLarge:
      return true;
    default:
      return false;
  }
}

bool IsPrime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (!IsPrime(q)) {
    throw Error(ErrorCode::kInvalidField,
                "field size " + std::to_string(q) + " is not prime");
  }
}

std::uint32_t FieldMul(std::uint32_t a, std::uint32_t b, const FieldSpec& spec) {
  if (a >= spec.q() || b >= spec.q()) {
    throw Error(ErrorCode::kInvalidArgument, "operand outside the field");
  }
  return spec.Mul(a, b);
}

}  // namespace pqnmc
