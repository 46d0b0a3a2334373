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

#ifndef PQNMC_FIELD_H_
#define PQNMC_FIELD_H_

#include <cstdint>

namespace pqnmc {

bool IsPrime(std::uint64_t value);

// A prime field F_q. Elements are represented by their residues in [0, q).
class FieldSpec {
 public:
  // Throws Error(kInvalidField) unless q is prime.
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const { return q_; }

  std::uint32_t Mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t q_;
};

// Throws Error(kInvalidArgument) if an operand is not a field element.
std::uint32_t FieldMul(std::uint32_t a, std::uint32_t b, const FieldSpec& spec);

}  // namespace pqnmc

#endif  // PQNMC_FIELD_H_
