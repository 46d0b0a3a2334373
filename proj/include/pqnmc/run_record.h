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

#ifndef PQNMC_RUN_RECORD_H_
#define PQNMC_RUN_RECORD_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqnmc/edge.h"

namespace pqnmc {

// One method run as exported by the command-line tool.
struct RunRecord {
  int f = 0;
  std::uint32_t q = 2;
  int n = 2;
  std::string method;
  std::uint64_t seed = 0;
  int fixed_colors = 1;
  std::uint64_t budget = 1;
  MonomialOrder order;
  std::string bound;  // fixed, 13 fractional digits
  std::vector<double> cond_entropies;
  std::int64_t wall_time_ms = 0;
  std::optional<std::string> bound_hex;  // exact binary value, on request

  bool operator==(const RunRecord&) const = default;
};

// Exactly 13 digits after the decimal point.
std::string FormatBound(double bound);
// C99 hexadecimal floating point, e.g. 0x1.0p-1.
std::string FormatHex(double value);

nlohmann::json ToJson(const RunRecord& record);
// Throws nlohmann::json::exception on schema mismatch.
RunRecord FromJson(const nlohmann::json& j);

// Canonical text: sorted keys, no whitespace, trailing newline.
std::string SerializeRecord(const RunRecord& record);

}  // namespace pqnmc

#endif  // PQNMC_RUN_RECORD_H_
