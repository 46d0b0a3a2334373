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

#include "pqnmc/run_record.h"

#include <cstdio>

namespace pqnmc {

std::string FormatBound(double bound) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.13f", bound);
  return buf;
}

std::string FormatHex(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", value);
  return buf;
}

nlohmann::json ToJson(const RunRecord& r) {
  nlohmann::json order = nlohmann::json::array();
  for (const Edge& e : r.order) order.push_back({e.k, e.l});
  nlohmann::json j = {
      {"f", r.f},
      {"q", r.q},
      {"n", r.n},
      {"method", r.method},
      {"seed", r.seed},
      {"fixed_colors", r.fixed_colors},
      {"budget", r.budget},
      {"order", order},
      {"bound", r.bound},
      {"cond_entropies", r.cond_entropies},
      {"wall_time_ms", r.wall_time_ms},
  };
  if (r.bound_hex) j["bound_hex"] = *r.bound_hex;
  return j;
}

RunRecord FromJson(const nlohmann::json& j) {
  RunRecord r;
  r.f = j.at("f").get<int>();
  r.q = j.at("q").get<std::uint32_t>();
  r.n = j.at("n").get<int>();
  r.method = j.at("method").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.fixed_colors = j.at("fixed_colors").get<int>();
  r.budget = j.at("budget").get<std::uint64_t>();
  for (const auto& pair : j.at("order")) {
    if (pair.size() != 2) {
      throw nlohmann::json::type_error::create(302, "order entries must be pairs",
                                               &pair);
    }
    r.order.push_back(Edge{pair[0].get<int>(), pair[1].get<int>()});
  }
  r.bound = j.at("bound").get<std::string>();
  r.cond_entropies = j.at("cond_entropies").get<std::vector<double>>();
  r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  if (j.contains("bound_hex")) r.bound_hex = j.at("bound_hex").get<std::string>();
  return r;
}

std::string SerializeRecord(const RunRecord& record) {
  return ToJson(record).dump() + "\n";
}

}  // namespace pqnmc
