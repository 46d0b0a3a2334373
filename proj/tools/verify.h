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

#ifndef PQNMC_TOOLS_VERIFY_H_
#define PQNMC_TOOLS_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace pqnmc::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Suites: entropy, graph, coloring, remarks, paths. Throws Error on guard
// violations and std::invalid_argument on an unknown suite.
std::vector<Check> RunSuite(const std::string& suite, int f, std::uint64_t seed);

}  // namespace pqnmc::cli

#endif  // PQNMC_TOOLS_VERIFY_H_
