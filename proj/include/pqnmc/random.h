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

#ifndef PQNMC_RANDOM_H_
#define PQNMC_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pqnmc {

// Deterministic stream derivation; the standard library distributions are
// implementation-defined, so sampling below is done by hand.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 StreamFor(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(SplitMix64(seed ^ SplitMix64(index)));
}

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= limit) return r % bound;
  }
}

template <typename T>
void FisherYates(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(UniformBelow(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace pqnmc

#endif  // PQNMC_RANDOM_H_
