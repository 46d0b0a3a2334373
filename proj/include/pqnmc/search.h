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

#ifndef PQNMC_SEARCH_H_
#define PQNMC_SEARCH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqnmc/bound.h"
#include "pqnmc/edge.h"
#include "pqnmc/graph.h"

namespace pqnmc {

enum class Method { kEc, kEEc, kLdf, kEbg, kExhaustive, kDirectedRandom };
enum class TiePolicy { kLexicographic, kSeededRandom };

std::string MethodName(Method method);
// Accepts ec, e-ec, ldf, ebg, exhaustive, random. Throws on anything else.
Method ParseMethod(const std::string& name);

// Conditional entropies within this distance of the best one are ties when
// the greedy method picks its next edge.
inline constexpr double kGreedyTieTolerance = 1e-12;

// Bounds within this distance of the minimum belong to the argmin set.
inline constexpr double kArgminTolerance = 1e-12;

struct SearchConfig {
  Method method = Method::kEc;
  BoundParams params;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1;  // random draws for kDirectedRandom
  int fixed_colors = 1;      // leading color classes held in place
  TiePolicy tie_policy = TiePolicy::kLexicographic;
  int threads = 1;
  // Largest number of color permutations the enhanced coloring search tries.
  std::uint64_t permutation_cap = 3628800;  // 10!
  // Exhaustive search refuses f above this unless `force` is set.
  int exhaustive_max_f = 5;
  bool force = false;
  bool collect_argmin = false;
  bool record_trace = false;
  std::shared_ptr<EntropyCache> cache;  // optional, shared across runs
};

struct TraceStep {
  Edge chosen;
  // Partial bound of prefix + candidate for every candidate considered.
  std::vector<std::pair<Edge, double>> candidates;
};

struct SearchResult {
  BoundReport best;
  // Full-order plus partial-bound evaluations.
  std::uint64_t evaluations = 0;
  std::uint64_t partial_evaluations = 0;
  std::vector<TraceStep> trace;
  // Every order within kArgminTolerance of the best (exhaustive search only).
  std::vector<MonomialOrder> argmin;
};

// Natural color order 1..chi'.
SearchResult EcSearch(const SearchConfig& config);

// Holds the first `fixed_colors` classes of PinnedColorSequence in place and
// tries every permutation of the rest. Throws Error(kInfeasibleBudget) if the number of
// permutations exceeds config.permutation_cap.
SearchResult EEcSearch(const SearchConfig& config);

// Longest-distance-first order. Without a start edge, (1,2) is used.
MonomialOrder LdfOrder(int f, std::optional<Edge> start = std::nullopt);
MonomialOrder LdfOrderSeeded(int f, std::uint64_t seed);

// Appends the missing edges of K_f to `partial`, each time choosing the edge
// whose addition closes the lexicographically smallest cycle vector. The last
// two edges are appended in lexicographic order. `g` must hold exactly the
// edges of `partial`. Throws Error(kGraphComplete) if nothing is missing.
MonomialOrder OrderInnerEdges(const Graph& g, const std::vector<Edge>& partial);

SearchResult LdfSearch(const SearchConfig& config);

// Entropy-based greedy: from (1,2), repeatedly append the edge minimizing the
// partial bound, which is the edge of largest conditional entropy given the
// prefix. The result does not depend on n.
SearchResult EbgSearch(const SearchConfig& config);

// Minimum over all orders whose first edge is (1,2); by vertex relabeling
// symmetry this is the minimum over all mu! orders. Throws
// Error(kSearchSpaceTooLarge) above config.exhaustive_max_f without `force`,
// and always above f = 7.
SearchResult ExhaustiveSearch(const SearchConfig& config);

// Pins the first `fixed_colors` (>= 2) classes of PinnedColorSequence and samples `budget`
// uniformly random orders of the remaining edges. Draw i uses a generator
// seeded from (seed, i), so the result does not depend on the thread count.
SearchResult DirectedRandomSearch(const SearchConfig& config);

SearchResult RunSearch(const SearchConfig& config);

struct PathCount {
  std::uint64_t paths = 0;   // Delta_f
  std::uint64_t states = 0;  // lambda_f, nonisomorphic graphs on f vertices
};

// Edge-addition paths from the empty to the complete graph on f vertices, with
// graphs identified up to isomorphism at every step. Throws
// Error(kSearchSpaceTooLarge) for f > 5 unless forced, and always for f > 7.
PathCount CountDistinctPaths(int f, bool force = false);

}  // namespace pqnmc

#endif  // PQNMC_SEARCH_H_
