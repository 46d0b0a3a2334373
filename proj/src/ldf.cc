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

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "pqnmc/errors.h"
#include "pqnmc/graph.h"
#include "pqnmc/random.h"
#include "pqnmc/search.h"

namespace pqnmc {
namespace {

// Min-degree vertex of a component, smallest label on ties.
int PickVertex(const Graph& g, const std::vector<int>& component) {
  int best = component.front();
  for (int v : component) {
    if (g.Degree(v) < g.Degree(best)) best = v;
  }
  return best;
}

Edge Normalized(int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; }

}  // namespace

MonomialOrder LdfOrder(int f, std::optional<Edge> start) {
  if (f < 2 || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "longest-distance-first needs 2 <= f <= " +
                    std::to_string(kMaxVertices));
  }
  const Edge first = start.value_or(Edge{1, 2});
  CheckEdge(first, f);
  if (f == 2) return {first};

  Graph g(f);
  MonomialOrder order;
  auto add = [&](const Edge& e) {
    g.AddEdge(e);
    order.push_back(e);
  };
  add(first);

  // Join the two leading components at minimum-degree vertices. Isolated
  // vertices sort first, so this lays down a (near) perfect matching before
  // linking the pieces into a Hamiltonian path.
  for (int i = 1; i <= f - 2; ++i) {
    const auto components = ConnectedComponents(g);
    add(Normalized(PickVertex(g, components[0]), PickVertex(g, components[1])));
  }

  // The path's endpoints are its unique peripheral pair; joining them closes a
  // length-f cycle.
  const auto ends = Periphery(g).front();
  add(Edge{ends.first, ends.second});

  if (g.EdgeCount() == EdgeCount(f)) return order;
  return OrderInnerEdges(g, order);
}

MonomialOrder LdfOrderSeeded(int f, std::uint64_t seed) {
  if (f < 2 || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "longest-distance-first needs 2 <= f <= " +
                    std::to_string(kMaxVertices));
  }
  std::mt19937_64 rng = StreamFor(seed, 0);
  const int index = static_cast<int>(UniformBelow(rng, EdgeCount(f)));
  return LdfOrder(f, EdgeFromIndex(index, f));
}

MonomialOrder OrderInnerEdges(const Graph& graph, const std::vector<Edge>& partial) {
  const int f = graph.f();
  if (EdgeSet(f, partial) != graph.edges() ||
      static_cast<int>(partial.size()) != graph.EdgeCount()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partial order does not match the graph's edges");
  }
  if (graph.EdgeCount() == EdgeCount(f)) {
    throw Error(ErrorCode::kGraphComplete, "no edge left to order");
  }

  Graph g = graph;
  MonomialOrder order = partial;
  for (;;) {
    std::vector<Edge> missing;
    for (const Edge& e : AllEdges(f)) {
      if (!g.HasEdge(e)) missing.push_back(e);
    }
    if (missing.size() <= 2) {
      order.insert(order.end(), missing.begin(), missing.end());
      return order;
    }
    // Through-edge counts differ from full-graph counts by the census of g,
    // which is common to all candidates, so the argmin is the same.
    std::map<int, std::vector<std::vector<std::uint64_t>>> paths_from;
    const Edge* best = nullptr;
    CycleVector best_cycles;
    for (const Edge& e : missing) {
      auto it = paths_from.find(e.k);
      if (it == paths_from.end()) {
        it = paths_from.emplace(e.k, SimplePathCounts(g, e.k)).first;
      }
      const auto& to_target = it->second[e.l - 1];
      CycleVector cycles(to_target.begin() + 2, to_target.end());
      if (best == nullptr || cycles < best_cycles) {
        best = &e;
        best_cycles = std::move(cycles);
      }
    }
    g.AddEdge(*best);
    order.push_back(*best);
  }
}

SearchResult LdfSearch(const SearchConfig& config) {
  BoundEvaluator evaluator(config.params, config.cache);
  const MonomialOrder order =
      config.tie_policy == TiePolicy::kSeededRandom
          ? LdfOrderSeeded(config.params.f, config.seed)
          : LdfOrder(config.params.f);
  SearchResult result;
  result.best = evaluator.Evaluate(order);
  result.evaluations = 1;
  return result;
}

}  // namespace pqnmc
