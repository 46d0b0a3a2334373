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

#ifndef PQNMC_GRAPH_H_
#define PQNMC_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pqnmc/edge.h"

namespace pqnmc {

// Simple undirected graph on vertices 1..f, a subgraph of K_f.
class Graph {
 public:
  explicit Graph(int f);
  Graph(int f, const std::vector<Edge>& edges);
  explicit Graph(const EdgeSet& edges);

  static Graph Complete(int f) { return Graph(EdgeSet::Complete(f)); }

  int f() const { return f_; }
  const EdgeSet& edges() const { return edges_; }
  int EdgeCount() const { return edges_.Size(); }

  bool HasEdge(const Edge& e) const { return edges_.Contains(e); }
  void AddEdge(const Edge& e);
  void RemoveEdge(const Edge& e);
  Graph With(const Edge& e) const;

  int Degree(int v) const;
  // Bit (u-1) is set iff u is adjacent to v.
  std::uint32_t Neighbors(int v) const { return adjacency_[v - 1]; }

 private:
  int f_;
  EdgeSet edges_;
  std::array<std::uint32_t, kMaxVertices> adjacency_{};
};

// Shortest path length in edges; nullopt when u and v are disconnected.
std::optional<int> Distance(const Graph& g, int u, int v);

// All-pairs distances, row-major f x f, -1 for infinite.
std::vector<int> DistanceMatrix(const Graph& g);

// Components sorted ascending by (minimum degree inside the component, size,
// smallest vertex); each component lists its vertices in ascending order.
std::vector<std::vector<int>> ConnectedComponents(const Graph& g);

int Diameter(const Graph& g);

// Unordered vertex pairs (u < v) at distance diam(g), in lexicographic order.
// Throws Error(kDisconnectedGraph) when g is not connected.
std::vector<std::pair<int, int>> Periphery(const Graph& g);

bool IsMatching(const EdgeSet& set);
// Perfect for even f, near-perfect (covers f-1 vertices) for odd f.
bool IsPerfectOrNearPerfect(const EdgeSet& set, int f);

// Entry i counts cycles of length i + 3; the vector has f - 2 entries.
using CycleVector = std::vector<std::uint64_t>;

enum class CycleMode { kThroughEdge, kFullGraph };

// Per-length census of all simple cycles of g, enumerated by depth-first
// search over simple paths; each undirected cycle is counted once.
CycleVector CycleCensus(const Graph& g);

// Simple paths from `source` to every vertex, bucketed by length in edges:
// result[t - 1][len] for target t. Computed by dynamic programming over
// vertex subsets.
std::vector<std::vector<std::uint64_t>> SimplePathCounts(const Graph& g, int source);

// Cycles of g + candidate. kFullGraph counts every simple cycle of the
// augmented graph; kThroughEdge only those passing through `candidate`.
// Throws Error(kEdgePresent) if candidate is already in g.
CycleVector InducedCycleVector(const Graph& g, const Edge& candidate,
                               CycleMode mode);

// f - 1 for even f, f for odd f.
int ChromaticIndex(int f);
// Edges per color class of K_f, mu / chromatic index.
int MatchingSize(int f);

}  // namespace pqnmc

#endif  // PQNMC_GRAPH_H_
