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

#include "pqnmc/graph.h"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>
#include <tuple>

#include "pqnmc/errors.h"

namespace pqnmc {
namespace {

void CheckVertex(const Graph& g, int v) {
  if (v < 1 || v > g.f()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " outside [1, " +
                    std::to_string(g.f()) + "]");
  }
}

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> BfsFrom(const Graph& g, int source) {
  std::vector<int> dist(g.f(), -1);
  std::queue<int> frontier;
  dist[source - 1] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    std::uint32_t nbrs = g.Neighbors(u);
    while (nbrs) {
      const int w = std::countr_zero(nbrs) + 1;
      nbrs &= nbrs - 1;
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

// Counts simple paths start -> ... -> v over vertices above `start` that close
// back to `start`, i.e. every cycle whose smallest vertex is `start`, twice.
void CountCyclesFrom(const Graph& g, int start, int current, std::uint32_t visited,
                     int length, CycleVector& counts) {
  std::uint32_t nbrs = g.Neighbors(current) & ~visited;
  while (nbrs) {
    const int w = std::countr_zero(nbrs) + 1;
    nbrs &= nbrs - 1;
    if (w < start) continue;
    const std::uint32_t bit = std::uint32_t{1} << (w - 1);
    if (length + 1 >= 2 && (g.Neighbors(w) >> (start - 1) & 1u)) {
      // Path start..w has length+1 edges; closing it adds one more.
      const int cycle_length = length + 2;
      if (cycle_length >= 3) ++counts[cycle_length - 3];
    }
    CountCyclesFrom(g, start, w, visited | bit, length + 1, counts);
  }
}

}  // namespace

Graph::Graph(int f) : f_(f), edges_(f) {
  if (f < 1 || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
  }
}

Graph::Graph(int f, const std::vector<Edge>& edges) : Graph(f) {
  for (const Edge& e : edges) AddEdge(e);
}

Graph::Graph(const EdgeSet& edges) : Graph(edges.f()) {
  for (const Edge& e : edges.Edges()) AddEdge(e);
}

void Graph::AddEdge(const Edge& e) {
  edges_.Insert(e);
  adjacency_[e.k - 1] |= std::uint32_t{1} << (e.l - 1);
  adjacency_[e.l - 1] |= std::uint32_t{1} << (e.k - 1);
}

void Graph::RemoveEdge(const Edge& e) {
  edges_.Erase(e);
  adjacency_[e.k - 1] &= ~(std::uint32_t{1} << (e.l - 1));
  adjacency_[e.l - 1] &= ~(std::uint32_t{1} << (e.k - 1));
}

Graph Graph::With(const Edge& e) const {
  Graph out = *this;
  out.AddEdge(e);
  return out;
}

int Graph::Degree(int v) const { return std::popcount(adjacency_[v - 1]); }

std::optional<int> Distance(const Graph& g, int u, int v) {
  CheckVertex(g, u);
  CheckVertex(g, v);
  const int d = BfsFrom(g, u)[v - 1];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<int> DistanceMatrix(const Graph& g) {
  std::vector<int> out;
  out.reserve(g.f() * g.f());
  for (int u = 1; u <= g.f(); ++u) {
    const std::vector<int> row = BfsFrom(g, u);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::vector<int>> ConnectedComponents(const Graph& g) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(g.f(), false);
  for (int v = 1; v <= g.f(); ++v) {
    if (seen[v - 1]) continue;
    const std::vector<int> dist = BfsFrom(g, v);
    std::vector<int> component;
    for (int u = 1; u <= g.f(); ++u) {
      if (dist[u - 1] >= 0) {
        seen[u - 1] = true;
        component.push_back(u);
      }
    }
    components.push_back(std::move(component));
  }
  auto key = [&g](const std::vector<int>& c) {
    int min_degree = kMaxVertices;
    for (int v : c) min_degree = std::min(min_degree, g.Degree(v));
    return std::make_tuple(min_degree, c.size(), c.front());
  };
  std::stable_sort(components.begin(), components.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return components;
}

int Diameter(const Graph& g) {
  int diameter = 0;
  const std::vector<int> dist = DistanceMatrix(g);
  for (int d : dist) {
    if (d < 0) {
      throw Error(ErrorCode::kDisconnectedGraph, "graph is not connected");
    }
    diameter = std::max(diameter, d);
  }
  return diameter;
}

std::vector<std::pair<int, int>> Periphery(const Graph& g) {
  const int diameter = Diameter(g);
  const std::vector<int> dist = DistanceMatrix(g);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= g.f(); ++u) {
    for (int v = u + 1; v <= g.f(); ++v) {
      if (dist[(u - 1) * g.f() + (v - 1)] == diameter) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

bool IsMatching(const EdgeSet& set) {
  std::uint32_t covered = 0;
  for (const Edge& e : set.Edges()) {
    const std::uint32_t ends =
        (std::uint32_t{1} << (e.k - 1)) | (std::uint32_t{1} << (e.l - 1));
    if (covered & ends) return false;
    covered |= ends;
  }
  return true;
}

bool IsPerfectOrNearPerfect(const EdgeSet& set, int f) {
  if (!IsMatching(set)) return false;
  const int covered = 2 * set.Size();
  return f % 2 == 0 ? covered == f : covered == f - 1;
}

CycleVector CycleCensus(const Graph& g) {
  CycleVector twice(std::max(g.f() - 2, 0), 0);
  for (int s = 1; s <= g.f(); ++s) {
    CountCyclesFrom(g, s, s, std::uint32_t{1} << (s - 1), 0, twice);
  }
  for (auto& c : twice) c /= 2;
  return twice;
}

std::vector<std::vector<std::uint64_t>> SimplePathCounts(const Graph& g,
                                                          int source) {
  CheckVertex(g, source);
  const int f = g.f();
  const std::uint32_t full = (std::uint32_t{1} << f) - 1;
  const std::uint32_t src_bit = std::uint32_t{1} << (source - 1);
  // ways[mask * f + v]: simple paths from source visiting exactly `mask`,
  // ending at v.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(full + 1) * f, 0);
  std::vector<std::vector<std::uint64_t>> result(
      f, std::vector<std::uint64_t>(f, 0));
  ways[static_cast<std::size_t>(src_bit) * f + (source - 1)] = 1;
  for (std::uint32_t mask = src_bit; mask <= full; ++mask) {
    if (!(mask & src_bit)) continue;
    const int length = std::popcount(mask) - 1;
    for (int v = 0; v < f; ++v) {
      const std::uint64_t count = ways[static_cast<std::size_t>(mask) * f + v];
      if (count == 0) continue;
      result[v][length] += count;
      std::uint32_t next = g.Neighbors(v + 1) & ~mask;
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ways[static_cast<std::size_t>(mask | (std::uint32_t{1} << w)) * f + w] +=
            count;
      }
    }
  }
  return result;
}

CycleVector InducedCycleVector(const Graph& g, const Edge& candidate,
                               CycleMode mode) {
  CheckEdge(candidate, g.f());
  if (g.HasEdge(candidate)) {
    throw Error(ErrorCode::kEdgePresent, ToString(candidate) + " already in graph");
  }
  if (mode == CycleMode::kFullGraph) return CycleCensus(g.With(candidate));
  CycleVector out(g.f() - 2, 0);
  const auto paths = SimplePathCounts(g, candidate.k);
  const auto& to_target = paths[candidate.l - 1];
  for (int length = 2; length < g.f(); ++length) {
    out[length - 2] = to_target[length];
  }
  return out;
}

int ChromaticIndex(int f) {
  if (f < 2) throw Error(ErrorCode::kInvalidArgument, "f must be at least 2");
  return f % 2 == 0 ? f - 1 : f;
}

int MatchingSize(int f) { return EdgeCount(f) / ChromaticIndex(f); }

}  // namespace pqnmc
