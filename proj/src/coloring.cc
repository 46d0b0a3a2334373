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

#include "pqnmc/coloring.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "pqnmc/errors.h"
#include "pqnmc/graph.h"

namespace pqnmc {
namespace {

int ModStar(int x, int f) {
  int r = x % f;
  if (r <= 0) r += f;
  return r;
}

void CheckRange(int f, int min_f) {
  if (f < min_f || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "f = " + std::to_string(f) + " outside [" + std::to_string(min_f) +
                    ", " + std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

ColorPartition ColorSetsOdd(int f) {
  if (f % 2 == 0) {
    throw Error(ErrorCode::kParityError, "odd construction needs odd f");
  }
  CheckRange(f, 3);
  const int eta = (f - 1) / 2;
  ColorPartition out{f, std::vector<std::vector<Edge>>(f)};
  for (int c = 1; c <= f; ++c) {
    auto& set = out.sets[c - 1];
    for (int p = 1; p <= eta; ++p) {
      const int a = ModStar(c - p, f);
      const int b = ModStar(c + p, f);
      set.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(set.begin(), set.end());
  }
  return out;
}

ColorPartition ColorSetsEven(int f) {
  if (f % 2 != 0) {
    throw Error(ErrorCode::kParityError, "even construction needs even f");
  }
  CheckRange(f, 2);
  const int colors = f - 1;
  ColorPartition out{f, std::vector<std::vector<Edge>>(colors)};
  for (const Edge& e : AllEdges(f)) {
    const int residue = e.l < f ? (e.k + e.l - 1) % colors : (2 * e.k - 1) % colors;
    out.sets[residue].push_back(e);
  }
  // AllEdges is lexicographic, so each set already is.
  return out;
}

ColorPartition ColorSets(int f) {
  return f % 2 == 0 ? ColorSetsEven(f) : ColorSetsOdd(f);
}

bool ValidateColoring(const ColorPartition& partition, int f) {
  if (f < 2 || f > kMaxVertices || partition.f != f) return false;
  if (static_cast<int>(partition.sets.size()) != ChromaticIndex(f)) return false;
  EdgeSet seen(f);
  for (const auto& set : partition.sets) {
    EdgeSet color(f);
    for (const Edge& e : set) {
      if (!IsValidEdge(e, f) || seen.Contains(e)) return false;
      seen.Insert(e);
      color.Insert(e);
    }
    if (!IsMatching(color)) return false;
  }
  return seen == EdgeSet::Complete(f);
}

MonomialOrder ConcatenateColors(const ColorPartition& partition,
                                const std::vector<int>& colors) {
  const int count = static_cast<int>(partition.sets.size());
  std::vector<bool> used(count, false);
  if (static_cast<int>(colors.size()) != count) {
    throw Error(ErrorCode::kInvalidPermutation,
                "expected " + std::to_string(count) + " colors");
  }
  MonomialOrder order;
  for (int c : colors) {
    if (c < 1 || c > count || used[c - 1]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "color list is not a permutation of 1.." + std::to_string(count));
    }
    used[c - 1] = true;
    const auto& set = partition.sets[c - 1];
    order.insert(order.end(), set.begin(), set.end());
  }
  return order;
}

std::vector<int> NaturalColorSequence(int f) {
  std::vector<int> colors(ChromaticIndex(f));
  std::iota(colors.begin(), colors.end(), 1);
  if (f % 2 == 1) std::rotate(colors.begin(), colors.begin() + 1, colors.end());
  return colors;
}

std::vector<int> PinnedColorSequence(int f) {
  std::vector<int> colors = NaturalColorSequence(f);
  if (f < 4) return colors;
  const int second = f % 2 == 1 ? 1 : f - 2;
  auto it = std::find(colors.begin(), colors.end(), second);
  std::rotate(colors.begin() + 1, it, it + 1);
  return colors;
}

MonomialOrder EcOrder(int f, const std::optional<std::vector<int>>& colors) {
  const ColorPartition partition = ColorSets(f);
  return ConcatenateColors(partition, colors ? *colors : NaturalColorSequence(f));
}

}  // namespace pqnmc
