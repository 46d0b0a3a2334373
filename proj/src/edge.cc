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

#include "pqnmc/edge.h"

#include <sstream>

#include "pqnmc/errors.h"

namespace pqnmc {

bool IsValidEdge(const Edge& e, int f) {
  return f >= 2 && f <= kMaxVertices && e.k >= 1 && e.k < e.l && e.l <= f;
}

void CheckEdge(const Edge& e, int f) {
  if (!IsValidEdge(e, f)) {
    throw Error(ErrorCode::kInvalidEdge,
                ToString(e) + " is not an edge of K_" + std::to_string(f));
  }
}

int EdgeIndex(const Edge& e, int f) {
  CheckEdge(e, f);
  return (e.k - 1) * f - e.k * (e.k - 1) / 2 + (e.l - e.k - 1);
}

Edge EdgeFromIndex(int index, int f) {
  if (f < 2 || f > kMaxVertices || index < 0 || index >= EdgeCount(f)) {
    throw Error(ErrorCode::kInvalidEdge,
                "edge index " + std::to_string(index) + " out of range");
  }
  int k = 1;
  int row = f - 1;  // edges starting at k
  while (index >= row) {
    index -= row;
    ++k;
    --row;
  }
  return Edge{k, k + 1 + index};
}

std::vector<Edge> AllEdges(int f) {
  std::vector<Edge> edges;
  edges.reserve(EdgeCount(f));
  for (int k = 1; k <= f; ++k) {
    for (int l = k + 1; l <= f; ++l) edges.push_back({k, l});
  }
  return edges;
}

std::string ToString(const Edge& e) {
  return "(" + std::to_string(e.k) + "," + std::to_string(e.l) + ")";
}

EdgeSet::EdgeSet(int f, const std::vector<Edge>& edges) : f_(f) {
  for (const Edge& e : edges) Insert(e);
}

EdgeSet EdgeSet::Complete(int f) {
  EdgeSet s(f);
  for (int i = 0; i < EdgeCount(f); ++i) s.Set(i);
  return s;
}

std::vector<Edge> EdgeSet::Edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < EdgeCount(f_); ++i) {
    if (Test(i)) out.push_back(EdgeFromIndex(i, f_));
  }
  return out;
}

bool IsPermutationOfEdges(const MonomialOrder& order, int f) {
  if (f < 2 || f > kMaxVertices) return false;
  if (static_cast<int>(order.size()) != EdgeCount(f)) return false;
  EdgeSet seen(f);
  for (const Edge& e : order) {
    if (!IsValidEdge(e, f) || seen.Contains(e)) return false;
    seen.Insert(e);
  }
  return true;
}

std::string FormatOrder(const MonomialOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(order[i].k) + "," + std::to_string(order[i].l);
  }
  return out;
}

MonomialOrder ParseOrder(const std::string& text, int f) {
  MonomialOrder order;
  std::stringstream pairs(text);
  std::string item;
  while (std::getline(pairs, item, ';')) {
    Edge e;
    char comma = 0;
    std::stringstream in(item);
    if (!(in >> e.k >> comma >> e.l) || comma != ',') {
      throw Error(ErrorCode::kInvalidArgument, "malformed edge '" + item + "'");
    }
    CheckEdge(e, f);
    order.push_back(e);
  }
  return order;
}

}  // namespace pqnmc
