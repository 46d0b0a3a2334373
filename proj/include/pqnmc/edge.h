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

#ifndef PQNMC_EDGE_H_
#define PQNMC_EDGE_H_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pqnmc {

// Largest supported vertex count. Edge sets of K_16 fit in 128 bits.
inline constexpr int kMaxVertices = 16;

// Number of edges of K_f, i.e. the number of candidate monomials.
constexpr int EdgeCount(int f) { return f * (f - 1) / 2; }

// An edge (k, l) of K_f with 1 <= k < l <= f; names the monomial W_k * W_l.
struct Edge {
  int k = 0;
  int l = 0;

  auto operator<=>(const Edge&) const = default;
};

bool IsValidEdge(const Edge& e, int f);

// Throws Error(kInvalidEdge) when `e` is not an edge of K_f.
void CheckEdge(const Edge& e, int f);

// Lexicographic rank on [f] x [f]: (1,2) -> 0, (1,3) -> 1, ..., (f-1,f) -> mu-1.
int EdgeIndex(const Edge& e, int f);
Edge EdgeFromIndex(int index, int f);

// All edges of K_f in lexicographic order.
std::vector<Edge> AllEdges(int f);

std::string ToString(const Edge& e);

using MonomialOrder = std::vector<Edge>;

// Set of edges of K_f stored as a bit mask over lexicographic edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int f) : f_(f) {}
  EdgeSet(int f, const std::vector<Edge>& edges);

  static EdgeSet Complete(int f);

  int f() const { return f_; }

  bool Contains(const Edge& e) const { return Test(EdgeIndex(e, f_)); }
  void Insert(const Edge& e) { Set(EdgeIndex(e, f_)); }
  void Erase(const Edge& e) { Reset(EdgeIndex(e, f_)); }

  bool Test(int index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void Set(int index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void Reset(int index) {
    words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
  }

  int Size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  bool Empty() const { return words_[0] == 0 && words_[1] == 0; }

  // Members in lexicographic order.
  std::vector<Edge> Edges() const;

  EdgeSet With(const Edge& e) const {
    EdgeSet out = *this;
    out.Insert(e);
    return out;
  }

  bool IsSubsetOf(const EdgeSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 &&
           (words_[1] & ~other.words_[1]) == 0;
  }

  const std::array<std::uint64_t, 2>& words() const { return words_; }

  bool operator==(const EdgeSet&) const = default;

 private:
  int f_ = 0;
  std::array<std::uint64_t, 2> words_{};
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const {
    std::uint64_t h = s.words()[0] * 0x9E3779B97F4A7C15ull;
    h ^= (s.words()[1] + 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2));
    h ^= static_cast<std::uint64_t>(s.f()) << 57;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// True iff `order` contains every edge of K_f exactly once.
bool IsPermutationOfEdges(const MonomialOrder& order, int f);

// Semicolon separated 1-based "k,l" pairs, e.g. "1,5;2,4;3,6".
std::string FormatOrder(const MonomialOrder& order);
MonomialOrder ParseOrder(const std::string& text, int f);

}  // namespace pqnmc

#endif  // PQNMC_EDGE_H_
