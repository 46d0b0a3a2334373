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
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "pqnmc/errors.h"
#include "pqnmc/search.h"

namespace pqnmc {
namespace {

// Graphs on f <= 7 vertices as bit masks over lexicographic edge indices.
class Canonicalizer {
 public:
  explicit Canonicalizer(int f) : f_(f), edges_(AllEdges(f)) {
    std::vector<int> perm(f);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> image(edges_.size());
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        const int a = perm[edges_[i].k - 1];
        const int b = perm[edges_[i].l - 1];
        image[i] = EdgeIndex(Edge{std::min(a, b), std::max(a, b)}, f);
      }
      images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // Smallest relabeled mask over all vertex permutations.
  std::uint64_t Canonical(std::uint64_t mask) const {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& image : images_) {
      std::uint64_t relabeled = 0;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (mask >> i & 1u) relabeled |= std::uint64_t{1} << image[i];
      }
      best = std::min(best, relabeled);
    }
    return best;
  }

  int edge_count() const { return static_cast<int>(edges_.size()); }

 private:
  int f_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> images_;
};

}  // namespace

PathCount CountDistinctPaths(int f, bool force) {
  if (f < 2) throw Error(ErrorCode::kInvalidArgument, "f must be at least 2");
  if (f > 7 || (f > 5 && !force)) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "isomorphism-class path count refused for f = " + std::to_string(f));
  }
  const Canonicalizer canon(f);
  const int mu = canon.edge_count();
  const std::uint64_t complete = (std::uint64_t{1} << mu) - 1;

  // paths[c]: distinct class sequences from class c up to K_f.
  std::unordered_map<std::uint64_t, std::uint64_t> paths;
  std::function<std::uint64_t(std::uint64_t)> count = [&](std::uint64_t mask) {
    if (mask == complete) return std::uint64_t{1};
    if (auto it = paths.find(mask); it != paths.end()) return it->second;
    std::set<std::uint64_t> successors;
    for (int i = 0; i < mu; ++i) {
      if (!(mask >> i & 1u)) successors.insert(canon.Canonical(mask | std::uint64_t{1} << i));
    }
    std::uint64_t total = 0;
    for (std::uint64_t next : successors) total += count(next);
    paths.emplace(mask, total);
    return total;
  };

  PathCount out;
  out.paths = count(0);
  out.states = paths.size() + 1;  // plus K_f itself
  return out;
}

}  // namespace pqnmc
