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

#ifndef PQNMC_ENTROPY_H_
#define PQNMC_ENTROPY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "pqnmc/edge.h"
#include "pqnmc/field.h"

namespace pqnmc {

// Largest number of message assignments q^f the engine will enumerate.
inline constexpr std::uint64_t kMaxAssignments = std::uint64_t{1} << 34;

// Throws Error(kEnumerationTooLarge) when q^f exceeds kMaxAssignments.
std::uint64_t AssignmentCount(int f, const FieldSpec& spec);

// Exact law of a list of monomials. Each outcome carries the number of
// message assignments in F_q^f producing it; probabilities are count / total.
struct JointDistribution {
  struct Outcome {
    std::vector<std::uint32_t> values;
    std::uint64_t count = 0;
  };
  std::vector<Outcome> support;  // sorted by `values`
  std::uint64_t total = 0;
};

JointDistribution ComputeJointDistribution(const std::vector<Edge>& edges, int f,
                                           const FieldSpec& spec);

// Entropy in q-ary units of a distribution given by its integer counts.
// The counts are summed in sorted order so equal multisets give equal bits.
double EntropyFromCounts(std::vector<std::uint64_t> counts, std::uint64_t total,
                         std::uint32_t q);

// Memoized joint entropies keyed by edge set. Reads are shared, inserts are
// exclusive; the empty set is always present with entropy 0.
class EntropyCache {
 public:
  explicit EntropyCache(int f);

  std::optional<double> Find(const EdgeSet& set) const;
  void Insert(const EdgeSet& set, double entropy);
  std::size_t Size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<EdgeSet, double, EdgeSetHash> entries_;
};

// Partition of the q^f message assignments into classes of equal monomial
// values. Refining by an edge splits each class by the value of that monomial.
struct Partition {
  std::vector<std::uint32_t> labels;
  std::uint32_t classes = 1;
};

// Exact entropies of quadratic monomials W_k W_l of f i.i.d. uniform symbols
// over a prime field.
class EntropyEngine {
 public:
  EntropyEngine(int f, const FieldSpec& spec,
                std::shared_ptr<EntropyCache> cache = nullptr);

  int f() const { return f_; }
  const FieldSpec& field() const { return spec_; }
  std::uint64_t assignments() const { return assignments_; }
  EntropyCache& cache() const { return *cache_; }
  const std::shared_ptr<EntropyCache>& shared_cache() const { return cache_; }

  // Value of monomial `e` under assignment number `x` (base-q digits of x).
  std::uint32_t MonomialValue(const Edge& e, std::uint64_t x) const;

  Partition Root() const;
  Partition Refine(const Partition& in, const Edge& e) const;
  void RefineInto(const Partition& in, const Edge& e, Partition& out,
                  std::vector<std::uint32_t>& scratch) const;
  double Entropy(const Partition& p) const;
  Partition PartitionOf(const EdgeSet& set) const;

  // Memoized in the cache. 0 <= H <= f.
  double JointEntropy(const EdgeSet& set) const;
  double JointEntropyUncached(const EdgeSet& set) const;

  // H(edge | given). Throws Error(kEdgeAlreadyConditioned) if edge is in given.
  double ConditionalEntropy(const Edge& edge, const EdgeSet& given) const;

  // Common entropy of any single monomial.
  double HMin() const { return h_min_; }

 private:
  int f_;
  FieldSpec spec_;
  std::uint64_t assignments_;
  std::vector<std::uint64_t> powers_;  // q^i for i < f
  std::shared_ptr<EntropyCache> cache_;
  double h_min_ = 0.0;
};

double HMin(int f, const FieldSpec& spec);

}  // namespace pqnmc

#endif  // PQNMC_ENTROPY_H_
