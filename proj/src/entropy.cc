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

#include "pqnmc/entropy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "pqnmc/errors.h"
#include "pqnmc/numeric.h"

namespace pqnmc {
namespace {

// Labels are 32-bit, so the engine enumerates at most 2^32 assignments.
constexpr std::uint64_t kMaxEngineAssignments = std::uint64_t{1} << 32;

// Above this many (class, value) pairs the refinement falls back to a hash map.
constexpr std::uint64_t kDenseRemapLimit = std::uint64_t{1} << 24;

}  // namespace

std::uint64_t AssignmentCount(int f, const FieldSpec& spec) {
  if (f < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  std::uint64_t n = 1;
  for (int i = 0; i < f; ++i) {
    n *= spec.q();
    if (n > kMaxAssignments) {
      throw Error(ErrorCode::kEnumerationTooLarge,
                  std::to_string(spec.q()) + "^" + std::to_string(f) +
                      " assignments exceed the enumeration guard");
    }
  }
  return n;
}

JointDistribution ComputeJointDistribution(const std::vector<Edge>& edges, int f,
                                           const FieldSpec& spec) {
  if (f < 2 || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex count must lie in [2, " + std::to_string(kMaxVertices) + "]");
  }
  for (const Edge& e : edges) CheckEdge(e, f);
  const std::uint64_t total = AssignmentCount(f, spec);

  std::map<std::vector<std::uint32_t>, std::uint64_t> tally;
  std::vector<std::uint32_t> w(f, 0);
  std::vector<std::uint32_t> outcome(edges.size());
  for (std::uint64_t x = 0; x < total; ++x) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      outcome[i] = spec.Mul(w[edges[i].k - 1], w[edges[i].l - 1]);
    }
    ++tally[outcome];
    // Advance w as a base-q counter, least significant symbol first.
    for (int j = 0; j < f; ++j) {
      if (++w[j] < spec.q()) break;
      w[j] = 0;
    }
  }

  JointDistribution dist;
  dist.total = total;
  dist.support.reserve(tally.size());
  for (auto& [values, count] : tally) dist.support.push_back({values, count});
  return dist;
}

double EntropyFromCounts(std::vector<std::uint64_t> counts, std::uint64_t total,
                         std::uint32_t q) {
  std::sort(counts.begin(), counts.end());
  const double n = static_cast<double>(total);
  const double log_n = std::log2(n);
  CompensatedSum sum;
  for (std::uint64_t c : counts) {
    if (c == 0 || c == total) continue;
    const double p = static_cast<double>(c) / n;
    sum.Add(p * (log_n - std::log2(static_cast<double>(c))));
  }
  const double bits = sum.Value();
  return q == 2 ? bits : bits / std::log2(static_cast<double>(q));
}

EntropyCache::EntropyCache(int f) { entries_.emplace(EdgeSet(f), 0.0); }

std::optional<double> EntropyCache::Find(const EdgeSet& set) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(set);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void EntropyCache::Insert(const EdgeSet& set, double entropy) {
  std::unique_lock lock(mutex_);
  entries_.emplace(set, entropy);
}

std::size_t EntropyCache::Size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

EntropyEngine::EntropyEngine(int f, const FieldSpec& spec,
                             std::shared_ptr<EntropyCache> cache)
    : f_(f), spec_(spec), cache_(std::move(cache)) {
  if (f < 2 || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex count must lie in [2, " + std::to_string(kMaxVertices) + "]");
  }
  assignments_ = AssignmentCount(f, spec);
  if (assignments_ > kMaxEngineAssignments) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "q^f exceeds the 2^32 assignments the entropy engine supports");
  }
  powers_.resize(f);
  std::uint64_t p = 1;
  for (int i = 0; i < f; ++i) {
    powers_[i] = p;
    p *= spec.q();
  }
  if (!cache_) cache_ = std::make_shared<EntropyCache>(f);
  // Every monomial has the same marginal law, so any single edge will do.
  h_min_ = Entropy(Refine(Root(), Edge{1, 2}));
  cache_->Insert(EdgeSet(f, {Edge{1, 2}}), h_min_);
}

std::uint32_t EntropyEngine::MonomialValue(const Edge& e, std::uint64_t x) const {
  const std::uint32_t q = spec_.q();
  if (q == 2) {
    return static_cast<std::uint32_t>((x >> (e.k - 1)) & (x >> (e.l - 1)) & 1u);
  }
  const auto a = static_cast<std::uint32_t>((x / powers_[e.k - 1]) % q);
  const auto b = static_cast<std::uint32_t>((x / powers_[e.l - 1]) % q);
  return spec_.Mul(a, b);
}

Partition EntropyEngine::Root() const {
  Partition p;
  p.labels.assign(assignments_, 0);
  p.classes = 1;
  return p;
}

void EntropyEngine::RefineInto(const Partition& in, const Edge& e, Partition& out,
                               std::vector<std::uint32_t>& scratch) const {
  CheckEdge(e, f_);
  const std::uint32_t q = spec_.q();
  const std::uint64_t slots = static_cast<std::uint64_t>(in.classes) * q;
  out.labels.resize(assignments_);
  std::uint32_t next = 0;
  if (slots <= kDenseRemapLimit) {
    scratch.assign(slots, std::numeric_limits<std::uint32_t>::max());
    for (std::uint64_t x = 0; x < assignments_; ++x) {
      const std::uint64_t key =
          static_cast<std::uint64_t>(in.labels[x]) * q + MonomialValue(e, x);
      std::uint32_t& slot = scratch[key];
      if (slot == std::numeric_limits<std::uint32_t>::max()) slot = next++;
      out.labels[x] = slot;
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint32_t> remap;
    for (std::uint64_t x = 0; x < assignments_; ++x) {
      const std::uint64_t key =
          static_cast<std::uint64_t>(in.labels[x]) * q + MonomialValue(e, x);
      auto [it, inserted] = remap.emplace(key, next);
      if (inserted) ++next;
      out.labels[x] = it->second;
    }
  }
  out.classes = next;
}

Partition EntropyEngine::Refine(const Partition& in, const Edge& e) const {
  Partition out;
  std::vector<std::uint32_t> scratch;
  RefineInto(in, e, out, scratch);
  return out;
}

double EntropyEngine::Entropy(const Partition& p) const {
  std::vector<std::uint64_t> counts(p.classes, 0);
  for (std::uint32_t label : p.labels) ++counts[label];
  return EntropyFromCounts(std::move(counts), assignments_, spec_.q());
}

Partition EntropyEngine::PartitionOf(const EdgeSet& set) const {
  Partition p = Root();
  Partition next;
  std::vector<std::uint32_t> scratch;
  for (const Edge& e : set.Edges()) {
    RefineInto(p, e, next, scratch);
    std::swap(p, next);
  }
  return p;
}

double EntropyEngine::JointEntropyUncached(const EdgeSet& set) const {
  if (set.Empty()) return 0.0;
  return Entropy(PartitionOf(set));
}

double EntropyEngine::JointEntropy(const EdgeSet& set) const {
  if (set.f() != f_) {
    throw Error(ErrorCode::kInvalidArgument, "edge set built for a different f");
  }
  if (auto hit = cache_->Find(set)) return *hit;
  const double h = JointEntropyUncached(set);
  cache_->Insert(set, h);
  return h;
}

double EntropyEngine::ConditionalEntropy(const Edge& edge,
                                         const EdgeSet& given) const {
  if (given.Contains(edge)) {
    throw Error(ErrorCode::kEdgeAlreadyConditioned,
                ToString(edge) + " is already in the conditioning set");
  }
  return JointEntropy(given.With(edge)) - JointEntropy(given);
}

double HMin(int f, const FieldSpec& spec) {
  return EntropyEngine(f, spec).HMin();
}

}  // namespace pqnmc
