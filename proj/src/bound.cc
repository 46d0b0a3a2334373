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

#include "pqnmc/bound.h"

#include <cmath>
#include <string>

#include "pqnmc/errors.h"
#include "pqnmc/numeric.h"

namespace pqnmc {

void BoundParams::Validate() const {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (f < 2 || f > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "f must lie in [2, " + std::to_string(kMaxVertices) + "]");
  }
}

double BoundFromConditionals(double h_min, std::span<const double> conditionals,
                             int n) {
  CompensatedSum denominator;
  const double base = static_cast<double>(n);
  for (std::size_t v = 0; v < conditionals.size(); ++v) {
    denominator.Add(std::pow(base, -static_cast<double>(v)) * conditionals[v]);
  }
  return h_min / denominator.Value();
}

BoundEvaluator::BoundEvaluator(const BoundParams& params,
                               std::shared_ptr<EntropyCache> cache)
    : params_((params.Validate(), params)),
      engine_(params.f, params.field, std::move(cache)) {}

std::vector<double> BoundEvaluator::ConditionalProfile(
    const std::vector<Edge>& prefix) const {
  const int f = params_.f;
  std::vector<double> conditionals(prefix.size());
  EdgeSet set(f);
  double previous = 0.0;

  // The partition is only materialized once a cache miss requires it; it then
  // tracks the prefix of length `materialized`.
  Partition partition;
  Partition next;
  std::vector<std::uint32_t> scratch;
  std::size_t materialized = 0;
  bool have_partition = false;

  for (std::size_t v = 0; v < prefix.size(); ++v) {
    const Edge& e = prefix[v];
    CheckEdge(e, f);
    if (set.Contains(e)) {
      throw Error(ErrorCode::kDuplicateEdge, ToString(e) + " appears twice");
    }
    set.Insert(e);
    double joint;
    if (auto hit = engine_.cache().Find(set)) {
      joint = *hit;
    } else {
      if (!have_partition) {
        partition = engine_.Root();
        materialized = 0;
        have_partition = true;
      }
      for (; materialized <= v; ++materialized) {
        engine_.RefineInto(partition, prefix[materialized], next, scratch);
        std::swap(partition, next);
      }
      joint = engine_.Entropy(partition);
      engine_.cache().Insert(set, joint);
    }
    conditionals[v] = joint - previous;
    previous = joint;
  }
  return conditionals;
}

BoundReport BoundEvaluator::Evaluate(const MonomialOrder& order) const {
  if (!IsPermutationOfEdges(order, params_.f)) {
    throw Error(ErrorCode::kNotAPermutation,
                "order is not a permutation of the edges of K_" +
                    std::to_string(params_.f));
  }
  BoundReport report;
  report.order = order;
  report.h_min = HMin();
  report.cond_entropies = ConditionalProfile(order);
  report.bound = BoundFromConditionals(report.h_min, report.cond_entropies,
                                       params_.n);
  return report;
}

double BoundEvaluator::PartialBound(const std::vector<Edge>& prefix) const {
  if (prefix.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "prefix must be nonempty");
  }
  const std::vector<double> conditionals = ConditionalProfile(prefix);
  return BoundFromConditionals(HMin(), conditionals, params_.n);
}

}  // namespace pqnmc
