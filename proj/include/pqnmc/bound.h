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

#ifndef PQNMC_BOUND_H_
#define PQNMC_BOUND_H_

#include <memory>
#include <span>
#include <vector>

#include "pqnmc/edge.h"
#include "pqnmc/entropy.h"
#include "pqnmc/field.h"

namespace pqnmc {

struct BoundParams {
  int n = 2;  // number of databases
  int f = 2;  // number of messages
  FieldSpec field{2};

  // Throws Error(kInvalidArgument) unless n >= 1 and 2 <= f <= kMaxVertices.
  void Validate() const;
};

struct BoundReport {
  MonomialOrder order;
  double bound = 0.0;
  double h_min = 0.0;
  // cond_entropies[v] = H(X_{s_v+1} | X_{s_1}, ..., X_{s_v}).
  std::vector<double> cond_entropies;
};

// H_min / sum_v n^-(v-1) H_v: the capacity outer bound with numerator and
// denominator divided by n^mu. The denominator uses compensated summation.
double BoundFromConditionals(double h_min, std::span<const double> conditionals,
                             int n);

// Evaluates the capacity outer bound of monomial orders for fixed (n, f, q).
// Joint entropies go through a shared cache; evaluators built on the same
// cache may run on different threads.
class BoundEvaluator {
 public:
  explicit BoundEvaluator(const BoundParams& params,
                          std::shared_ptr<EntropyCache> cache = nullptr);

  const BoundParams& params() const { return params_; }
  const EntropyEngine& engine() const { return engine_; }
  double HMin() const { return engine_.HMin(); }

  // Throws Error(kNotAPermutation) unless order lists every edge of K_f once.
  BoundReport Evaluate(const MonomialOrder& order) const;

  // The bound restricted to a nonempty prefix of distinct edges.
  // Throws Error(kDuplicateEdge) on repeated edges.
  double PartialBound(const std::vector<Edge>& prefix) const;

  // Conditional entropies of each prefix element given its predecessors.
  std::vector<double> ConditionalProfile(const std::vector<Edge>& prefix) const;

 private:
  BoundParams params_;
  EntropyEngine engine_;
};

}  // namespace pqnmc

#endif  // PQNMC_BOUND_H_
