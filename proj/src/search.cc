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

#include "pqnmc/search.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

#include "pqnmc/coloring.h"
#include "pqnmc/errors.h"
#include "pqnmc/random.h"

namespace pqnmc {
namespace {

struct Candidate {
  double bound = 0.0;
  MonomialOrder order;
  bool valid = false;
};

// Smallest bound wins; equal bounds go to the lexicographically smaller order.
bool Better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.bound != b.bound) return a.bound < b.bound;
  return a.order < b.order;
}

// Splits [0, total) into contiguous chunks, one per worker.
void ParallelChunks(int threads, std::uint64_t total,
                    const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  const int workers = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(threads, 1), total)));
  if (workers == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back(body, w, begin, end);
  }
  for (auto& t : pool) t.join();
}

std::uint64_t Factorial(int k, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) {
    if (out > cap / i) return cap + 1;
    out *= i;
  }
  return out;
}

// The rank-th permutation of `items` in lexicographic order.
std::vector<int> Unrank(std::vector<int> items, std::uint64_t rank) {
  std::vector<int> out;
  while (!items.empty()) {
    const std::uint64_t block = Factorial(static_cast<int>(items.size()) - 1,
                                          ~std::uint64_t{0} - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(items[pick]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::shared_ptr<EntropyCache> CacheFor(const SearchConfig& config) {
  return config.cache ? config.cache
                      : std::make_shared<EntropyCache>(config.params.f);
}

void CheckFixedColors(const SearchConfig& config, int min_fixed) {
  const int colors = ChromaticIndex(config.params.f);
  if (config.fixed_colors < min_fixed || config.fixed_colors > colors) {
    throw Error(ErrorCode::kInvalidArgument,
                "fixed colors must lie in [" + std::to_string(min_fixed) + ", " +
                    std::to_string(colors) + "]");
  }
}

}  // namespace

std::string MethodName(Method method) {
  switch (method) {
    case Method::kEc: return "ec";
    case Method::kEEc: return "e-ec";
    case Method::kLdf: return "ldf";
    case Method::kEbg: return "ebg";
    case Method::kExhaustive: return "exhaustive";
    case Method::kDirectedRandom: return "random";
  }
  return "unknown";
}

Method ParseMethod(const std::string& name) {
  for (Method m : {Method::kEc, Method::kEEc, Method::kLdf, Method::kEbg,
                   Method::kExhaustive, Method::kDirectedRandom}) {
    if (MethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + name + "'");
}

SearchResult EcSearch(const SearchConfig& config) {
  BoundEvaluator evaluator(config.params, config.cache);
  SearchResult result;
  result.best = evaluator.Evaluate(EcOrder(config.params.f));
  result.evaluations = 1;
  return result;
}

SearchResult EEcSearch(const SearchConfig& config) {
  config.params.Validate();
  CheckFixedColors(config, 1);
  const int f = config.params.f;
  const ColorPartition partition = ColorSets(f);

  const std::vector<int> pinned = PinnedColorSequence(f);
  const std::vector<int> fixed(pinned.begin(), pinned.begin() + config.fixed_colors);
  std::vector<int> free(pinned.begin() + config.fixed_colors, pinned.end());
  std::sort(free.begin(), free.end());

  const std::uint64_t total = Factorial(static_cast<int>(free.size()),
                                        config.permutation_cap);
  if (total > config.permutation_cap) {
    throw Error(ErrorCode::kInfeasibleBudget,
                "(" + std::to_string(free.size()) +
                    ")! color permutations exceed the cap of " +
                    std::to_string(config.permutation_cap));
  }

  auto cache = CacheFor(config);
  const int workers = std::max(1, config.threads);
  std::vector<Candidate> best(workers);
  ParallelChunks(workers, total, [&](int w, std::uint64_t begin, std::uint64_t end) {
    BoundEvaluator evaluator(config.params, cache);
    std::vector<int> perm = Unrank(free, begin);
    std::vector<int> colors_order = fixed;
    colors_order.insert(colors_order.end(), perm.begin(), perm.end());
    for (std::uint64_t r = begin; r < end; ++r) {
      std::copy(perm.begin(), perm.end(), colors_order.begin() + config.fixed_colors);
      Candidate c;
      c.order = ConcatenateColors(partition, colors_order);
      c.bound = BoundFromConditionals(evaluator.HMin(),
                                      evaluator.ConditionalProfile(c.order),
                                      config.params.n);
      c.valid = true;
      if (Better(c, best[w])) best[w] = std::move(c);
      std::next_permutation(perm.begin(), perm.end());
    }
  });

  Candidate winner;
  for (auto& c : best) {
    if (Better(c, winner)) winner = std::move(c);
  }
  BoundEvaluator evaluator(config.params, cache);
  SearchResult result;
  result.best = evaluator.Evaluate(winner.order);
  result.evaluations = total;
  return result;
}

SearchResult EbgSearch(const SearchConfig& config) {
  BoundEvaluator evaluator(config.params, config.cache);
  const EntropyEngine& engine = evaluator.engine();
  const int f = config.params.f;
  const int mu = EdgeCount(f);
  const double h_min = evaluator.HMin();
  std::mt19937_64 rng = StreamFor(config.seed, 0);

  SearchResult result;
  MonomialOrder order{Edge{1, 2}};
  EdgeSet chosen(f, order);
  std::vector<double> conditionals{h_min};
  double prefix_entropy = h_min;
  Partition prefix = engine.Refine(engine.Root(), Edge{1, 2});
  Partition refined;
  std::vector<std::uint32_t> scratch;

  for (int v = 2; v <= mu; ++v) {
    std::vector<Edge> candidates;
    std::vector<double> gains;
    TraceStep step;
    for (const Edge& e : AllEdges(f)) {
      if (chosen.Contains(e)) continue;
      const EdgeSet with = chosen.With(e);
      double joint;
      if (auto hit = engine.cache().Find(with)) {
        joint = *hit;
      } else {
        engine.RefineInto(prefix, e, refined, scratch);
        joint = engine.Entropy(refined);
        engine.cache().Insert(with, joint);
      }
      const double gain = joint - prefix_entropy;
      conditionals.push_back(gain);
      const double partial =
          BoundFromConditionals(h_min, conditionals, config.params.n);
      conditionals.pop_back();
      ++result.partial_evaluations;
      if (config.record_trace) step.candidates.emplace_back(e, partial);
      candidates.push_back(e);
      gains.push_back(gain);
    }
    // Minimizing the partial bound is maximizing the conditional entropy:
    // the earlier terms are shared and the new weight is positive.
    const double top = *std::max_element(gains.begin(), gains.end());
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < gains.size(); ++i) {
      if (gains[i] >= top - kGreedyTieTolerance) ties.push_back(i);
    }
    std::size_t pick = ties.front();
    if (config.tie_policy == TiePolicy::kSeededRandom && ties.size() > 1) {
      pick = ties[UniformBelow(rng, ties.size())];
    }
    const Edge next = candidates[pick];
    order.push_back(next);
    chosen.Insert(next);
    conditionals.push_back(gains[pick]);
    prefix_entropy += gains[pick];
    engine.RefineInto(prefix, next, refined, scratch);
    std::swap(prefix, refined);
    // Keep the running entropy identical to the cached joint value.
    prefix_entropy = engine.JointEntropy(chosen);
    if (config.record_trace) {
      step.chosen = next;
      result.trace.push_back(std::move(step));
    }
  }

  result.best = evaluator.Evaluate(order);
  result.evaluations = result.partial_evaluations + 1;
  return result;
}

SearchResult ExhaustiveSearch(const SearchConfig& config) {
  config.params.Validate();
  const int f = config.params.f;
  if (f > 7 || (f > config.exhaustive_max_f && !config.force)) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "exhaustive search over " + std::to_string(EdgeCount(f)) +
                    "! orders refused for f = " + std::to_string(f));
  }
  BoundEvaluator evaluator(config.params, config.cache);
  const EntropyEngine& engine = evaluator.engine();
  const int mu = EdgeCount(f);
  const std::vector<Edge> edges = AllEdges(f);

  // Joint entropy of every subset, indexed by edge-index bit mask. Each subset
  // is reached once as an increasing index sequence, refining its parent.
  std::vector<double> table(std::size_t{1} << mu, 0.0);
  std::vector<Partition> stack(mu + 1);
  std::vector<std::uint32_t> scratch;
  stack[0] = engine.Root();
  std::function<void(std::uint32_t, int, int)> fill =
      [&](std::uint32_t mask, int depth, int start) {
        for (int i = start; i < mu; ++i) {
          const std::uint32_t child = mask | (std::uint32_t{1} << i);
          engine.RefineInto(stack[depth], edges[i], stack[depth + 1], scratch);
          table[child] = engine.Entropy(stack[depth + 1]);
          fill(child, depth + 1, i + 1);
        }
      };
  fill(0, 0, 0);

  const double h_min = evaluator.HMin();
  std::vector<int> path{0};  // edge indices; (1,2) has index 0
  std::vector<double> conditionals{table[1]};
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<int>>> near_best;
  std::vector<int> best_path;
  std::uint64_t leaves = 0;

  std::function<void(std::uint32_t)> descend = [&](std::uint32_t mask) {
    if (static_cast<int>(path.size()) == mu) {
      ++leaves;
      const double bound = BoundFromConditionals(h_min, conditionals,
                                                 config.params.n);
      if (bound < best || (bound == best && path < best_path)) {
        best = bound;
        best_path = path;
      }
      if (config.collect_argmin && bound <= best + kArgminTolerance) {
        near_best.emplace_back(bound, path);
      }
      return;
    }
    for (int i = 0; i < mu; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (mask & bit) continue;
      path.push_back(i);
      conditionals.push_back(table[mask | bit] - table[mask]);
      descend(mask | bit);
      conditionals.pop_back();
      path.pop_back();
    }
  };
  descend(1);

  auto to_order = [&](const std::vector<int>& indices) {
    MonomialOrder order;
    for (int i : indices) order.push_back(edges[i]);
    return order;
  };
  SearchResult result;
  result.best = evaluator.Evaluate(to_order(best_path));
  result.evaluations = leaves;
  for (const auto& [bound, indices] : near_best) {
    if (bound <= best + kArgminTolerance) result.argmin.push_back(to_order(indices));
  }
  std::sort(result.argmin.begin(), result.argmin.end());
  return result;
}

SearchResult DirectedRandomSearch(const SearchConfig& config) {
  config.params.Validate();
  CheckFixedColors(config, 2);
  if (config.budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "budget must be at least 1");
  }
  const int f = config.params.f;
  const ColorPartition partition = ColorSets(f);
  const std::vector<int> sequence = PinnedColorSequence(f);
  MonomialOrder prefix;
  for (int c = 0; c < config.fixed_colors; ++c) {
    const auto& set = partition.sets[sequence[c] - 1];
    prefix.insert(prefix.end(), set.begin(), set.end());
  }
  const EdgeSet pinned(f, prefix);
  std::vector<Edge> rest;
  for (const Edge& e : AllEdges(f)) {
    if (!pinned.Contains(e)) rest.push_back(e);
  }

  auto cache = CacheFor(config);
  BoundEvaluator evaluator(config.params, cache);
  const EntropyEngine& engine = evaluator.engine();
  const std::vector<double> prefix_conditionals = evaluator.ConditionalProfile(prefix);
  const Partition prefix_partition = engine.PartitionOf(pinned);
  const double prefix_entropy = engine.JointEntropy(pinned);
  const double h_min = evaluator.HMin();

  // The denominator of the bound is sum_v n^-(v-1) H_v and the remaining
  // conditional entropies sum to H(all) - H(prefix), so a draw whose prefix
  // plus that mass at the next weight cannot beat the incumbent is abandoned.
  const double full_entropy = engine.JointEntropy(EdgeSet::Complete(f));
  const double inv_n = 1.0 / config.params.n;
  double prefix_denominator = 0.0;
  double prefix_weight = 1.0;
  for (double h : prefix_conditionals) {
    prefix_denominator += prefix_weight * h;
    prefix_weight *= inv_n;
  }
  constexpr double kPruneMargin = 1e-12;

  const int workers = std::max(1, config.threads);
  std::vector<Candidate> best(workers);
  std::vector<std::uint64_t> pruned_draws(workers, 0);
  ParallelChunks(workers, config.budget,
                 [&](int w, std::uint64_t begin, std::uint64_t end) {
    Partition current;
    Partition next;
    std::vector<std::uint32_t> scratch;
    std::vector<double> conditionals;
    double incumbent = 0.0;  // largest denominator seen by this worker
    for (std::uint64_t draw = begin; draw < end; ++draw) {
      std::mt19937_64 rng = StreamFor(config.seed, draw);
      std::vector<Edge> tail = rest;
      FisherYates(tail, rng);
      conditionals = prefix_conditionals;
      current = prefix_partition;
      double previous = prefix_entropy;
      double denominator = prefix_denominator;
      double weight = prefix_weight;
      bool pruned = false;
      for (const Edge& e : tail) {
        if (best[w].valid &&
            denominator + weight * (full_entropy - previous) <
                incumbent * (1.0 - kPruneMargin)) {
          pruned = true;
          break;
        }
        engine.RefineInto(current, e, next, scratch);
        std::swap(current, next);
        const double joint = engine.Entropy(current);
        conditionals.push_back(joint - previous);
        denominator += weight * (joint - previous);
        weight *= inv_n;
        previous = joint;
      }
      if (pruned) {
        ++pruned_draws[w];
        continue;
      }
      incumbent = std::max(incumbent, denominator);
      Candidate c;
      c.bound = BoundFromConditionals(h_min, conditionals, config.params.n);
      c.valid = true;
      if (!best[w].valid || c.bound <= best[w].bound) {
        c.order = prefix;
        c.order.insert(c.order.end(), tail.begin(), tail.end());
        if (Better(c, best[w])) best[w] = std::move(c);
      }
    }
  });

  Candidate winner;
  for (auto& c : best) {
    if (Better(c, winner)) winner = std::move(c);
  }
  SearchResult result;
  result.best = evaluator.Evaluate(winner.order);
  result.evaluations = config.budget;
  for (std::uint64_t p : pruned_draws) result.partial_evaluations += p;
  return result;
}

SearchResult RunSearch(const SearchConfig& config) {
  switch (config.method) {
    case Method::kEc: return EcSearch(config);
    case Method::kEEc: return EEcSearch(config);
    case Method::kLdf: return LdfSearch(config);
    case Method::kEbg: return EbgSearch(config);
    case Method::kExhaustive: return ExhaustiveSearch(config);
    case Method::kDirectedRandom: return DirectedRandomSearch(config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method");
}

}  // namespace pqnmc
