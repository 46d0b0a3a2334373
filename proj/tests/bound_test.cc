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
#include <cmath>

#include "gtest/gtest.h"
#include "oracle.h"
#include "pqnmc/bound.h"
#include "pqnmc/coloring.h"
#include "pqnmc/random.h"

namespace pqnmc {
namespace {

BoundParams Params(int f, int n = 2, std::uint32_t q = 2) {
  BoundParams p;
  p.f = f;
  p.n = n;
  p.field = FieldSpec(q);
  return p;
}

const MonomialOrder kPrintedLdf = {{1, 2}, {3, 4}, {5, 6}, {1, 6}, {2, 3},
                                   {4, 5}, {1, 4}, {2, 5}, {3, 6}, {2, 4},
                                   {1, 3}, {1, 5}, {2, 6}, {3, 5}, {4, 6}};

TEST(BoundTest, GoldenOrders) {
  BoundEvaluator six(Params(6));
  EXPECT_NEAR(six.Evaluate(EcOrder(6)).bound, 0.5198943946817, 1e-12);
  EXPECT_NEAR(six.Evaluate(EcOrder(6, std::vector<int>{1, 2, 5, 3, 4})).bound,
              0.5198121367672, 1e-12);
  EXPECT_NEAR(six.Evaluate(kPrintedLdf).bound, 0.5197824997350, 1e-12);
  EXPECT_NEAR(BoundEvaluator(Params(5)).Evaluate(EcOrder(5)).bound, 0.5382035621102,
              1e-12);
}

TEST(BoundTest, ReportIsConsistent) {
  BoundEvaluator eval(Params(6));
  BoundReport r = eval.Evaluate(kPrintedLdf);
  EXPECT_EQ(r.order, kPrintedLdf);
  EXPECT_EQ(r.h_min, eval.HMin());
  ASSERT_EQ(r.cond_entropies.size(), 15u);
  EXPECT_EQ(r.cond_entropies[0], eval.HMin());
  EXPECT_EQ(r.bound, BoundFromConditionals(r.h_min, r.cond_entropies, 2));
}

TEST(BoundTest, PartialBounds) {
  for (int f = 2; f <= 7; ++f) {
    BoundEvaluator eval(Params(f));
    EXPECT_DOUBLE_EQ(eval.PartialBound({{1, 2}}), 1.0);
    if (f >= 4) EXPECT_NEAR(eval.PartialBound({{1, 2}, {3, 4}}), 2.0 / 3.0, 1e-15);
  }
  BoundEvaluator eval(Params(4, 3));
  EXPECT_NEAR(eval.PartialBound({{1, 2}, {3, 4}}), 3.0 / 4.0, 1e-15);
}

// n^(mu-1) H_min / sum_v n^(mu-v) H_v with exact integer weights.
double TextbookBound(const std::vector<double>& cond, double h_min, int n) {
  const std::size_t mu = cond.size();
  long double num = h_min, den = 0;
  for (std::size_t i = 1; i < mu; ++i) num *= n;
  for (std::size_t v = 0; v < mu; ++v) {
    std::uint64_t w = 1;
    for (std::size_t i = v + 1; i < mu; ++i) w *= n;
    den += static_cast<long double>(w) * cond[v];
  }
  return static_cast<double>(num / den);
}

TEST(BoundTest, MatchesUnnormalizedForm) {
  for (int f = 3; f <= 5; ++f) {
    for (int n : {1, 2, 3, 5}) {
      BoundEvaluator eval(Params(f, n));
      auto rng = StreamFor(f * 10 + n, 0);
      for (int trial = 0; trial < 10; ++trial) {
        MonomialOrder order = AllEdges(f);
        FisherYates(order, rng);
        BoundReport r = eval.Evaluate(order);
        EXPECT_NEAR(r.bound, TextbookBound(r.cond_entropies, r.h_min, n), 1e-14);
      }
    }
  }
}

TEST(BoundTest, SingleDatabaseIsEntropyRatio) {
  for (int f = 3; f <= 7; ++f) {
    BoundEvaluator eval(Params(f, 1));
    const double expected =
        eval.HMin() / eval.engine().JointEntropyUncached(EdgeSet::Complete(f));
    auto rng = StreamFor(f, 9);
    for (int trial = 0; trial < 5; ++trial) {
      MonomialOrder order = AllEdges(f);
      FisherYates(order, rng);
      EXPECT_NEAR(eval.Evaluate(order).bound, expected, 1e-13);
    }
  }
}

TEST(BoundTest, RelabelingLeavesBoundUnchanged) {
  BoundEvaluator eval(Params(6));
  auto rng = StreamFor(6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    MonomialOrder order = AllEdges(6);
    FisherYates(order, rng);
    std::vector<int> perm = {1, 2, 3, 4, 5, 6};
    FisherYates(perm, rng);
    MonomialOrder image;
    for (const Edge& e : order) {
      int a = perm[e.k - 1], b = perm[e.l - 1];
      image.push_back({std::min(a, b), std::max(a, b)});
    }
    EXPECT_EQ(eval.Evaluate(order).bound, eval.Evaluate(image).bound);
  }
}

TEST(BoundTest, AdjacentSwapOnlyTouchesTwoTerms) {
  BoundEvaluator eval(Params(6));
  auto rng = StreamFor(6, 7);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialOrder order = AllEdges(6);
    FisherYates(order, rng);
    std::size_t i = UniformBelow(rng, order.size() - 1);
    MonomialOrder swapped = order;
    std::swap(swapped[i], swapped[i + 1]);
    BoundReport a = eval.Evaluate(order), b = eval.Evaluate(swapped);
    for (std::size_t v = 0; v < order.size(); ++v) {
      if (v != i && v != i + 1) EXPECT_EQ(a.cond_entropies[v], b.cond_entropies[v]);
    }
    EXPECT_NEAR(a.cond_entropies[i] + a.cond_entropies[i + 1],
                b.cond_entropies[i] + b.cond_entropies[i + 1], 1e-14);
  }
}

TEST(BoundTest, PartialBoundArgminIsEntropyArgmax) {
  for (int f = 4; f <= 6; ++f) {
    BoundEvaluator eval(Params(f));
    auto rng = StreamFor(f, 8);
    MonomialOrder order = AllEdges(f);
    FisherYates(order, rng);
    for (std::size_t len = 1; len + 1 < order.size(); ++len) {
      std::vector<Edge> prefix(order.begin(), order.begin() + len);
      EdgeSet given(f, prefix);
      double best_bound = 2, best_h = -1;
      for (std::size_t j = len; j < order.size(); ++j) {
        std::vector<Edge> cand = prefix;
        cand.push_back(order[j]);
        best_bound = std::min(best_bound, eval.PartialBound(cand));
        best_h = std::max(best_h, eval.engine().ConditionalEntropy(order[j], given));
      }
      for (std::size_t j = len; j < order.size(); ++j) {
        std::vector<Edge> cand = prefix;
        cand.push_back(order[j]);
        bool min_bound = eval.PartialBound(cand) <= best_bound + 1e-12;
        bool max_h = eval.engine().ConditionalEntropy(order[j], given) >= best_h - 1e-12;
        EXPECT_EQ(min_bound, max_h);
      }
    }
  }
}

TEST(BoundTest, Errors) {
  BoundEvaluator eval(Params(4));
  EXPECT_ERROR_CODE(eval.Evaluate({{1, 2}, {1, 3}}), ErrorCode::kNotAPermutation);
  EXPECT_ERROR_CODE(eval.PartialBound({{1, 2}, {1, 2}}), ErrorCode::kDuplicateEdge);
  EXPECT_ERROR_CODE(eval.PartialBound({}), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(BoundEvaluator(Params(4, 0)), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(BoundEvaluator(Params(17)), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(BoundEvaluator(Params(4, 2, 9)), ErrorCode::kInvalidField);
}

}  // namespace
}  // namespace pqnmc
