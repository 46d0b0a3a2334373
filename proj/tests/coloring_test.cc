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
#include <numeric>

#include "gtest/gtest.h"
#include "oracle.h"
#include "pqnmc/coloring.h"
#include "pqnmc/edge.h"
#include "pqnmc/graph.h"

namespace pqnmc {
namespace {

using Set = std::vector<Edge>;

TEST(ColoringTest, OddExamples) {
  EXPECT_EQ(ColorSetsOdd(5).sets[0], (Set{{2, 5}, {3, 4}}));
  EXPECT_EQ(ColorSetsOdd(3).sets[0], (Set{{2, 3}}));
  EXPECT_ERROR_CODE(ColorSetsOdd(6), ErrorCode::kParityError);
}

TEST(ColoringTest, EvenExamples) {
  ColorPartition p = ColorSetsEven(6);
  ASSERT_EQ(p.sets.size(), 5u);
  EXPECT_EQ(p.sets[0], (Set{{1, 5}, {2, 4}, {3, 6}}));
  EXPECT_EQ(p.sets[1], (Set{{1, 6}, {2, 5}, {3, 4}}));
  EXPECT_EQ(p.sets[4], (Set{{1, 4}, {2, 3}, {5, 6}}));
  EXPECT_EQ(ColorSetsEven(2).sets, (std::vector<Set>{{{1, 2}}}));
  EXPECT_ERROR_CODE(ColorSetsEven(7), ErrorCode::kParityError);
}

TEST(ColoringTest, ValidForAllSizes) {
  for (int f = 2; f <= kMaxVertices; ++f) {
    ColorPartition p = ColorSets(f);
    EXPECT_TRUE(ValidateColoring(p, f)) << "f=" << f;
    EXPECT_EQ(static_cast<int>(p.sets.size()), ChromaticIndex(f));
    for (const Set& s : p.sets) {
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      EXPECT_EQ(static_cast<int>(s.size()), MatchingSize(f));
      EXPECT_TRUE(IsPerfectOrNearPerfect(EdgeSet(f, s), f));
    }
  }
}

TEST(ColoringTest, RejectsBadPartitions) {
  ColorPartition p = ColorSets(6);
  p.sets[0].push_back({1, 2});  // repeated edge touching (1,5)
  EXPECT_FALSE(ValidateColoring(p, 6));
  ColorPartition missing = ColorSets(6);
  missing.sets.pop_back();
  EXPECT_FALSE(ValidateColoring(missing, 6));
  ColorPartition wrong_f = ColorSets(5);
  EXPECT_FALSE(ValidateColoring(wrong_f, 6));
}

TEST(ColoringTest, PrintedLdfOrderOpensWithThreeColors) {
  const Set ldf = {{1, 2}, {3, 4}, {5, 6}, {1, 6}, {2, 3}, {4, 5}, {1, 4}, {2, 5},
                   {3, 6}, {2, 4}, {1, 3}, {1, 5}, {2, 6}, {3, 5}, {4, 6}};
  for (int t = 0; t < 3; ++t) {
    EXPECT_TRUE(IsPerfectOrNearPerfect(EdgeSet(6, Set(ldf.begin() + 3 * t,
                                                      ldf.begin() + 3 * t + 3)),
                                       6));
  }
}

TEST(EcOrderTest, Natural) {
  MonomialOrder order = EcOrder(6);
  const Set head = {{1, 5}, {2, 4}, {3, 6}, {1, 6}};
  EXPECT_TRUE(std::equal(head.begin(), head.end(), order.begin()));
  EXPECT_EQ(NaturalColorSequence(6), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(NaturalColorSequence(5), (std::vector<int>{2, 3, 4, 5, 1}));
  EXPECT_EQ(PinnedColorSequence(5), (std::vector<int>{2, 1, 3, 4, 5}));
  EXPECT_EQ(PinnedColorSequence(12), (std::vector<int>{1, 10, 2, 3, 4, 5, 6, 7, 8, 9, 11}));
  EXPECT_EQ(PinnedColorSequence(3), NaturalColorSequence(3));
}

TEST(EcOrderTest, Permuted) {
  MonomialOrder order = EcOrder(6, std::vector<int>{1, 2, 5, 3, 4});
  const Set head = {{1, 5}, {2, 4}, {3, 6}, {1, 6}, {2, 5}, {3, 4}, {1, 4}, {2, 3}, {5, 6}};
  EXPECT_TRUE(std::equal(head.begin(), head.end(), order.begin()));
}

TEST(EcOrderTest, AlwaysAPermutation) {
  for (int f = 2; f <= kMaxVertices; ++f) {
    std::vector<int> colors(ChromaticIndex(f));
    std::iota(colors.begin(), colors.end(), 1);
    std::reverse(colors.begin(), colors.end());
    EXPECT_TRUE(IsPermutationOfEdges(EcOrder(f), f));
    EXPECT_TRUE(IsPermutationOfEdges(EcOrder(f, colors), f));
    if (f >= 4) {
      MonomialOrder o = EcOrder(f);
      EXPECT_TRUE(IsPerfectOrNearPerfect(
          EdgeSet(f, Set(o.begin(), o.begin() + MatchingSize(f))), f));
    }
  }
}

TEST(EcOrderTest, RejectsBadColorLists) {
  EXPECT_ERROR_CODE(EcOrder(6, std::vector<int>{1, 2, 3, 4}), ErrorCode::kInvalidPermutation);
  EXPECT_ERROR_CODE(EcOrder(6, std::vector<int>{1, 1, 3, 4, 5}),
                    ErrorCode::kInvalidPermutation);
  EXPECT_ERROR_CODE(EcOrder(6, std::vector<int>{0, 1, 2, 3, 4}),
                    ErrorCode::kInvalidPermutation);
}

}  // namespace
}  // namespace pqnmc
