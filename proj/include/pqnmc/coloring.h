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

#ifndef PQNMC_COLORING_H_
#define PQNMC_COLORING_H_

#include <optional>
#include <vector>

#include "pqnmc/edge.h"

namespace pqnmc {

// A proper edge-coloring of K_f as its color classes. sets[c - 1] holds the
// edges of color c in lexicographic order.
struct ColorPartition {
  int f = 0;
  std::vector<std::vector<Edge>> sets;
};

// Round-robin coloring for odd f: color c holds the edges joining
// c - p and c + p (mod* f) for p = 1..(f-1)/2, where mod* maps 0 to f.
ColorPartition ColorSetsOdd(int f);

// 1-factorization for even f: (k, l) with k < l < f gets the color c with
// k + l - 1 = c - 1 (mod f-1); (k, f) gets the color c with 2k - 1 = c - 1.
ColorPartition ColorSetsEven(int f);

// Dispatches on the parity of f.
ColorPartition ColorSets(int f);

// True iff the sets are disjoint matchings covering K_f with exactly
// ChromaticIndex(f) colors.
bool ValidateColoring(const ColorPartition& partition, int f);

// The default color sequence: 1..f-1 for even f, and 2, 3, ..., f, 1 for odd
// f. The odd case is the round-robin classes enumerated from zero-based vertex
// labels, the convention under which the plain EC bounds are tabulated.
std::vector<int> NaturalColorSequence(int f);

// Color sequence whose leading classes are held in place by the enhanced
// coloring and random searches: the natural sequence with its second entry
// replaced by color 1 (odd f) or color f - 2 (even f), the class that opens
// the best enhanced-coloring order together with the first one for 5 <= f <= 10.
std::vector<int> PinnedColorSequence(int f);

// Concatenates color classes in the given order of 1-based colors
// (nullopt = NaturalColorSequence). Throws Error(kInvalidPermutation).
MonomialOrder EcOrder(int f, const std::optional<std::vector<int>>& colors =
                                 std::nullopt);
MonomialOrder ConcatenateColors(const ColorPartition& partition,
                                const std::vector<int>& colors);

}  // namespace pqnmc

#endif  // PQNMC_COLORING_H_
