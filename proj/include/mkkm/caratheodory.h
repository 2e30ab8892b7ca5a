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


#ifndef MKKM_CARATHEODORY_H_
#define MKKM_CARATHEODORY_H_

#include <optional>
#include <utility>
#include <vector>

#include "mkkm/matroid.h"
#include "mkkm/rational.h"
#include "mkkm/solver.h"

namespace mkkm {

struct CaratheodoryInstance {
  std::vector<Point> points;
  Matroid matroid;
};

struct HypothesisReport {
  bool holds = true;
  // A set G with r(V - G) <= 2 and 0 outside conv(G).
  std::optional<ElementSet> counterexample;
};

// 0 in conv(G) for every G with r(V - G) <= 2, checked on the complements
// of the rank-2 flats.
HypothesisReport CheckCaratheodoryHypothesis(const CaratheodoryInstance& instance);

struct CaratheodoryResult {
  std::vector<int> independent_set;
  // (index into the input points, weight).
  std::vector<std::pair<int, Rational>> certificate;
  Rational delta;
  Witness witness;

  friend bool operator==(const CaratheodoryResult&,
                         const CaratheodoryResult&) = default;
};

struct CaratheodoryOptions {
  int polygon_sides = 16;
  // delta = diam(P) / 2^level for level = min_level, ..., max_level.
  int min_level = 3;
  int max_level = 8;
  SolveOptions solve;
};

// Throws InvalidInput when the hypothesis fails or the input is malformed.
CaratheodoryResult CaratheodorySolve(const CaratheodoryInstance& instance,
                                     const CaratheodoryOptions& options = {});

}  // namespace mkkm

#endif  // MKKM_CARATHEODORY_H_
