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


#ifndef MKKM_CAKE_H_
#define MKKM_CAKE_H_

#include <utility>
#include <vector>

#include "mkkm/cover.h"
#include "mkkm/matroid.h"
#include "mkkm/solver.h"

namespace mkkm {

struct CakeInstance {
  std::vector<Density> guests;
  int pieces = 1;
  Matroid matroid;
};

struct Allocation {
  // Lengths of the k pieces.
  Point partition;
  std::vector<Rational> cut_points;
  // (guest, piece), ordered by piece.
  std::vector<std::pair<int, int>> assignment;
  Rational envy_gap;
  // k * L * diameter_bound.
  Rational envy_bound;
  Witness witness;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Best piece value minus own piece value, maximized over assigned guests.
Rational EnvyGap(const std::vector<Density>& guests, const Point& partition,
                 const std::vector<std::pair<int, int>>& assignment);

// Partition lengths from k - 1 cut points in [0, 1].
Point PartitionFromCuts(const std::vector<Rational>& cuts);

struct CakeOptions {
  SolveOptions solve;
  // Resolution of the M-Komiya (hungriness) precheck.
  int validation_resolution = 8;
};

// Throws InvalidInput if the cake cover fails validation.
Allocation CakeSolve(const CakeInstance& instance, const Rational& delta,
                     const CakeOptions& options = {});

}  // namespace mkkm

#endif  // MKKM_CAKE_H_
