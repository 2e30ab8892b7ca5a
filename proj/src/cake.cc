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


#include "mkkm/cake.h"

#include <algorithm>

namespace mkkm {

Rational EnvyGap(const std::vector<Density>& guests, const Point& partition,
                 const std::vector<std::pair<int, int>>& assignment) {
  Rational gap = 0;
  for (const auto& [guest, piece] : assignment) {
    const std::vector<Rational> values = PieceValues(guests.at(guest), partition);
    const Rational best = *std::max_element(values.begin(), values.end());
    gap = std::max(gap, Rational(best - values.at(piece)));
  }
  return gap;
}

Point PartitionFromCuts(const std::vector<Rational>& cuts) {
  Point lengths;
  Rational left = 0;
  for (const Rational& cut : cuts) {
    if (cut < left || cut > 1) throw InvalidInput("cut points must be sorted in [0,1]");
    lengths.push_back(cut - left);
    left = cut;
  }
  lengths.push_back(1 - left);
  return lengths;
}

Allocation CakeSolve(const CakeInstance& instance, const Rational& delta,
                     const CakeOptions& options) {
  const int k = instance.pieces;
  if (k < 1) throw InvalidInput("piece count must be positive");
  if (instance.matroid.rank() != k) {
    throw InvalidInput("matroid rank must equal the number of pieces");
  }
  CakeCover cover(instance.matroid, instance.guests, k);
  ValidationReport report = ValidateMKomiya(cover, options.validation_resolution);
  if (!report.passed) {
    throw InvalidInput("the cake cover fails the M-hungry check");
  }
  const Polytope& simplex = cover.polytope();
  const Point p = simplex.FaceBarycenter(simplex.improper_face_id());

  Allocation allocation;
  allocation.witness = Solve(cover, p, delta, options.solve);
  const Witness& w = allocation.witness;
  allocation.partition = Barycenter(w.vertex_coords);
  Rational cut = 0;
  for (int i = 0; i + 1 < k; ++i) {
    cut += allocation.partition[i];
    allocation.cut_points.push_back(cut);
  }
  for (size_t i = 0; i < w.basis.size(); ++i) {
    const Face& face = simplex.face(w.faces[i]);
    if (face.dim != 0) throw InvariantViolation("cake label on a non-vertex face");
    allocation.assignment.push_back({w.basis[i], face.vertex_ids[0]});
  }
  std::sort(allocation.assignment.begin(), allocation.assignment.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  allocation.envy_gap =
      EnvyGap(instance.guests, allocation.partition, allocation.assignment);
  Rational lipschitz = 0;
  for (const Density& d : instance.guests) {
    lipschitz = std::max(lipschitz, d.MaxValue());
  }
  allocation.envy_bound = Rational(k) * lipschitz * w.diameter_bound;
  return allocation;
}

}  // namespace mkkm
