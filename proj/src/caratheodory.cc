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


#include "mkkm/caratheodory.h"

#include <memory>

#include "mkkm/cover.h"
#include "mkkm/geometry.h"

namespace mkkm {

namespace {

void CheckInstance(const CaratheodoryInstance& instance) {
  if (static_cast<int>(instance.points.size()) != instance.matroid.ground_size()) {
    throw InvalidInput("matroid ground set must match the point set");
  }
  for (const Point& v : instance.points) {
    if (v.size() != 2) throw InvalidInput("points must be planar");
    if (v[0] == 0 && v[1] == 0) {
      throw InvalidInput("the origin may not be one of the points");
    }
  }
}

Matroid RankThree(const Matroid& m) {
  return m.rank() == 3 ? m : Matroid::Truncate(m, 3);
}

std::optional<std::pair<std::vector<int>, HullCertificate>> Certify(
    const CaratheodoryInstance& instance, const std::vector<int>& subset) {
  if (subset.empty() || !IsIndependent(instance.matroid, MakeSet(subset))) {
    return std::nullopt;
  }
  std::vector<Point> points;
  for (int i : subset) points.push_back(instance.points[i]);
  auto certificate = ConvContains(points, Point{Rational(0), Rational(0)});
  if (!certificate) return std::nullopt;
  return std::make_pair(subset, *certificate);
}

}  // namespace

HypothesisReport CheckCaratheodoryHypothesis(
    const CaratheodoryInstance& instance) {
  CheckInstance(instance);
  HypothesisReport report;
  if (instance.matroid.rank() < 3) {
    report.holds = false;
    report.counterexample = 0;
    return report;
  }
  const Point origin = {Rational(0), Rational(0)};
  const ElementSet ground = instance.matroid.ground_set();
  for (const Flat& h : Hyperplanes(RankThree(instance.matroid))) {
    const ElementSet g = ground & ~h.elements;
    std::vector<Point> points;
    for (int i : Elements(g)) points.push_back(instance.points[i]);
    if (points.empty() || !ConvContains(points, origin)) {
      report.holds = false;
      report.counterexample = g;
      return report;
    }
  }
  return report;
}

CaratheodoryResult CaratheodorySolve(const CaratheodoryInstance& instance,
                                     const CaratheodoryOptions& options) {
  if (!CheckCaratheodoryHypothesis(instance).holds) {
    throw InvalidInput("hypothesis fails: some G with r(V - G) <= 2 misses "
                       "the origin in its hull");
  }
  auto polygon = std::make_shared<const Polytope>(
      Polytope::RegularPolygon(options.polygon_sides, Rational(1)));
  CaratheodoryCover cover(RankThree(instance.matroid), polygon, instance.points);
  const Rational diameter = SqrtUpperBound(polygon->SquaredDiameter());
  const Point origin = {Rational(0), Rational(0)};

  for (int level = options.min_level; level <= options.max_level; ++level) {
    Rational delta = diameter;
    delta /= Rational(mpz_class(1) << level);
    Witness witness = Solve(cover, origin, delta, options.solve);
    std::vector<int> on_ray;
    for (size_t i = 0; i < witness.basis.size(); ++i) {
      if (cover.RayHit(witness.basis[i], witness.faces[i])) {
        on_ray.push_back(witness.basis[i]);
      }
    }
    auto found = Certify(instance, on_ray);
    if (!found) found = Certify(instance, witness.basis);
    if (!found) continue;
    CaratheodoryResult result;
    for (const auto& [index, weight] : found->second.weights) {
      result.certificate.push_back({found->first[index], weight});
    }
    result.independent_set = found->first;
    result.delta = delta;
    result.witness = std::move(witness);
    return result;
  }
  throw NotFoundError("no certified independent set up to the finest level");
}

}  // namespace mkkm
