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


#ifndef MKKM_SOLVER_H_
#define MKKM_SOLVER_H_

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mkkm/cover.h"
#include "mkkm/geometry.h"
#include "mkkm/matroid.h"
#include "mkkm/simplicial.h"

namespace mkkm {

// A runtime check of the elimination algorithm failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The Sperner-Shapley search found no face.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The step guard tripped.
class StepLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Labels (lambda, f, y) per triangulation vertex, indexed by vertex id.
// Unlabeled vertices have f = -1.
struct Labeling {
  std::vector<int> lambda;
  std::vector<int> f;
  std::vector<Point> y;

  bool IsLabeled(VertexId v) const { return v < f.size() && f[v] >= 0; }
  void Set(VertexId v, const LabelChoice& choice, Point y_point);
  ElementSet LabelSet(const SimplexFace& face) const;
};

// Labels every vertex by ChooseLabel with G = cl(empty set).
Labeling InitLabeling(const Triangulation& t, const CoverOracle& cover);

// Human-readable description of the first (P1)/(P2) failure, if any.
std::optional<std::string> CheckLabeling(const Triangulation& t,
                                         const Labeling& labeling,
                                         const CoverOracle& cover);

// An edge with equal labels, or a face with injective labels forming a
// circuit.
bool IsBadFace(const Matroid& matroid, const Labeling& labeling,
               const SimplexFace& face);

// Ordered by size, then vertex ids.
struct FaceOrder {
  bool operator()(const SimplexFace& a, const SimplexFace& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};
using FaceSet = std::set<SimplexFace, FaceOrder>;

// B(T), or B(T, v) when `containing` is given.
FaceSet BadFaces(const Triangulation& t, const Labeling& labeling,
                 const Matroid& matroid,
                 std::optional<VertexId> containing = std::nullopt);

enum class CheckLevel {
  kNone,
  // Claims 4.4-4.7, queue floor, (P1)/(P2) of new labels, containment.
  kLocal,
  // kLocal plus Claim 4.8 and B(T') < B(T) after every elimination.
  kFull,
};

struct SolverOptions {
  CheckLevel checks = CheckLevel::kLocal;
  std::int64_t max_steps = 1'000'000;
};

// Working state of one elimination run.
struct AlgState {
  // S, with the barycenter b_F inserted for each F.
  std::vector<std::pair<SimplexFace, VertexId>> sequence;
  // Queue index each entry of `sequence` was chosen from (|F1| for F1).
  std::vector<int> levels;
  std::map<int, std::deque<SimplexFace>> queues;

  std::set<VertexId> H() const;
  bool QueuesEmpty() const;
};

struct TraceEntry {
  int elimination = 0;
  // 0 for the setup, then loop iterations 1, 2, ...
  int step = 0;
  int j = 0;
  SimplexFace face;
  VertexId barycenter = 0;
  int w = 0;
  int tau = 0;
  bool removed_from_sequence = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using StepObserver =
    std::function<void(const TraceEntry&, const AlgState&,
                       const Triangulation&, const Labeling&)>;

struct EliminationStats {
  int iterations = 0;
  int max_queue_index = 0;
};

// Eliminates the bad face f1, in place on (t, labeling).
EliminationStats EliminateBadFace(Triangulation& t, Labeling& labeling,
                                  const SimplexFace& f1,
                                  const CoverOracle& cover,
                                  const SolverOptions& options = {},
                                  const StepObserver& observer = nullptr,
                                  int elimination_index = 0);

struct GoodTriangulationStats {
  int eliminations = 0;
  std::int64_t iterations = 0;
};

// Eliminates bad faces smallest-first until none remain. Requires k >= 2.
GoodTriangulationStats GoodTriangulation(Triangulation& t, Labeling& labeling,
                                         const CoverOracle& cover,
                                         const SolverOptions& options = {},
                                         const StepObserver& observer = nullptr);

// Every maximal simplex carries a basis (P3).
std::optional<std::string> CheckBasisProperty(const Triangulation& t,
                                              const Labeling& labeling,
                                              const Matroid& matroid);

struct SpernerShapleyResult {
  SimplexFace face;
  // Weights indexed by vertex id.
  std::vector<std::pair<VertexId, Rational>> certificate;
};

// First face, by dimension then ids, whose y-points contain p in their hull.
SpernerShapleyResult SpernerShapleyFace(const Triangulation& t,
                                        const Labeling& labeling,
                                        const Point& p);

struct Witness {
  std::vector<int> basis;
  std::vector<int> faces;
  SimplexFace simplex;
  std::vector<Point> vertex_coords;
  std::vector<Point> y_points;
  std::vector<std::pair<VertexId, Rational>> certificate;
  Rational diameter_bound;
  std::vector<TraceEntry> trace;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SolveOptions {
  SolverOptions solver;
  bool record_trace = false;
};

// Refines the initial triangulation to diameter <= delta, eliminates bad
// faces and runs the Sperner-Shapley search for p.
Witness Solve(const CoverOracle& cover, const Point& p, const Rational& delta,
              const SolveOptions& options = {});

// Checks a witness against the cover: basis, memberships, y-points,
// certificate and diameter.
std::optional<std::string> VerifyWitness(const CoverOracle& cover,
                                         const Point& p,
                                         const Witness& witness);

// Upper bound on sqrt(t.SquaredDiameter()), capped at delta when the
// diameter is within it.
Rational DiameterBound(const Rational& squared_diameter, const Rational& delta);

}  // namespace mkkm

#endif  // MKKM_SOLVER_H_
