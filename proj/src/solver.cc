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


#include "mkkm/solver.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace mkkm {

namespace {

std::string FaceString(const SimplexFace& face) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < face.size(); ++i) out << (i ? "," : "") << face[i];
  out << "}";
  return out.str();
}

// The message is only built on failure.
#define MKKM_REQUIRE(condition, what)                 \
  do {                                                \
    if (!(condition)) throw InvariantViolation(what); \
  } while (false)

// Every subset of `simplex` that contains v, as sorted faces.
void FacesThrough(const SimplexFace& simplex, VertexId v,
                  std::vector<SimplexFace>* out) {
  const size_t n = simplex.size();
  for (uint32_t mask = 1; mask < (1U << n); ++mask) {
    SimplexFace face;
    bool has_v = false;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) {
        face.push_back(simplex[i]);
        has_v |= simplex[i] == v;
      }
    }
    if (has_v) out->push_back(std::move(face));
  }
}

void AssignLabel(Labeling& labeling, VertexId v, const LabelChoice& choice,
                 const CoverOracle& cover) {
  labeling.Set(v, choice, cover.YPoint(choice.w, choice.tau));
}

void CheckNewLabel(const Triangulation& t, const Labeling& labeling,
                   VertexId v, const CoverOracle& cover) {
  const Point& x = t.coords(v);
  const int lambda = labeling.lambda[v];
  const int w = labeling.f[v];
  const Polytope& p = t.polytope();
  MKKM_REQUIRE(p.IsSubface(lambda, t.supp(v)),
          "(P2) violated: lambda(v) is not a face of supp(v) at vertex " +
              std::to_string(v));
  MKKM_REQUIRE(p.FaceContains(lambda, labeling.y[v]),
          "(P2) violated: y(v) outside lambda(v) at vertex " +
              std::to_string(v));
  MKKM_REQUIRE(cover.MemberInP(w, lambda, x),
          "(P1) violated at vertex " + std::to_string(v));
}

}  // namespace

void Labeling::Set(VertexId v, const LabelChoice& choice, Point y_point) {
  if (f.size() <= v) {
    f.resize(v + 1, -1);
    lambda.resize(v + 1, -1);
    y.resize(v + 1);
  }
  f[v] = choice.w;
  lambda[v] = choice.tau;
  y[v] = std::move(y_point);
}

ElementSet Labeling::LabelSet(const SimplexFace& face) const {
  ElementSet set = 0;
  for (VertexId v : face) set |= Singleton(f.at(v));
  return set;
}

Labeling InitLabeling(const Triangulation& t, const CoverOracle& cover) {
  Labeling labeling;
  const ElementSet loops = Closure(cover.matroid(), 0).elements;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (t.Degree(v) == 0) continue;
    LabelChoice choice = ChooseLabel(cover, t.coords(v), t.supp(v), loops);
    AssignLabel(labeling, v, choice, cover);
  }
  return labeling;
}

std::optional<std::string> CheckLabeling(const Triangulation& t,
                                         const Labeling& labeling,
                                         const CoverOracle& cover) {
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (t.Degree(v) == 0) continue;
    if (!labeling.IsLabeled(v)) {
      return "vertex " + std::to_string(v) + " is unlabeled";
    }
    try {
      CheckNewLabel(t, labeling, v, cover);
    } catch (const InvariantViolation& e) {
      return std::string(e.what());
    }
    if (labeling.y[v] != cover.YPoint(labeling.f[v], labeling.lambda[v])) {
      return "(P2) violated: y(v) is not the designated point at vertex " +
             std::to_string(v);
    }
  }
  return std::nullopt;
}

bool IsBadFace(const Matroid& matroid, const Labeling& labeling,
               const SimplexFace& face) {
  for (VertexId v : face) {
    if (!labeling.IsLabeled(v)) {
      throw InvalidInput("vertex " + std::to_string(v) + " is unlabeled");
    }
  }
  const ElementSet labels = labeling.LabelSet(face);
  if (Cardinality(labels) != static_cast<int>(face.size())) {
    return face.size() == 2;
  }
  return IsCircuit(matroid, labels);
}

FaceSet BadFaces(const Triangulation& t, const Labeling& labeling,
                 const Matroid& matroid, std::optional<VertexId> containing) {
  FaceSet bad;
  if (containing) {
    if (*containing >= t.num_vertices() || t.Degree(*containing) == 0) {
      throw InvalidInput("vertex " + std::to_string(*containing) +
                         " is not in the triangulation");
    }
    std::vector<SimplexFace> faces;
    for (const SimplexFace& s : t.MaximalSimplicesContaining(*containing)) {
      FacesThrough(s, *containing, &faces);
    }
    for (SimplexFace& face : faces) {
      if (!bad.contains(face) && IsBadFace(matroid, labeling, face)) {
        bad.insert(std::move(face));
      }
    }
    return bad;
  }
  for (SimplexFace& face : t.Faces()) {
    if (IsBadFace(matroid, labeling, face)) bad.insert(std::move(face));
  }
  return bad;
}

std::set<VertexId> AlgState::H() const {
  std::set<VertexId> h;
  for (const auto& [face, b] : sequence) {
    h.insert(face.begin(), face.end());
    h.insert(b);
  }
  return h;
}

bool AlgState::QueuesEmpty() const {
  return std::all_of(queues.begin(), queues.end(),
                     [](const auto& q) { return q.second.empty(); });
}

namespace {

struct Context {
  Triangulation& t;
  Labeling& labeling;
  const CoverOracle& cover;
  const SolverOptions& options;
  const StepObserver& observer;
  std::int64_t* steps;
};

void CountStep(Context& ctx) {
  if (++*ctx.steps > ctx.options.max_steps) {
    std::ostringstream out;
    out << "step limit " << ctx.options.max_steps << " exceeded with "
        << ctx.t.num_vertices() << " vertices and " << ctx.t.num_simplices()
        << " simplices";
    throw StepLimitError(out.str());
  }
}

// Claim 4.4: every maximal simplex through b has exactly j-1 other vertices
// in H.
void CheckClaim44(const Triangulation& t, VertexId b,
                  const std::set<VertexId>& h, int j) {
  for (const SimplexFace& s : t.MaximalSimplicesContaining(b)) {
    int count = 0;
    for (VertexId v : s) count += v != b && h.contains(v);
    MKKM_REQUIRE(count == j - 1, "Claim 4.4 violated: simplex " + FaceString(s) +
                                " has " + std::to_string(count) +
                                " other vertices of H, expected " +
                                std::to_string(j - 1));
  }
}

// Partitions B(T_c, b) into queues Q_{base+i}, i = |V(F) - H|.
std::map<int, std::deque<SimplexFace>> Enqueue(const FaceSet& bad,
                                               const std::set<VertexId>& h,
                                               int base, bool checks) {
  std::map<int, std::vector<SimplexFace>> grouped;
  for (const SimplexFace& face : bad) {
    int outside = 0;
    for (VertexId v : face) outside += !h.contains(v);
    if (checks) {
      MKKM_REQUIRE(outside >= 1, "queue floor violated: " + FaceString(face) +
                                " has no vertex outside H");
    }
    grouped[base + outside].push_back(face);
  }
  std::map<int, std::deque<SimplexFace>> result;
  for (auto& [index, faces] : grouped) {
    std::sort(faces.begin(), faces.end());
    result[index] = std::deque<SimplexFace>(faces.begin(), faces.end());
  }
  return result;
}

void CheckNoProperContainment(const Matroid& m, const Labeling& labeling,
                              const FaceSet& bad) {
  for (const SimplexFace& face : bad) {
    const size_t n = face.size();
    for (uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
      SimplexFace sub;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (1U << i)) sub.push_back(face[i]);
      }
      MKKM_REQUIRE(!IsBadFace(m, labeling, sub),
              "bad face " + FaceString(face) + " contains bad face " +
                  FaceString(sub));
    }
  }
}

int LowestNonemptyPrefix(const AlgState& state, int k) {
  int m = 0;
  for (int i = 1; i <= k; ++i) {
    auto it = state.queues.find(i);
    if (it != state.queues.end() && !it->second.empty()) break;
    m = i;
  }
  return m;
}

EliminationStats Eliminate(Context& ctx, const SimplexFace& f1,
                           int elimination_index) {
  Triangulation& t = ctx.t;
  Labeling& labeling = ctx.labeling;
  const Matroid& m = ctx.cover.matroid();
  const int k = m.rank();
  const bool checks = ctx.options.checks != CheckLevel::kNone;
  const bool full = ctx.options.checks == CheckLevel::kFull;

  if (f1.size() < 2) throw InvalidInput("bad face must have >= 2 vertices");
  if (!t.IsFace(f1)) {
    throw InvalidInput("face " + FaceString(f1) + " is not in the triangulation");
  }
  if (!IsBadFace(m, labeling, f1)) {
    throw InvalidInput("face " + FaceString(f1) + " is not bad");
  }

  // Faces of B(T_c) - B(T) all contain a barycenter created in this run.
  std::vector<VertexId> created;

  EliminationStats stats;
  AlgState state;

  // Setup.
  CountStep(ctx);
  const int j1 = static_cast<int>(f1.size());
  const ElementSet f1_labels = labeling.LabelSet(f1);
  if (checks) {
    MKKM_REQUIRE(m.Rank(f1_labels) <= j1 - 1,
            "Claim 4.6 violated at setup: r(f(F1)) > |F1| - 1");
  }
  const VertexId b1 = t.StarSubdivide(f1);
  created.push_back(b1);
  LabelChoice choice = ChooseLabel(ctx.cover, t.coords(b1), t.supp(b1),
                                   Closure(m, f1_labels).elements);
  AssignLabel(labeling, b1, choice, ctx.cover);
  state.sequence.push_back({f1, b1});
  state.levels.push_back(j1);
  std::set<VertexId> h = state.H();
  if (checks) {
    CheckNewLabel(t, labeling, b1, ctx.cover);
    CheckClaim44(t, b1, h, j1);
  }
  FaceSet bad = BadFaces(t, labeling, m, b1);
  if (checks) CheckNoProperContainment(m, labeling, bad);
  state.queues = Enqueue(bad, h, j1, checks);
  stats.max_queue_index = state.queues.empty() ? 0 : state.queues.rbegin()->first;
  if (ctx.observer) {
    ctx.observer({elimination_index, 0, j1, f1, b1, choice.w, choice.tau, false},
                 state, t, labeling);
  }

  int emptied_floor = 0;
  auto end_of_iteration_checks = [&]() {
    if (!checks) return;
    for (const auto& [index, queue] : state.queues) {
      MKKM_REQUIRE(index <= k || queue.empty(),
              "Claim 4.5 violated: Q_" + std::to_string(index) +
                  " is nonempty with k = " + std::to_string(k));
      MKKM_REQUIRE(index > emptied_floor || queue.empty(),
              "Claim 4.7 violated: Q_" + std::to_string(index) +
                  " refilled after Q_1..Q_" + std::to_string(emptied_floor) +
                  " were empty");
    }
    emptied_floor = std::max(emptied_floor, LowestNonemptyPrefix(state, k));
    if (full) {
      for (VertexId v : created) {
        if (t.Degree(v) == 0) continue;
        for (const SimplexFace& face : BadFaces(t, labeling, m, v)) {
          bool queued = false;
          for (const auto& [index, queue] : state.queues) {
            queued |= std::find(queue.begin(), queue.end(), face) != queue.end();
          }
          MKKM_REQUIRE(queued, "Claim 4.8 violated: new bad face " + FaceString(face) +
                              " is in no queue");
        }
      }
    }
  };
  end_of_iteration_checks();

  while (!state.QueuesEmpty()) {
    CountStep(ctx);
    ++stats.iterations;
    // Step (2).
    auto top = std::find_if(state.queues.rbegin(), state.queues.rend(),
                            [](const auto& q) { return !q.second.empty(); });
    const int j = top->first;
    SimplexFace face = std::move(top->second.front());
    top->second.pop_front();
    if (checks) {
      MKKM_REQUIRE(t.IsFace(face), "queued face " + FaceString(face) +
                                  " is no longer a face of T_c");
    }
    // Entries chosen from Q_j or above have no pending children left.
    while (state.sequence.size() > 1 && state.levels.back() >= j) {
      state.sequence.pop_back();
      state.levels.pop_back();
    }
    const VertexId b = t.StarSubdivide(face);
    created.push_back(b);
    state.sequence.push_back({face, b});
    state.levels.push_back(j);

    // Step (3).
    h = state.H();
    if (checks) CheckClaim44(t, b, h, j);
    ElementSet rest = 0;
    for (VertexId v : h) {
      if (v != b) rest |= Singleton(labeling.f.at(v));
    }
    if (checks) {
      MKKM_REQUIRE(m.Rank(rest) <= j - 1,
              "Claim 4.6 violated: r(f(H - b_F)) = " +
                  std::to_string(m.Rank(rest)) + " > j - 1 = " +
                  std::to_string(j - 1));
    }
    choice = ChooseLabel(ctx.cover, t.coords(b), t.supp(b),
                         Closure(m, rest).elements);
    AssignLabel(labeling, b, choice, ctx.cover);
    if (checks) CheckNewLabel(t, labeling, b, ctx.cover);

    // Step (4).
    bad = BadFaces(t, labeling, m, b);
    bool removed = false;
    if (!bad.empty()) {
      if (checks) CheckNoProperContainment(m, labeling, bad);
      for (auto& [index, queue] : Enqueue(bad, h, j, checks)) {
        auto& target = state.queues[index];
        MKKM_REQUIRE(target.empty(), "Q_" + std::to_string(index) +
                                    " is nonempty before assignment");
        target = std::move(queue);
        stats.max_queue_index = std::max(stats.max_queue_index, index);
      }
    } else {
      state.sequence.pop_back();
      state.levels.pop_back();
      removed = true;
    }
    if (ctx.observer) {
      ctx.observer({elimination_index, stats.iterations, j, face, b, choice.w,
                    choice.tau, removed},
                   state, t, labeling);
    }
    end_of_iteration_checks();
  }

  if (full) {
    MKKM_REQUIRE(!t.IsFace(f1), "F1 is still a face after elimination");
    for (VertexId v : created) {
      if (t.Degree(v) == 0) continue;
      MKKM_REQUIRE(BadFaces(t, labeling, m, v).empty(),
              "B(T') is not contained in B(T): bad face through vertex " +
                  std::to_string(v));
    }
  }
  return stats;
}

}  // namespace

EliminationStats EliminateBadFace(Triangulation& t, Labeling& labeling,
                                  const SimplexFace& f1,
                                  const CoverOracle& cover,
                                  const SolverOptions& options,
                                  const StepObserver& observer,
                                  int elimination_index) {
  std::int64_t steps = 0;
  Context ctx{t, labeling, cover, options, observer, &steps};
  return Eliminate(ctx, f1, elimination_index);
}

GoodTriangulationStats GoodTriangulation(Triangulation& t, Labeling& labeling,
                                         const CoverOracle& cover,
                                         const SolverOptions& options,
                                         const StepObserver& observer) {
  const Matroid& m = cover.matroid();
  if (m.rank() < 2) {
    throw InvalidInput("good_triangulation needs a matroid of rank >= 2");
  }
  std::int64_t steps = 0;
  Context ctx{t, labeling, cover, options, observer, &steps};
  GoodTriangulationStats stats;
  FaceSet pending = BadFaces(t, labeling, m);
  while (!pending.empty()) {
    SimplexFace face = *pending.begin();
    pending.erase(pending.begin());
    if (!t.IsFace(face)) continue;
    EliminationStats e = Eliminate(ctx, face, stats.eliminations);
    ++stats.eliminations;
    stats.iterations += e.iterations;
  }
  if (options.checks != CheckLevel::kNone) {
    MKKM_REQUIRE(BadFaces(t, labeling, m).empty(),
            "bad faces remain after good_triangulation");
    if (auto problem = CheckBasisProperty(t, labeling, m)) {
      throw InvariantViolation(*problem);
    }
  }
  return stats;
}

std::optional<std::string> CheckBasisProperty(const Triangulation& t,
                                              const Labeling& labeling,
                                              const Matroid& matroid) {
  for (const SimplexFace& s : t.MaximalSimplices()) {
    for (VertexId v : s) {
      if (!labeling.IsLabeled(v)) {
        return "vertex " + std::to_string(v) + " is unlabeled";
      }
    }
    const ElementSet labels = labeling.LabelSet(s);
    if (Cardinality(labels) != static_cast<int>(s.size()) ||
        !IsBasis(matroid, labels)) {
      return "(P3) violated: labels of " + FaceString(s) + " are not a basis";
    }
  }
  return std::nullopt;
}

SpernerShapleyResult SpernerShapleyFace(const Triangulation& t,
                                        const Labeling& labeling,
                                        const Point& p) {
  if (!t.polytope().Contains(p)) throw InvalidInput("p is not in P");
  std::vector<SimplexFace> faces = t.Faces();
  std::stable_sort(faces.begin(), faces.end(), FaceOrder());

  using Key = std::vector<std::pair<int, int>>;
  std::map<Key, std::optional<HullCertificate>> cache;
  for (const SimplexFace& face : faces) {
    Key key;
    for (VertexId v : face) {
      if (!labeling.IsLabeled(v)) {
        throw InvalidInput("vertex " + std::to_string(v) + " is unlabeled");
      }
      key.push_back({labeling.f[v], labeling.lambda[v]});
    }
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    // Representative vertex per distinct label.
    std::vector<VertexId> reps;
    for (const auto& label : key) {
      for (VertexId v : face) {
        if (labeling.f[v] == label.first && labeling.lambda[v] == label.second) {
          reps.push_back(v);
          break;
        }
      }
    }
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<Point> points;
      for (VertexId v : reps) points.push_back(labeling.y[v]);
      it = cache.emplace(key, ConvContains(points, p)).first;
    }
    if (!it->second) continue;
    SpernerShapleyResult result;
    result.face = face;
    for (const auto& [index, weight] : it->second->weights) {
      result.certificate.push_back({reps[index], weight});
    }
    std::sort(result.certificate.begin(), result.certificate.end());
    return result;
  }
  throw NotFoundError(
      "no face of the triangulation has p in the hull of its y-points");
}

Rational DiameterBound(const Rational& squared_diameter,
                       const Rational& delta) {
  Rational bound = SqrtUpperBound(squared_diameter);
  if (squared_diameter <= delta * delta) bound = std::min(bound, delta);
  return bound;
}

Witness Solve(const CoverOracle& cover, const Point& p, const Rational& delta,
              const SolveOptions& options) {
  const Polytope& polytope = cover.polytope();
  const Matroid& m = cover.matroid();
  const int k = m.rank();
  if (delta <= 0) throw InvalidInput("delta must be positive");
  if (static_cast<int>(p.size()) != polytope.ambient_dim()) {
    throw InvalidInput("p has the wrong dimension");
  }
  if (!polytope.Contains(p)) throw InvalidInput("p is not in P");
  if (k != polytope.dim() + 1) {
    throw InvalidInput("matroid rank " + std::to_string(k) +
                       " does not match dim(P) + 1 = " +
                       std::to_string(polytope.dim() + 1));
  }

  Witness witness;
  if (k == 1) {
    const LabelChoice choice = ChooseLabel(
        cover, p, polytope.Supp(p), Closure(m, 0).elements);
    witness.basis = {choice.w};
    witness.faces = {choice.tau};
    witness.simplex = {0};
    witness.vertex_coords = {p};
    witness.y_points = {cover.YPoint(choice.w, choice.tau)};
    witness.certificate = {{0, Rational(1)}};
    witness.diameter_bound = 0;
    return witness;
  }

  Triangulation t = Triangulation::Initial(cover.polytope_ptr());
  const Rational delta_sq = delta * delta;
  while (t.SquaredDiameter() > delta_sq) t = RefineGlobal(t);

  Labeling labeling = InitLabeling(t, cover);
  StepObserver observer;
  if (options.record_trace) {
    observer = [&witness](const TraceEntry& entry, const AlgState&,
                          const Triangulation&, const Labeling&) {
      witness.trace.push_back(entry);
    };
  }
  GoodTriangulation(t, labeling, cover, options.solver, observer);

  SpernerShapleyResult found = SpernerShapleyFace(t, labeling, p);
  std::vector<SimplexFace> containing =
      t.MaximalSimplicesContaining(found.face.front());
  std::sort(containing.begin(), containing.end());
  const SimplexFace* simplex = nullptr;
  for (const SimplexFace& s : containing) {
    if (std::includes(s.begin(), s.end(), found.face.begin(),
                      found.face.end())) {
      simplex = &s;
      break;
    }
  }
  if (simplex == nullptr) {
    throw InvariantViolation("found face lies in no maximal simplex");
  }
  witness.simplex = *simplex;
  for (VertexId v : witness.simplex) {
    witness.basis.push_back(labeling.f[v]);
    witness.faces.push_back(labeling.lambda[v]);
    witness.vertex_coords.push_back(t.coords(v));
    witness.y_points.push_back(labeling.y[v]);
  }
  if (!IsBasis(m, MakeSet(witness.basis)) ||
      static_cast<int>(witness.basis.size()) != k) {
    throw InvariantViolation("(P3) violated on the witness simplex");
  }
  witness.certificate = std::move(found.certificate);
  witness.diameter_bound = DiameterBound(t.SquaredDiameter(), delta);
  return witness;
}

std::optional<std::string> VerifyWitness(const CoverOracle& cover,
                                         const Point& p,
                                         const Witness& witness) {
  const Matroid& m = cover.matroid();
  const Polytope& polytope = cover.polytope();
  const size_t k = static_cast<size_t>(m.rank());
  if (witness.basis.size() != k || witness.faces.size() != k ||
      witness.simplex.size() != k || witness.vertex_coords.size() != k ||
      witness.y_points.size() != k) {
    return "witness does not have rank(M) entries";
  }
  for (int w : witness.basis) {
    if (w < 0 || w >= m.ground_size()) return "basis element out of range";
  }
  const ElementSet basis = MakeSet(witness.basis);
  if (Cardinality(basis) != static_cast<int>(k) || !IsBasis(m, basis)) {
    return "labels do not form a basis";
  }
  for (size_t i = 0; i < k; ++i) {
    const int w = witness.basis[i];
    const int sigma = witness.faces[i];
    const Point& x = witness.vertex_coords[i];
    if (sigma < 0 || sigma >= static_cast<int>(polytope.faces().size())) {
      return "face id out of range";
    }
    if (x.size() != p.size() || !polytope.Contains(x)) {
      return "simplex vertex outside P";
    }
    if (!cover.Member(w, sigma, x)) {
      return "vertex " + std::to_string(witness.simplex[i]) +
             " is not in its labeled set";
    }
    if (!polytope.IsSubface(sigma, polytope.Supp(x))) {
      return "labeled face is not a face of supp(v)";
    }
    if (witness.y_points[i] != cover.YPoint(w, sigma)) {
      return "y-point does not match the cover";
    }
  }
  if (witness.certificate.empty()) return "empty certificate";
  Point sum(p.size(), Rational(0));
  Rational total = 0;
  for (const auto& [v, weight] : witness.certificate) {
    auto pos = std::find(witness.simplex.begin(), witness.simplex.end(), v);
    if (pos == witness.simplex.end()) return "certificate vertex not in simplex";
    if (weight < 0) return "negative certificate weight";
    const Point& y = witness.y_points[pos - witness.simplex.begin()];
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += weight * y[i];
    total += weight;
  }
  if (total != 1) return "certificate weights do not sum to one";
  if (sum != p) return "certificate does not reproduce p";
  const Rational bound_sq = witness.diameter_bound * witness.diameter_bound;
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a + 1; b < k; ++b) {
      if (SquaredDistance(witness.vertex_coords[a], witness.vertex_coords[b]) >
          bound_sq) {
        return "simplex diameter exceeds diameter_bound";
      }
    }
  }
  return std::nullopt;
}

}  // namespace mkkm
