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
#include <set>

#include "doctest.h"
#include "mkkm/instance_io.h"
#include "mkkm/rhombus_example.h"
#include "mkkm/solver.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace mkkm {
namespace {

std::vector<SimplexFace> Sorted(const FaceSet& s) {
  std::vector<SimplexFace> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexFace> Sorted(std::vector<SimplexFace> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Delta^2 itself, labeled by its own vertices.
struct IdentityTriangle {
  std::shared_ptr<const Polytope> p =
      std::make_shared<const Polytope>(Polytope::Simplex(3));
  Triangulation t = Triangulation::FromSimplices(p, p->vertices(), {{0, 1, 2}});
  Labeling l;

  IdentityTriangle() {
    for (int i = 0; i < 3; ++i) l.Set(i, {i, p->VertexFace(i)}, p->vertices()[i]);
  }
};

TEST_CASE("bad faces on the paper example") {
  PaperExample ex = BuildPaperExample();
  const Matroid& m = ex.cover->matroid();
  CHECK_FALSE(CheckLabeling(ex.triangulation, ex.labeling, *ex.cover));
  const FaceSet bad = BadFaces(ex.triangulation, ex.labeling, m);
  CHECK(Sorted(bad) == std::vector<SimplexFace>{{0, 1}});
  CHECK(Sorted(bad) == Sorted(oracle::BruteBadFaces(ex.triangulation, ex.labeling, m)));
  CHECK(BadFaces(ex.triangulation, ex.labeling, m, 2).empty());
  CHECK(BadFaces(ex.triangulation, ex.labeling, m, 0).size() == 1);
  // v1, v1, v2 repeats a label on a triangle.
  CHECK_FALSE(IsBadFace(m, ex.labeling, {0, 1, 2}));

  Labeling l = ex.labeling;
  l.f = {0, 1, 2, 2};
  CHECK(IsBadFace(m, l, {0, 1, 2}));
  CHECK(IsBadFace(m, l, {2, 3}));
  CHECK_FALSE(IsBadFace(m, l, {0, 1}));
}

TEST_CASE("unlabeled vertices are rejected") {
  PaperExample ex = BuildPaperExample();
  Labeling l = ex.labeling;
  l.f[3] = -1;
  CHECK_THROWS_AS(BadFaces(ex.triangulation, l, ex.cover->matroid()), InvalidInput);
  CHECK_THROWS_AS(SpernerShapleyFace(ex.triangulation, l, {0, 0}), InvalidInput);
}

TEST_CASE("init_labeling on a KKM cover uses vertex faces") {
  testing::Rng rng(3);
  for (int i = 0; i < 8; ++i) {
    testing::RandomInstance inst = testing::MakeInstance(rng, i);
    Triangulation t = Triangulation::Initial(inst.cover->polytope_ptr());
    Labeling l = InitLabeling(t, *inst.cover);
    CHECK_FALSE(CheckLabeling(t, l, *inst.cover));
    const Polytope& p = t.polytope();
    for (VertexId v = 0; v < t.num_vertices(); ++v) {
      const Face& face = p.faces()[l.lambda[v]];
      REQUIRE(face.dim == 0);
      CHECK(l.y[v] == p.vertices()[face.vertex_ids[0]]);
      if (p.faces()[t.supp(v)].dim == 0) CHECK(l.y[v] == t.coords(v));
    }
  }
}

TEST_CASE("init_labeling breaks ties by smallest element") {
  auto seg = std::make_shared<const Polytope>(Polytope::Simplex(2));
  auto cover = std::make_shared<HalfspaceCover>(Matroid::Uniform(2, 2), seg);
  for (int w = 0; w < 2; ++w) {
    for (int u = 0; u < 2; ++u) cover->AddRegion(w, seg->VertexFace(u), Polyhedron{});
  }
  Triangulation t = RefineGlobal(Triangulation::Initial(seg));
  Labeling l = InitLabeling(t, *cover);
  for (VertexId v = 0; v < t.num_vertices(); ++v) CHECK(l.f[v] == 0);
}

TEST_CASE("eliminating the paper example's bad face") {
  PaperExampleRun run = RunPaperExample();
  CHECK(run.mismatches.empty());
  CHECK(run.stats.iterations == 3);
  CHECK(run.final_triangulation.num_vertices() == 8);
  CHECK(run.final_bad.empty());
  PaperExample ex = BuildPaperExample();
  CHECK_FALSE(CheckBasisProperty(run.final_triangulation, run.final_labeling,
                                 ex.cover->matroid()));
  CHECK(run.final_triangulation.MaximalSimplices().size() == 10);

  Triangulation t = ex.triangulation;
  Labeling l = ex.labeling;
  CHECK_THROWS_AS(EliminateBadFace(t, l, {0, 2}, *ex.cover), InvalidInput);
  CHECK_THROWS_AS(EliminateBadFace(t, l, {0, 7}, *ex.cover), InvalidInput);
  CHECK_THROWS_AS(EliminateBadFace(t, l, {0}, *ex.cover), InvalidInput);
}

TEST_CASE("elimination trace is deterministic") {
  auto record = [] {
    PaperExample ex = BuildPaperExample();
    std::vector<TraceEntry> trace;
    EliminateBadFace(ex.triangulation, ex.labeling, {0, 1}, *ex.cover,
                     {CheckLevel::kFull},
                     [&](const TraceEntry& e, const AlgState&, const Triangulation&,
                         const Labeling&) { trace.push_back(e); });
    return trace;
  };
  const std::vector<TraceEntry> a = record();
  CHECK(a.size() == 4);
  CHECK(a.front().step == 0);
  CHECK(a.front().j == 2);
  CHECK(a == record());
}

TEST_CASE("step guard") {
  PaperExample ex = BuildPaperExample();
  SolverOptions tight;
  tight.max_steps = 2;
  CHECK_THROWS_AS(EliminateBadFace(ex.triangulation, ex.labeling, {0, 1}, *ex.cover, tight),
                  StepLimitError);
}

TEST_CASE("good triangulation on random instances") {
  testing::Rng rng(11);
  for (int i = 0; i < 12; ++i) {
    testing::RandomInstance inst = testing::MakeInstance(rng, i);
    CAPTURE(inst.name);
    Triangulation t = Triangulation::Initial(inst.cover->polytope_ptr());
    for (int r = 0; r < std::min(inst.refinements, 1); ++r) t = RefineGlobal(t);
    Labeling l = InitLabeling(t, *inst.cover);
    const auto before = oracle::BruteBadFaces(t, l, inst.cover->matroid());
    CHECK(Sorted(BadFaces(t, l, inst.cover->matroid())) == Sorted(before));
    GoodTriangulationStats stats =
        GoodTriangulation(t, l, *inst.cover, {CheckLevel::kFull});
    CHECK(stats.eliminations <= static_cast<int>(before.size()));
    CHECK(BadFaces(t, l, inst.cover->matroid()).empty());
    CHECK_FALSE(CheckLabeling(t, l, *inst.cover));
    CHECK_FALSE(CheckBasisProperty(t, l, inst.cover->matroid()));
    // Every face, not only the maximal ones, carries independent labels.
    for (const SimplexFace& f : t.Faces()) {
      std::set<int> labels;
      for (VertexId v : f) labels.insert(l.f[v]);
      CHECK(labels.size() == f.size());
      CHECK(IsIndependent(inst.cover->matroid(), l.LabelSet(f)));
    }
  }
}

TEST_CASE("good triangulation leaves a good input alone") {
  IdentityTriangle id;
  auto cover = std::make_shared<HalfspaceCover>(Matroid::Uniform(3, 3), id.p);
  const size_t n = id.t.num_vertices();
  GoodTriangulationStats stats = GoodTriangulation(id.t, id.l, *cover);
  CHECK(stats.eliminations == 0);
  CHECK(id.t.num_vertices() == n);

  auto rank1 = std::make_shared<HalfspaceCover>(Matroid::Uniform(1, 1), id.p);
  CHECK_THROWS_AS(GoodTriangulation(id.t, id.l, *rank1), InvalidInput);
}

TEST_CASE("Sperner-Shapley search on the identity triangle") {
  IdentityTriangle id;
  const Point centroid = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  SpernerShapleyResult r = SpernerShapleyFace(id.t, id.l, centroid);
  CHECK(r.face.size() == 3);
  for (const auto& [v, weight] : r.certificate) CHECK(weight == Rational(1, 3));

  const Point v0 = id.p->vertices()[0];
  r = SpernerShapleyFace(id.t, id.l, v0);
  REQUIRE(r.face.size() == 1);
  CHECK(id.t.coords(r.face[0]) == v0);
  CHECK(r.certificate.size() == 1);
  CHECK(r.certificate[0].second == 1);

  CHECK_THROWS_AS(SpernerShapleyFace(id.t, id.l, {1, 1, 1}), InvalidInput);
  // Every y at one vertex: only that vertex is reachable.
  Labeling collapsed = id.l;
  for (Point& y : collapsed.y) y = v0;
  CHECK_THROWS_AS(SpernerShapleyFace(id.t, collapsed, centroid), NotFoundError);
}

TEST_CASE("Sperner-Shapley search matches the brute-force oracle") {
  testing::Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    testing::RandomInstance inst = testing::MakeInstance(rng, i);
    if (inst.kind == testing::PolytopeKind::kTetrahedron) continue;
    CAPTURE(inst.name);
    Triangulation t = RefineGlobal(Triangulation::Initial(inst.cover->polytope_ptr()));
    Labeling l = InitLabeling(t, *inst.cover);
    GoodTriangulation(t, l, *inst.cover);
    for (int s = 0; s < 10; ++s) {
      const Point p = testing::RandomInteriorPoint(rng, t.polytope());
      const SpernerShapleyResult r = SpernerShapleyFace(t, l, p);
      const auto expected = oracle::BruteSpernerShapley(t, l, p);
      REQUIRE(expected.has_value());
      CHECK(r.face == *expected);
      Point sum(p.size(), Rational(0));
      Rational total = 0;
      for (const auto& [v, weight] : r.certificate) {
        CHECK(weight >= 0);
        total += weight;
        for (size_t c = 0; c < p.size(); ++c) sum[c] += weight * l.y[v][c];
      }
      CHECK(total == 1);
      CHECK(sum == p);
    }
  }
}

std::shared_ptr<HalfspaceCover> TwoGuestCake() {
  auto seg = std::make_shared<const Polytope>(Polytope::Simplex(2));
  auto c = std::make_shared<HalfspaceCover>(Matroid::Uniform(2, 2), seg);
  // Each guest takes the left piece when x1 >= 1/2, the right one otherwise.
  for (int w = 0; w < 2; ++w) {
    c->AddRegion(w, seg->VertexFace(0), Polyhedron{{{{-1, 0}, Rational(-1, 2)}}, false});
    c->AddRegion(w, seg->VertexFace(1), Polyhedron{{{{1, 0}, Rational(1, 2)}}, false});
  }
  return c;
}

TEST_CASE("solve on a two-guest cut") {
  auto c = TwoGuestCake();
  const Point p = {Rational(1, 2), Rational(1, 2)};
  SolveOptions opts;
  opts.record_trace = true;
  Witness w = Solve(*c, p, Rational(1, 16), opts);
  CHECK_FALSE(VerifyWitness(*c, p, w));
  CHECK(std::set<int>(w.basis.begin(), w.basis.end()) == std::set<int>{0, 1});
  CHECK(w.diameter_bound <= Rational(1, 16));
  const Rational lo = std::min(w.vertex_coords[0][0], w.vertex_coords[1][0]);
  const Rational hi = std::max(w.vertex_coords[0][0], w.vertex_coords[1][0]);
  CHECK(lo <= Rational(1, 2));
  CHECK(hi >= Rational(1, 2));
  CHECK(Solve(*c, p, Rational(1, 16), opts) == w);

  Witness broken = w;
  std::swap(broken.basis[0], broken.basis[1]);
  broken.basis[1] = broken.basis[0];
  CHECK(VerifyWitness(*c, p, broken).has_value());
  broken = w;
  broken.certificate[0].second += 1;
  CHECK(VerifyWitness(*c, p, broken).has_value());

  CHECK_THROWS_AS(Solve(*c, p, 0), InvalidInput);
  CHECK_THROWS_AS(Solve(*c, {2, -1}, Rational(1, 16)), InvalidInput);
  CHECK_THROWS_AS(Solve(*c, {1}, Rational(1, 16)), InvalidInput);
  auto wrong_rank = std::make_shared<HalfspaceCover>(Matroid::Uniform(3, 3), c->polytope_ptr());
  CHECK_THROWS_AS(Solve(*wrong_rank, p, Rational(1, 16)), InvalidInput);
}

TEST_CASE("solve with rank one") {
  auto pt = std::make_shared<const Polytope>(Polytope::Simplex(1));
  auto c = std::make_shared<HalfspaceCover>(Matroid::Uniform(2, 1), pt);
  c->AddRegion(1, pt->VertexFace(0), Polyhedron{});
  const Point p = pt->vertices()[0];
  Witness w = Solve(*c, p, 1);
  CHECK(w.basis == std::vector<int>{1});
  CHECK(w.faces == std::vector<int>{pt->VertexFace(0)});
  CHECK(w.vertex_coords == std::vector<Point>{p});
  CHECK_FALSE(VerifyWitness(*c, p, w));
}

TEST_CASE("an invalid cover surfaces NoLabel") {
  auto seg = std::make_shared<const Polytope>(Polytope::Simplex(2));
  auto c = std::make_shared<HalfspaceCover>(Matroid::Uniform(2, 2), seg);
  c->AddRegion(0, seg->VertexFace(0), Polyhedron{});
  CHECK_THROWS_AS(Solve(*c, {Rational(1, 2), Rational(1, 2)}, Rational(1, 4)),
                  NoLabelError);
}

TEST_CASE("diameter bound") {
  CHECK(DiameterBound(Rational(1, 256), Rational(1, 16)) == Rational(1, 16));
  CHECK(DiameterBound(Rational(1, 1024), Rational(1, 16)) <= Rational(1, 16));
  const Rational b = DiameterBound(2, 10);
  CHECK(b * b >= 2);
  CHECK(b < Rational(71, 50));
}

TEST_CASE("witness JSON round trip") {
  auto c = TwoGuestCake();
  SolveOptions opts;
  opts.record_trace = true;
  const Witness w = Solve(*c, {Rational(1, 3), Rational(2, 3)}, Rational(1, 8), opts);
  const Json j = ToJson(w);
  const Witness back = WitnessFromJson(Json::parse(j.dump()));
  CHECK(back.basis == w.basis);
  CHECK(back.faces == w.faces);
  CHECK(back.simplex == w.simplex);
  CHECK(back.certificate == w.certificate);
  CHECK(back.diameter_bound == w.diameter_bound);
  CHECK(j["diameter_bound"].is_string());
}

}  // namespace
}  // namespace mkkm
