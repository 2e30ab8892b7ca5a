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

#include <map>

#include "doctest.h"
#include "mkkm/rhombus_example.h"
#include "mkkm/simplicial.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace mkkm {
namespace {

Triangulation SingleTriangle() {
  auto p = std::make_shared<const Polytope>(Polytope::Simplex(3));
  return Triangulation::FromSimplices(p, p->vertices(), {{0, 1, 2}});
}

// Every codimension-one face lies in two simplices, or in one simplex and on
// the boundary of P; every stored supp matches a fresh computation.
std::vector<SimplexFace> Sorted(std::vector<SimplexFace> faces) {
  std::sort(faces.begin(), faces.end());
  return faces;
}

void CheckValid(const Triangulation& t) {
  const Polytope& p = t.polytope();
  std::map<SimplexFace, int> ridges;
  for (const SimplexFace& s : t.MaximalSimplices()) {
    REQUIRE(s.size() == static_cast<size_t>(p.dim() + 1));
    for (size_t i = 0; i < s.size(); ++i) {
      SimplexFace r = s;
      r.erase(r.begin() + i);
      ++ridges[r];
    }
  }
  for (const auto& [r, count] : ridges) {
    CHECK(count <= 2);
    if (count == 1) {
      std::vector<int> supps;
      for (VertexId v : r) supps.push_back(t.supp(v));
      CHECK(p.Join(supps) != p.improper_face_id());
    }
  }
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    CHECK(t.supp(v) == p.Supp(t.coords(v)));
  }
  CHECK(t.TotalVolume() == Triangulation::Initial(t.polytope_ptr()).TotalVolume());
}

TEST_CASE("initial triangulations") {
  auto tri = testing::MakePolytope(testing::PolytopeKind::kTriangle);
  Triangulation t = Triangulation::Initial(tri);
  CHECK(t.num_vertices() == 7);
  CHECK(t.num_simplices() == 6);
  CheckValid(t);

  Triangulation sq = Triangulation::Initial(testing::MakePolytope(testing::PolytopeKind::kSquare));
  CHECK(sq.num_vertices() == 9);
  CHECK(sq.num_simplices() == 8);
  CheckValid(sq);

  Triangulation seg = Triangulation::Initial(std::make_shared<const Polytope>(Polytope::Simplex(2)));
  CHECK(seg.num_vertices() == 3);
  CHECK(seg.num_simplices() == 2);

  // vertex id == face id
  for (const Face& f : tri->faces()) CHECK(t.supp(f.id) == f.id);
}

TEST_CASE("star subdivision of an edge and of a whole triangle") {
  Triangulation t = SingleTriangle();
  const VertexId b = t.StarSubdivide({0, 1});
  CHECK(b == 3);
  CHECK(t.MaximalSimplices() == std::vector<SimplexFace>{{0, 2, 3}, {1, 2, 3}});
  CHECK(t.coords(b) == Point{Rational(1, 2), Rational(1, 2), 0});
  CHECK(t.polytope().face(t.supp(b)).vertex_ids == std::vector<int>{0, 1});
  CheckValid(t);

  Triangulation u = SingleTriangle();
  const VertexId c = u.StarSubdivide({0, 1, 2});
  CHECK(u.num_simplices() == 3);
  for (const SimplexFace& s : u.MaximalSimplices()) CHECK(std::count(s.begin(), s.end(), c) == 1);
  CHECK(u.supp(c) == u.polytope().improper_face_id());
  CheckValid(u);

  CHECK_THROWS_AS(u.StarSubdivide({0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(u.StarSubdivide({1}), InvalidInput);
}

TEST_CASE("value-semantic star subdivision leaves the input alone") {
  const Triangulation t = SingleTriangle();
  auto [u, b] = StarSubdivided(t, {1, 2});
  CHECK(t.num_simplices() == 1);
  CHECK(u.num_simplices() == 2);
  CHECK(b == 3);
}

TEST_CASE("paper example subdivisions") {
  PaperExample ex = BuildPaperExample();
  Triangulation& t = ex.triangulation;
  const VertexId e = t.StarSubdivide({0, 1});
  CHECK(t.num_simplices() == 4);
  t.StarSubdivide({0, 2, e});
  CHECK(t.num_simplices() == 6);
  CHECK(t.num_vertices() == 6);
  CheckValid(t);
}

TEST_CASE("enumerate faces") {
  const Triangulation t = SingleTriangle();
  CHECK(t.Faces().size() == 7);
  CHECK(t.Faces() == Sorted(oracle::BruteFaces(t)));

  PaperExample ex = BuildPaperExample();
  const std::vector<SimplexFace> through_a = ex.triangulation.Faces(0);
  CHECK(through_a.size() == 6);
  for (const SimplexFace& f : through_a) CHECK(std::count(f.begin(), f.end(), 0U) == 1);

  Triangulation u = SingleTriangle();
  CHECK_THROWS_AS(u.Faces(7), InvalidInput);
}

TEST_CASE("a vertex of degree zero is rejected") {
  // After refining, the old simplex vertex set remains; an isolated vertex
  // needs an explicit construction.
  auto p = std::make_shared<const Polytope>(Polytope::Simplex(3));
  std::vector<Point> coords = p->vertices();
  coords.push_back({Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  Triangulation t = Triangulation::FromSimplices(p, coords, {{0, 1, 2}});
  CHECK(t.Degree(3) == 0);
  CHECK_THROWS_AS(t.Faces(3), InvalidInput);
}

TEST_CASE("FromSimplices rejects bad input") {
  auto p = std::make_shared<const Polytope>(Polytope::Simplex(3));
  CHECK_THROWS_AS(Triangulation::FromSimplices(p, p->vertices(), {{0, 1}}), InvalidInput);
  std::vector<Point> outside = p->vertices();
  outside[0] = {2, -1, 0};
  CHECK_THROWS_AS(Triangulation::FromSimplices(p, outside, {{0, 1, 2}}), InvalidInput);
  std::vector<Point> coords = p->vertices();
  coords.push_back({Rational(1, 2), Rational(1, 2), 0});
  CHECK_THROWS_AS(Triangulation::FromSimplices(p, coords, {{0, 3, 2}}), InvalidInput);
}

TEST_CASE("refinement contracts the diameter") {
  Triangulation t = SingleTriangle();
  CHECK(t.SquaredDiameter() == 2);
  Triangulation r1 = RefineGlobal(t);
  CHECK(r1.SquaredDiameter() * 9 <= t.SquaredDiameter() * 4);
  Triangulation r2 = RefineGlobal(r1);
  CHECK(r2.SquaredDiameter() * 81 <= t.SquaredDiameter() * 16);
  CheckValid(r2);

  Triangulation b1 = BarycentricRefine(t);
  CHECK(b1.num_simplices() == 6);
  CHECK(b1.SquaredDiameter() * 9 <= t.SquaredDiameter() * 4);
  CheckValid(b1);

  for (auto kind : {testing::PolytopeKind::kTetrahedron, testing::PolytopeKind::kSquare,
                    testing::PolytopeKind::kHexadecagon}) {
    Triangulation s = Triangulation::Initial(testing::MakePolytope(kind));
    const int k = s.polytope().dim() + 1;
    for (int round = 0; round < 2; ++round) {
      Triangulation next = RefineGlobal(s);
      CHECK(next.SquaredDiameter() * k * k <= s.SquaredDiameter() * (k - 1) * (k - 1));
      CheckValid(next);
      s = std::move(next);
    }
  }
}

TEST_CASE("random star subdivisions preserve the invariants") {
  testing::Rng rng(5);
  for (auto kind : {testing::PolytopeKind::kTriangle, testing::PolytopeKind::kTetrahedron,
                    testing::PolytopeKind::kHexadecagon}) {
    Triangulation t = Triangulation::Initial(testing::MakePolytope(kind));
    const Rational volume = t.TotalVolume();
    for (int step = 0; step < 40; ++step) {
      std::vector<SimplexFace> faces = t.Faces();
      std::erase_if(faces, [](const SimplexFace& f) { return f.size() < 2; });
      const SimplexFace& f = faces[testing::Uniform(rng, 0, static_cast<int>(faces.size()) - 1)];
      const size_t before = t.num_simplices();
      size_t containing = 0;
      for (const SimplexFace& s : t.MaximalSimplices()) {
        containing += std::includes(s.begin(), s.end(), f.begin(), f.end());
      }
      const VertexId old_count = static_cast<VertexId>(t.num_vertices());
      const VertexId b = t.StarSubdivide(f);
      CHECK(b == old_count);
      CHECK(t.num_simplices() == before + containing * (f.size() - 1));
      CHECK(t.TotalVolume() == volume);
      CHECK_FALSE(t.IsFace(f));
      std::vector<int> supps;
      for (VertexId v : f) supps.push_back(t.supp(v));
      CHECK(t.supp(b) == t.polytope().Join(supps));
    }
    CheckValid(t);
    CHECK(t.Faces() == Sorted(oracle::BruteFaces(t)));
  }
}

}  // namespace
}  // namespace mkkm
