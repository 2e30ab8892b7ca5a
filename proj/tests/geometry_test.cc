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

#include "doctest.h"
#include "mkkm/geometry.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace mkkm {
namespace {

int CountDim(const Polytope& p, int dim) {
  int n = 0;
  for (const Face& f : p.faces()) n += f.dim == dim;
  return n;
}

Point Combine(const std::vector<Point>& pts, const HullCertificate& c) {
  Point x(pts.front().size(), Rational(0));
  for (const auto& [i, w] : c.weights) x = Add(x, Scale(pts.at(i), w));
  return x;
}

void CheckSound(const std::vector<Point>& pts, const Point& p,
                const HullCertificate& c) {
  Rational total = 0;
  for (const auto& [i, w] : c.weights) {
    CHECK(w >= 0);
    total += w;
  }
  CHECK(total == 1);
  CHECK(Combine(pts, c) == p);
}

TEST_CASE("face lattices of the standard polytopes") {
  const Polytope tri = Polytope::Simplex(3);
  CHECK(tri.vertices().size() == 3);
  CHECK(CountDim(tri, 1) == 3);
  CHECK(CountDim(tri, 2) == 1);
  CHECK(tri.faces().size() == 7);
  CHECK(tri.dim() == 2);
  CHECK(tri.ambient_dim() == 3);

  const Polytope gon = Polytope::RegularPolygon(16, 1);
  CHECK(gon.vertices().size() == 16);
  CHECK(CountDim(gon, 1) == 16);
  CHECK(CountDim(gon, 2) == 1);
  for (const Point& v : gon.vertices()) CHECK(Dot(v, v) == 1);

  const Polytope square = Polytope::Explicit({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  CHECK(square.vertices().size() == 4);
  CHECK(CountDim(square, 1) == 4);
  CHECK(CountDim(square, 2) == 1);

  const Polytope cube = Polytope::Explicit({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                            {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(CountDim(cube, 1) == 12);
  CHECK(CountDim(cube, 2) == 6);
}

TEST_CASE("improper face has the largest id and faces are ordered") {
  for (auto kind : {testing::PolytopeKind::kTriangle, testing::PolytopeKind::kTetrahedron,
                    testing::PolytopeKind::kSquare, testing::PolytopeKind::kHexadecagon}) {
    auto p = testing::MakePolytope(kind);
    CHECK(p->face(p->improper_face_id()).dim == p->dim());
    for (size_t i = 1; i < p->faces().size(); ++i) {
      const Face& a = p->faces()[i - 1];
      const Face& b = p->faces()[i];
      CHECK((a.dim < b.dim || (a.dim == b.dim && a.vertex_ids < b.vertex_ids)));
    }
    // Closed under intersection.
    for (const Face& a : p->faces()) {
      for (const Face& b : p->faces()) {
        if ((a.mask & b.mask) != 0) CHECK(p->FindFace(a.mask & b.mask).has_value());
      }
    }
  }
}

TEST_CASE("degenerate explicit polytopes are rejected") {
  CHECK_THROWS_AS(Polytope::Explicit({{0, 0}, {1, 1}, {2, 2}}), InvalidInput);
  CHECK_THROWS_AS(Polytope::Explicit({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                                      {0, 0, 1, 0}, {0, 0, 0, 1}}),
                  InvalidInput);
}

TEST_CASE("supp on the standard simplex") {
  const Polytope tri = Polytope::Simplex(3);
  const Face& v1 = tri.face(tri.Supp({1, 0, 0}));
  CHECK(v1.vertex_ids == std::vector<int>{0});
  const Face& e12 = tri.face(tri.Supp({Rational(1, 2), Rational(1, 2), 0}));
  CHECK(e12.vertex_ids == std::vector<int>{0, 1});
  CHECK(tri.Supp({Rational(1, 3), Rational(1, 3), Rational(1, 3)}) == tri.improper_face_id());
  CHECK_THROWS_AS(tri.Supp({1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(tri.Supp({2, -1, 0}), InvalidInput);
}

TEST_CASE("supp is minimal and matches the join of vertex supports") {
  testing::Rng rng(11);
  for (auto kind : {testing::PolytopeKind::kTriangle, testing::PolytopeKind::kTetrahedron,
                    testing::PolytopeKind::kSquare, testing::PolytopeKind::kHexadecagon}) {
    auto p = testing::MakePolytope(kind);
    for (const Face& f : p->faces()) {
      // Barycenter of a face lies in its relative interior.
      const Point b = p->FaceBarycenter(f.id);
      CHECK(p->Supp(b) == f.id);
      for (const Face& g : p->faces()) {
        CHECK(p->FaceContains(g.id, b) == p->IsSubface(f.id, g.id));
      }
      std::vector<int> verts;
      for (int v : f.vertex_ids) verts.push_back(p->VertexFace(v));
      CHECK(p->Join(verts) == f.id);
    }
    for (int i = 0; i < 50; ++i) {
      const Point x = testing::RandomInteriorPoint(rng, *p);
      CHECK(p->Supp(x) == p->improper_face_id());
    }
  }
}

TEST_CASE("regular polygon facets have nonnegative inner products") {
  for (int m : {8, 9, 12, 16, 20}) {
    const Polytope p = Polytope::RegularPolygon(m, 1);
    for (const Face& f : p.faces()) {
      if (f.dim != 1) continue;
      CHECK(Dot(p.vertices()[f.vertex_ids[0]], p.vertices()[f.vertex_ids[1]]) >= 0);
    }
  }
}

TEST_CASE("conv_contains examples") {
  const std::vector<Point> tri = {{0, 0}, {1, 0}, {0, 1}};
  const Point centroid = {Rational(1, 3), Rational(1, 3)};
  auto c = ConvContains(tri, centroid);
  REQUIRE(c.has_value());
  CheckSound(tri, centroid, *c);
  for (const auto& [i, w] : c->weights) CHECK(w == Rational(1, 3));

  const std::vector<Point> seg = {{0, 0}, {1, 0}};
  CHECK_FALSE(ConvContains(seg, {2, 0}).has_value());

  const std::vector<Point> pts = {{1, 0}, {-1, 1}, {-1, -1}};
  auto d = ConvContains(pts, {0, 0});
  REQUIRE(d.has_value());
  CheckSound(pts, {0, 0}, *d);
  std::vector<Rational> w(3);
  for (const auto& [i, x] : d->weights) w[i] = x;
  CHECK(w == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)});

  CHECK_THROWS_AS(ConvContains(seg, {0, 0, 0}), InvalidInput);
}

TEST_CASE("conv_contains agrees with an exact LP on random instances") {
  testing::Rng rng(23);
  int inside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = testing::Uniform(rng, 1, 3);
    const int count = testing::Uniform(rng, 1, 6);
    std::vector<Point> pts(count, Point(dim));
    for (Point& q : pts) {
      for (Rational& c : q) c = testing::Uniform(rng, -2, 2);
    }
    Point p(dim);
    for (Rational& c : p) {
      c = Rational(testing::Uniform(rng, -3, 3), testing::Uniform(rng, 1, 3));
      c.canonicalize();
    }
    if (trial % 3 == 0) {
      // Force some hits with a random convex combination.
      p = Point(dim, Rational(0));
      for (const Point& q : pts) p = Add(p, Scale(q, Rational(1, count)));
    }
    auto c = ConvContains(pts, p);
    auto lp = oracle::HullWeightsLp(pts, p);
    CHECK(c.has_value() == lp.has_value());
    if (c) {
      ++inside;
      CheckSound(pts, p, *c);
    }
  }
  CHECK(inside > 60);
}

TEST_CASE("chart volume adds up over a triangulation of the square") {
  const Polytope square = Polytope::Explicit({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const Point a = {1, 1}, b = {1, -1}, c = {-1, 1}, d = {-1, -1};
  const std::vector<Point> s1 = {a, b, c}, s2 = {b, c, d};
  const std::vector<Point> unit = {{0, 0}, {1, 0}, {0, 1}};
  CHECK(square.ChartVolume(s1) + square.ChartVolume(s2) == 8 * square.ChartVolume(unit));
}

}  // namespace
}  // namespace mkkm
