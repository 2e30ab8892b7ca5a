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

#ifndef MKKM_SIMPLICIAL_H_
#define MKKM_SIMPLICIAL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mkkm/geometry.h"
#include "mkkm/rational.h"

namespace mkkm {

using VertexId = std::uint32_t;

// A face of a triangulation: its vertex ids in increasing order.
using SimplexFace = std::vector<VertexId>;

SimplexFace MakeFace(std::vector<VertexId> ids);

// A geometric triangulation of a polytope. Vertex ids are dense and
// append-only; subdivision never renumbers existing vertices.
class Triangulation {
 public:
  // Barycentric subdivision of the face lattice of P: one vertex per face
  // (vertex id == face id), one maximal simplex per maximal flag.
  static Triangulation Initial(std::shared_ptr<const Polytope> polytope);

  // Triangulation given explicitly. Throws InvalidInput if a coordinate lies
  // outside P, a simplex has the wrong size, or the simplex volumes do not
  // add up to vol(P).
  static Triangulation FromSimplices(std::shared_ptr<const Polytope> polytope,
                                     std::vector<Point> coords,
                                     std::vector<SimplexFace> simplices);

  const Polytope& polytope() const { return *polytope_; }
  const std::shared_ptr<const Polytope>& polytope_ptr() const {
    return polytope_;
  }

  size_t num_vertices() const { return coords_.size(); }
  size_t num_simplices() const { return live_count_; }
  const Point& coords(VertexId v) const { return coords_.at(v); }
  // Minimal face of P containing the vertex.
  int supp(VertexId v) const { return supp_.at(v); }

  // Live maximal simplices, sorted.
  std::vector<SimplexFace> MaximalSimplices() const;
  std::vector<SimplexFace> MaximalSimplicesContaining(VertexId v) const;
  // Number of live maximal simplices incident to v.
  size_t Degree(VertexId v) const;

  bool IsFace(const SimplexFace& face) const;

  // Every nonempty face, deduplicated and sorted; restricted to faces that
  // contain `containing` when given. Throws InvalidInput for a vertex id
  // that is unknown or not in any simplex.
  std::vector<SimplexFace> Faces(
      std::optional<VertexId> containing = std::nullopt) const;

  // In-place star subdivision T(F): inserts the barycenter b_F and replaces
  // every maximal simplex S containing F by the |F| simplices
  // (S - {v_r}) + {b_F}, v_r in F. Returns the id of b_F.
  VertexId StarSubdivide(const SimplexFace& face);

  // Maximal edge length, squared.
  Rational SquaredDiameter() const;
  Rational SquaredDiameterOf(const SimplexFace& simplex) const;
  Rational Volume(const SimplexFace& simplex) const;
  Rational TotalVolume() const;

 private:
  explicit Triangulation(std::shared_ptr<const Polytope> polytope)
      : polytope_(std::move(polytope)) {}
  VertexId AddVertex(Point coords);
  // Barycenter of existing vertices; supp comes from the face lattice.
  VertexId AddBarycenter(std::span<const VertexId> ids);
  void AddSimplex(SimplexFace simplex);
  void RemoveSimplex(uint32_t slot);

  std::shared_ptr<const Polytope> polytope_;
  std::vector<Point> coords_;
  std::vector<int> supp_;
  std::vector<SimplexFace> slots_;
  std::vector<bool> alive_;
  std::vector<uint32_t> free_slots_;
  std::vector<std::vector<uint32_t>> incident_;
  size_t live_count_ = 0;

  friend Triangulation RefineGlobal(const Triangulation& t);
  friend Triangulation BarycentricRefine(const Triangulation& t);
};

// Value-semantic star subdivision.
std::pair<Triangulation, VertexId> StarSubdivided(const Triangulation& t,
                                                  const SimplexFace& face);

// Uniform refinement. Dimensions 1-3 use edge-midpoint (red) refinement,
// which at least halves the diameter in dimensions 1 and 2 and shrinks it
// by 1/sqrt(2) or better in dimension 3 (shortest interior diagonal).
// Higher dimensions use barycentric subdivision of every maximal simplex.
Triangulation RefineGlobal(const Triangulation& t);

// Barycentric subdivision of every maximal simplex.
Triangulation BarycentricRefine(const Triangulation& t);

// JSON-ready debug description: vertex coordinates, supports and simplices.
struct TriangulationDump {
  struct Vertex {
    VertexId id;
    Point coords;
    int supp_face;
  };
  std::vector<Vertex> vertices;
  std::vector<SimplexFace> simplices;
};
TriangulationDump Dump(const Triangulation& t);

}  // namespace mkkm

#endif  // MKKM_SIMPLICIAL_H_
