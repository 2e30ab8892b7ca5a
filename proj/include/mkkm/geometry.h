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

#ifndef MKKM_GEOMETRY_H_
#define MKKM_GEOMETRY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mkkm/rational.h"

namespace mkkm {

// Vertex subsets of a polytope as bitmasks (at most 64 vertices).
using VertexMask = std::uint64_t;

// A nonempty face of a polytope, identified by the polytope vertices on it.
struct Face {
  int id = 0;
  std::vector<int> vertex_ids;
  VertexMask mask = 0;
  int dim = 0;
};

// {x : <normal, x> <= offset}.
struct Halfspace {
  Point normal;
  Rational offset;
};

// x = num / den with integer coordinates and den > 0.
struct ScaledPoint {
  explicit ScaledPoint(const Point& x);
  std::vector<mpz_class> num;
  mpz_class den;
};

// A halfspace scaled to integer coefficients.
struct IntegerHalfspace {
  explicit IntegerHalfspace(const Halfspace& h);
  // Sign of <normal, x> - offset.
  int Compare(const ScaledPoint& x) const;
  std::vector<mpz_class> normal;
  mpz_class offset;
};

// A convex polytope with an explicit face lattice. Faces are sorted by
// (dimension, vertex ids), so the polytope itself has the largest id.
class Polytope {
 public:
  // The standard simplex conv{e_1, ..., e_k} in R^k.
  static Polytope Simplex(int k);
  // Convex m-gon inscribed in the circle of the given radius. Vertices are
  // exact rational points on the circle at angles close to (2i+1)pi/m.
  static Polytope RegularPolygon(int m, const Rational& radius);
  // Full-dimensional polytope in R^d, d <= 3, from its vertex list.
  static Polytope Explicit(std::vector<Point> vertices);

  int dim() const { return dim_; }
  int ambient_dim() const { return static_cast<int>(vertices_.front().size()); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }
  int improper_face_id() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Halfspace>& facets() const { return facets_; }

  // Face id for an exact vertex set, if that set is a face.
  std::optional<int> FindFace(VertexMask mask) const;
  int VertexFace(int vertex) const;

  bool Contains(const Point& x) const;
  bool FaceContains(int face_id, const Point& x) const;
  bool IsSubface(int sub, int super) const {
    return (faces_[sub].mask & ~faces_[super].mask) == 0;
  }

  // Minimal face containing x. Throws InvalidInput when x is outside P.
  int Supp(const Point& x) const;
  // Minimal face containing all the given faces.
  int Join(std::span<const int> face_ids) const;

  const Point& FaceBarycenter(int face_id) const;
  Rational SquaredDiameter() const;

  // d-dimensional volume scaled by a constant depending only on P (the
  // projection onto a fixed coordinate chart of the affine hull).
  Rational ChartVolume(std::span<const Point> simplex) const;

 private:
  Polytope() = default;
  void BuildLattice(std::vector<VertexMask> facet_masks);
  void CheckPointDim(const Point& x) const;
  // Bitmask of facets tight at x, or nullopt when x is outside P.
  std::optional<VertexMask> TightMask(const Point& x) const;

  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Face> faces_;
  std::vector<Halfspace> facets_;
  std::vector<IntegerHalfspace> integer_facets_;
  std::vector<Point> barycenters_;
  std::vector<VertexMask> facet_masks_;
  // Affine hull equalities <a, x> = b.
  std::vector<std::pair<Point, Rational>> equalities_;
  std::vector<int> chart_;
  std::map<VertexMask, int> face_by_mask_;
};

struct HullCertificate {
  // (index into the queried point list, weight); weights are positive and
  // sum to one.
  std::vector<std::pair<int, Rational>> weights;
};

// Exact decision of p in conv(points) with a certificate. Searches affinely
// independent subsets in order of size, then lexicographically.
std::optional<HullCertificate> ConvContains(std::span<const Point> points,
                                            const Point& p);

// True when the weighted combination of `points` reproduces p exactly with
// nonnegative weights summing to one.
bool CheckCertificate(std::span<const Point> points, const Point& p,
                      const HullCertificate& certificate);

}  // namespace mkkm

#endif  // MKKM_GEOMETRY_H_
