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

#ifndef MKKM_COVER_H_
#define MKKM_COVER_H_

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mkkm/geometry.h"
#include "mkkm/matroid.h"
#include "mkkm/rational.h"

namespace mkkm {

// No (w, tau) satisfies the label constraints. On an M-Komiya cover this
// cannot happen for a forbidden set of rank <= k-1, so it signals an invalid
// cover.
class NoLabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family of closed sets A_sigma^w (w in W, sigma a face of P) with
// designated points y_sigma^w in sigma. Oracles are immutable.
class CoverOracle {
 public:
  CoverOracle(Matroid matroid, std::shared_ptr<const Polytope> polytope);
  virtual ~CoverOracle() = default;

  const Matroid& matroid() const { return matroid_; }
  const Polytope& polytope() const { return *polytope_; }
  const std::shared_ptr<const Polytope>& polytope_ptr() const {
    return polytope_;
  }

  // x in A_sigma^w. Throws InvalidInput if x is not in P.
  bool Member(int w, int face_id, const Point& x) const;
  Point YPoint(int w, int face_id) const;

  // Same as Member for x already known to lie in P.
  virtual bool MemberInP(int w, int face_id, const Point& x) const = 0;
  // False only if A_sigma^w is empty.
  virtual bool MayBeNonempty(int /*w*/, int /*face_id*/) const { return true; }

 protected:
  virtual Point YPointImpl(int w, int face_id) const;
  void CheckIndices(int w, int face_id) const;

 private:
  Matroid matroid_;
  std::shared_ptr<const Polytope> polytope_;
};

struct LabelChoice {
  int w = 0;
  int tau = 0;

  friend bool operator==(const LabelChoice&, const LabelChoice&) = default;
};

// Smallest w outside `forbidden`, then smallest face tau of supp_face
// (faces are ordered by dimension, then id), with x in A_tau^w.
// Throws NoLabelError if there is none.
LabelChoice ChooseLabel(const CoverOracle& cover, const Point& x, int supp_face,
                        ElementSet forbidden);

struct CoverViolation {
  ElementSet hyperplane = 0;
  int face = 0;
  Point sample;
};

struct ValidationReport {
  bool passed = true;
  int resolution = 0;
  size_t samples_checked = 0;
  std::optional<CoverViolation> violation;
};

// Grid check of the M-Komiya condition. For each hyperplane H of the
// matroid and each face tau of P, every sample of a barycentric grid of the
// given resolution on tau must lie in some A_sigma^w with sigma in tau and
// w outside H. Sound but incomplete: a pass is evidence, a failure is a
// concrete uncovered point.
ValidationReport ValidateMKomiya(const CoverOracle& cover, int resolution);

// Barycentric grid of the given resolution on a face of P (on the simplices
// of its barycentric subdivision when the face is not a simplex).
std::vector<Point> SampleFace(const Polytope& polytope, int face_id,
                              int resolution);

// ---------------------------------------------------------------------------
// Halfspace-described covers.

// {x in P : <n_i, x> <= b_i for all i}, intersected with sigma if on_face.
struct Polyhedron {
  std::vector<Halfspace> halfspaces;
  bool on_face = false;

  bool Contains(const Point& x) const;
};

// Each A_sigma^w is a finite union of polyhedra; unlisted sets are empty.
// y_sigma^w defaults to the barycenter of sigma.
class HalfspaceCover : public CoverOracle {
 public:
  HalfspaceCover(Matroid matroid, std::shared_ptr<const Polytope> polytope);

  void AddRegion(int w, int face_id, Polyhedron region);
  void SetYPoint(int w, int face_id, Point y);
  const std::vector<Polyhedron>& Regions(int w, int face_id) const;

  bool MemberInP(int w, int face_id, const Point& x) const override;
  bool MayBeNonempty(int w, int face_id) const override;

 protected:
  Point YPointImpl(int w, int face_id) const override;

 private:
  size_t Slot(int w, int face_id) const;
  std::vector<std::vector<Polyhedron>> regions_;
  std::vector<std::vector<std::vector<IntegerHalfspace>>> integer_regions_;
  std::vector<std::optional<Point>> y_;
};

// A KKM cover read as a Komiya cover: only vertex-indexed sets are nonempty
// and y sits at the vertex.
struct VertexRegion {
  int w = 0;
  int vertex = 0;
  Polyhedron region;
};
std::shared_ptr<HalfspaceCover> BuildKkmVertexCover(
    Matroid matroid, std::shared_ptr<const Polytope> polytope,
    const std::vector<VertexRegion>& regions);

// ---------------------------------------------------------------------------
// Colorful Caratheodory cover in the plane. For a proper face sigma meeting
// the ray through v: A = {x in P : <x, v> >= 0}, y = the meeting point.
// Otherwise A = sigma and y = its barycenter. A_P^v is empty.
class CaratheodoryCover : public CoverOracle {
 public:
  CaratheodoryCover(Matroid matroid, std::shared_ptr<const Polytope> polygon,
                    std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  // sigma meets the ray from the origin through points()[v].
  const std::optional<Point>& RayHit(int v, int face_id) const;

  bool MemberInP(int w, int face_id, const Point& x) const override;
  bool MayBeNonempty(int w, int face_id) const override;

 protected:
  Point YPointImpl(int w, int face_id) const override;

 private:
  std::vector<Point> points_;
  std::vector<std::optional<Point>> hits_;
};

// ---------------------------------------------------------------------------
// Cake cutting.

// Nonnegative piecewise-linear density on [0, 1]. Each piece is linear from
// value_from at `from` to value_to at `to`; the density is zero elsewhere.
class Density {
 public:
  struct Piece {
    Rational from, to, value_from, value_to;
  };

  explicit Density(std::vector<Piece> pieces);
  static Density Uniform();

  const std::vector<Piece>& pieces() const { return pieces_; }
  // Exact integral over [a, b], 0 <= a <= b <= 1.
  Rational Integral(const Rational& a, const Rational& b) const;
  Rational MaxValue() const;

 private:
  std::vector<Piece> pieces_;
};

// Values of the k pieces of partition x (x in the simplex; piece i is
// [x_1 + ... + x_{i-1}, x_1 + ... + x_i]).
std::vector<Rational> PieceValues(const Density& density, const Point& x);

// Guest j weakly prefers piece i: A_{vertex i}^j = {x : value_j(piece i) >=
// value_j(piece l) for all l}. Non-vertex faces carry empty sets.
class CakeCover : public CoverOracle {
 public:
  CakeCover(Matroid matroid, std::vector<Density> guests, int pieces);

  const std::vector<Density>& guests() const { return guests_; }
  int pieces() const { return pieces_; }

  bool MemberInP(int w, int face_id, const Point& x) const override;
  bool MayBeNonempty(int w, int face_id) const override;

 private:
  std::vector<Density> guests_;
  int pieces_;
};

}  // namespace mkkm

#endif  // MKKM_COVER_H_
