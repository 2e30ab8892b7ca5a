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

#include "mkkm/cover.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace mkkm {

CoverOracle::CoverOracle(Matroid matroid, std::shared_ptr<const Polytope> polytope)
    : matroid_(std::move(matroid)), polytope_(std::move(polytope)) {}

void CoverOracle::CheckIndices(int w, int face_id) const {
  if (w < 0 || w >= matroid_.ground_size()) {
    throw std::out_of_range("ground element " + std::to_string(w) +
                            " out of range");
  }
  if (face_id < 0 || face_id >= static_cast<int>(polytope_->faces().size())) {
    throw std::out_of_range("face id " + std::to_string(face_id) +
                            " out of range");
  }
}

bool CoverOracle::Member(int w, int face_id, const Point& x) const {
  CheckIndices(w, face_id);
  if (!polytope_->Contains(x)) {
    throw InvalidInput("membership query outside the polytope");
  }
  return MayBeNonempty(w, face_id) && MemberInP(w, face_id, x);
}

Point CoverOracle::YPoint(int w, int face_id) const {
  CheckIndices(w, face_id);
  return YPointImpl(w, face_id);
}

Point CoverOracle::YPointImpl(int /*w*/, int face_id) const {
  return polytope_->FaceBarycenter(face_id);
}

LabelChoice ChooseLabel(const CoverOracle& cover, const Point& x, int supp_face,
                        ElementSet forbidden) {
  const Polytope& p = cover.polytope();
  std::vector<int> subfaces;
  for (const Face& f : p.faces()) {
    if (p.IsSubface(f.id, supp_face)) subfaces.push_back(f.id);
  }
  for (int w = 0; w < cover.matroid().ground_size(); ++w) {
    if (Contains(forbidden, w)) continue;
    for (int tau : subfaces) {
      if (cover.MayBeNonempty(w, tau) && cover.MemberInP(w, tau, x)) {
        return {w, tau};
      }
    }
  }
  throw NoLabelError("no admissible label: the cover violates the M-Komiya "
                     "condition at this point");
}

namespace {

void Compositions(int parts, int total, std::vector<int>* current,
                  std::vector<std::vector<int>>* out) {
  if (parts == 1) {
    current->push_back(total);
    out->push_back(*current);
    current->pop_back();
    return;
  }
  for (int i = total; i >= 0; --i) {
    current->push_back(i);
    Compositions(parts - 1, total - i, current, out);
    current->pop_back();
  }
}

void GridOnSimplex(const std::vector<Point>& corners, int resolution,
                   std::vector<Point>* out) {
  std::vector<std::vector<int>> comps;
  std::vector<int> scratch;
  Compositions(static_cast<int>(corners.size()), resolution, &scratch, &comps);
  for (const auto& c : comps) {
    Point x(corners.front().size(), Rational(0));
    for (size_t i = 0; i < corners.size(); ++i) {
      if (c[i] == 0) continue;
      Rational weight(c[i], resolution);
      weight.canonicalize();
      for (size_t j = 0; j < x.size(); ++j) x[j] += weight * corners[i][j];
    }
    out->push_back(std::move(x));
  }
}

}  // namespace

std::vector<Point> SampleFace(const Polytope& polytope, int face_id,
                              int resolution) {
  if (resolution < 1) throw InvalidInput("resolution must be >= 1");
  const Face& face = polytope.face(face_id);
  std::vector<Point> samples;
  if (static_cast<int>(face.vertex_ids.size()) == face.dim + 1) {
    std::vector<Point> corners;
    for (int v : face.vertex_ids) corners.push_back(polytope.vertices()[v]);
    GridOnSimplex(corners, resolution, &samples);
    return samples;
  }
  // Flags of faces inside `face`, descending one dimension at a time.
  std::vector<int> chain;
  auto descend = [&](auto&& self, int current) -> void {
    chain.push_back(current);
    const Face& f = polytope.face(current);
    if (f.dim == 0) {
      std::vector<Point> corners;
      for (int id : chain) corners.push_back(polytope.FaceBarycenter(id));
      GridOnSimplex(corners, resolution, &samples);
    } else {
      for (const Face& g : polytope.faces()) {
        if (g.dim == f.dim - 1 && polytope.IsSubface(g.id, current)) {
          self(self, g.id);
        }
      }
    }
    chain.pop_back();
  };
  descend(descend, face_id);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

ValidationReport ValidateMKomiya(const CoverOracle& cover, int resolution) {
  ValidationReport report;
  report.resolution = resolution;
  const Polytope& p = cover.polytope();
  const Matroid& m = cover.matroid();
  const std::vector<Flat> hyperplanes = Hyperplanes(m);
  const ElementSet ground = m.ground_set();
  for (const Face& tau : p.faces()) {
    std::vector<int> subfaces;
    for (const Face& f : p.faces()) {
      if (p.IsSubface(f.id, tau.id)) subfaces.push_back(f.id);
    }
    for (const Point& x : SampleFace(p, tau.id, resolution)) {
      ++report.samples_checked;
      ElementSet covered = 0;
      for (int w = 0; w < m.ground_size(); ++w) {
        for (int sigma : subfaces) {
          if (cover.MayBeNonempty(w, sigma) && cover.MemberInP(w, sigma, x)) {
            covered |= Singleton(w);
            break;
          }
        }
      }
      for (const Flat& h : hyperplanes) {
        if ((covered & ground & ~h.elements) == 0) {
          report.passed = false;
          report.violation = CoverViolation{h.elements, tau.id, x};
          return report;
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

bool Polyhedron::Contains(const Point& x) const {
  for (const Halfspace& h : halfspaces) {
    if (h.normal.size() != x.size()) {
      throw InvalidInput("halfspace dimension does not match the polytope");
    }
    if (Dot(h.normal, x) > h.offset) return false;
  }
  return true;
}

HalfspaceCover::HalfspaceCover(Matroid matroid,
                               std::shared_ptr<const Polytope> polytope)
    : CoverOracle(std::move(matroid), std::move(polytope)) {
  const size_t slots =
      static_cast<size_t>(this->matroid().ground_size()) *
      this->polytope().faces().size();
  regions_.resize(slots);
  integer_regions_.resize(slots);
  y_.resize(slots);
}

size_t HalfspaceCover::Slot(int w, int face_id) const {
  CheckIndices(w, face_id);
  return static_cast<size_t>(w) * polytope().faces().size() + face_id;
}

void HalfspaceCover::AddRegion(int w, int face_id, Polyhedron region) {
  for (const Halfspace& h : region.halfspaces) {
    if (static_cast<int>(h.normal.size()) != polytope().ambient_dim()) {
      throw InvalidInput("halfspace dimension does not match the polytope");
    }
  }
  std::vector<IntegerHalfspace> scaled;
  for (const Halfspace& h : region.halfspaces) scaled.emplace_back(h);
  integer_regions_[Slot(w, face_id)].push_back(std::move(scaled));
  regions_[Slot(w, face_id)].push_back(std::move(region));
}

void HalfspaceCover::SetYPoint(int w, int face_id, Point y) {
  if (!polytope().FaceContains(face_id, y)) {
    throw InvalidInput("designated point must lie in its face");
  }
  y_[Slot(w, face_id)] = std::move(y);
}

const std::vector<Polyhedron>& HalfspaceCover::Regions(int w,
                                                       int face_id) const {
  return regions_[Slot(w, face_id)];
}

bool HalfspaceCover::MayBeNonempty(int w, int face_id) const {
  return !regions_[Slot(w, face_id)].empty();
}

bool HalfspaceCover::MemberInP(int w, int face_id, const Point& x) const {
  const size_t slot = Slot(w, face_id);
  if (regions_[slot].empty()) return false;
  if (static_cast<int>(x.size()) != polytope().ambient_dim()) {
    throw InvalidInput("halfspace dimension does not match the polytope");
  }
  const ScaledPoint scaled(x);
  for (size_t r = 0; r < regions_[slot].size(); ++r) {
    if (regions_[slot][r].on_face && !polytope().FaceContains(face_id, x)) {
      continue;
    }
    const auto& halfspaces = integer_regions_[slot][r];
    if (std::all_of(halfspaces.begin(), halfspaces.end(),
                    [&](const IntegerHalfspace& h) { return h.Compare(scaled) <= 0; })) {
      return true;
    }
  }
  return false;
}

Point HalfspaceCover::YPointImpl(int w, int face_id) const {
  const auto& y = y_[Slot(w, face_id)];
  return y ? *y : polytope().FaceBarycenter(face_id);
}

std::shared_ptr<HalfspaceCover> BuildKkmVertexCover(
    Matroid matroid, std::shared_ptr<const Polytope> polytope,
    const std::vector<VertexRegion>& regions) {
  auto cover =
      std::make_shared<HalfspaceCover>(std::move(matroid), std::move(polytope));
  for (const VertexRegion& r : regions) {
    if (r.vertex < 0 ||
        r.vertex >= static_cast<int>(cover->polytope().vertices().size())) {
      throw InvalidInput("vertex index out of range in KKM cover");
    }
    cover->AddRegion(r.w, cover->polytope().VertexFace(r.vertex), r.region);
  }
  return cover;
}

// ---------------------------------------------------------------------------

namespace {

Rational Cross(const Point& a, const Point& b) {
  return a[0] * b[1] - a[1] * b[0];
}

std::optional<Point> RayMeetsFace(const Polytope& p, int face_id,
                                  const Point& v) {
  const Face& f = p.face(face_id);
  if (f.dim == 0) {
    const Point& u = p.vertices()[f.vertex_ids[0]];
    if (Cross(u, v) == 0 && Dot(u, v) > 0) return u;
    return std::nullopt;
  }
  if (f.dim != 1) return std::nullopt;
  const Point& a = p.vertices()[f.vertex_ids[0]];
  const Point& b = p.vertices()[f.vertex_ids[1]];
  // s v = a + t (b - a), s > 0, 0 <= t <= 1.
  Point e = Subtract(b, a);
  Rational det = Cross(e, v);
  if (det == 0) return std::nullopt;
  Rational t = Cross(v, a) / det;
  if (t < 0 || t > 1) return std::nullopt;
  Point hit = Add(a, Scale(e, t));
  if (Dot(hit, v) <= 0) return std::nullopt;
  return hit;
}

}  // namespace

CaratheodoryCover::CaratheodoryCover(Matroid matroid,
                                     std::shared_ptr<const Polytope> polygon,
                                     std::vector<Point> points)
    : CoverOracle(std::move(matroid), std::move(polygon)),
      points_(std::move(points)) {
  const Polytope& p = polytope();
  if (p.ambient_dim() != 2 || p.dim() != 2) {
    throw InvalidInput("the Caratheodory cover needs a planar polygon");
  }
  if (static_cast<int>(points_.size()) != this->matroid().ground_size()) {
    throw InvalidInput("matroid ground set must match the point set");
  }
  const Point origin = {Rational(0), Rational(0)};
  if (!p.Contains(origin) || p.Supp(origin) != p.improper_face_id()) {
    throw InvalidInput("the polygon must contain the origin in its interior");
  }
  for (const Face& f : p.faces()) {
    if (f.dim != 1) continue;
    const Point& a = p.vertices()[f.vertex_ids[0]];
    const Point& b = p.vertices()[f.vertex_ids[1]];
    if (Dot(a, b) <= 0) {
      throw InvalidInput("polygon facet spans an angle of 90 degrees or more");
    }
  }
  for (const Point& v : points_) {
    if (v.size() != 2) throw InvalidInput("points must be planar");
    if (v[0] == 0 && v[1] == 0) {
      throw InvalidInput("the origin may not be one of the points");
    }
  }
  const size_t faces = p.faces().size();
  hits_.resize(points_.size() * faces);
  for (size_t v = 0; v < points_.size(); ++v) {
    for (size_t f = 0; f + 1 < faces; ++f) {
      hits_[v * faces + f] = RayMeetsFace(p, static_cast<int>(f), points_[v]);
    }
  }
}

const std::optional<Point>& CaratheodoryCover::RayHit(int v,
                                                      int face_id) const {
  CheckIndices(v, face_id);
  return hits_[static_cast<size_t>(v) * polytope().faces().size() + face_id];
}

bool CaratheodoryCover::MayBeNonempty(int /*w*/, int face_id) const {
  return face_id != polytope().improper_face_id();
}

bool CaratheodoryCover::MemberInP(int w, int face_id, const Point& x) const {
  if (face_id == polytope().improper_face_id()) return false;
  if (RayHit(w, face_id)) return Dot(x, points_[w]) >= 0;
  return polytope().FaceContains(face_id, x);
}

Point CaratheodoryCover::YPointImpl(int w, int face_id) const {
  if (const auto& hit = RayHit(w, face_id)) return *hit;
  return polytope().FaceBarycenter(face_id);
}

// ---------------------------------------------------------------------------

Density::Density(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.from < b.from; });
  for (size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.from < 0 || p.to > 1 || p.from >= p.to) {
      throw InvalidInput("density pieces must be nonempty subintervals of [0,1]");
    }
    if (p.value_from < 0 || p.value_to < 0) {
      throw InvalidInput("densities must be nonnegative");
    }
    if (i > 0 && pieces_[i - 1].to > p.from) {
      throw InvalidInput("density pieces overlap");
    }
  }
}

Density Density::Uniform() {
  return Density({{Rational(0), Rational(1), Rational(1), Rational(1)}});
}

Rational Density::Integral(const Rational& a, const Rational& b) const {
  Rational total = 0;
  for (const Piece& p : pieces_) {
    Rational lo = std::max(a, p.from);
    Rational hi = std::min(b, p.to);
    if (lo >= hi) continue;
    Rational slope = (p.value_to - p.value_from) / (p.to - p.from);
    Rational v_lo = p.value_from + slope * (lo - p.from);
    Rational v_hi = p.value_from + slope * (hi - p.from);
    total += (hi - lo) * (v_lo + v_hi) / 2;
  }
  return total;
}

Rational Density::MaxValue() const {
  Rational best = 0;
  for (const Piece& p : pieces_) {
    best = std::max({best, p.value_from, p.value_to});
  }
  return best;
}

std::vector<Rational> PieceValues(const Density& density, const Point& x) {
  std::vector<Rational> values;
  values.reserve(x.size());
  Rational left = 0;
  for (const Rational& length : x) {
    Rational right = left + length;
    values.push_back(density.Integral(left, right));
    left = right;
  }
  return values;
}

CakeCover::CakeCover(Matroid matroid, std::vector<Density> guests, int pieces)
    : CoverOracle(std::move(matroid),
                  std::make_shared<const Polytope>(Polytope::Simplex(pieces))),
      guests_(std::move(guests)),
      pieces_(pieces) {
  if (static_cast<int>(guests_.size()) != this->matroid().ground_size()) {
    throw InvalidInput("matroid ground set must be the set of guests");
  }
}

bool CakeCover::MayBeNonempty(int /*w*/, int face_id) const {
  return polytope().face(face_id).dim == 0;
}

bool CakeCover::MemberInP(int w, int face_id, const Point& x) const {
  const Face& f = polytope().face(face_id);
  if (f.dim != 0) return false;
  const std::vector<Rational> values = PieceValues(guests_[w], x);
  const Rational& own = values[f.vertex_ids[0]];
  return std::all_of(values.begin(), values.end(),
                     [&](const Rational& v) { return own >= v; });
}

}  // namespace mkkm
