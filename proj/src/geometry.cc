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

#include "mkkm/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace mkkm {
namespace {

int AffineRank(const std::vector<Point>& points) {
  if (points.size() <= 1) return 0;
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < points.size(); ++i) {
    rows.push_back(Subtract(points[i], points[0]));
  }
  return MatrixRank(std::move(rows));
}

Rational Determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[c][c];
      for (size_t cc = c; cc < n; ++cc) m[r][cc] -= factor * m[c][cc];
    }
  }
  return det;
}

VertexMask FullMask(size_t n) {
  return n == 64 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
}

// Normal of the hyperplane through d affinely independent points in R^d,
// d <= 3. Returns an empty vector if the points are dependent.
Point HyperplaneNormal(const std::vector<Point>& pts) {
  const size_t d = pts.front().size();
  if (d == 1) return {Rational(1)};
  if (d == 2) {
    Point u = Subtract(pts[1], pts[0]);
    if (u[0] == 0 && u[1] == 0) return {};
    return {u[1], -u[0]};
  }
  Point u = Subtract(pts[1], pts[0]);
  Point v = Subtract(pts[2], pts[0]);
  Point n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
             u[0] * v[1] - u[1] * v[0]};
  if (n[0] == 0 && n[1] == 0 && n[2] == 0) return {};
  return n;
}

}  // namespace

void Polytope::CheckPointDim(const Point& x) const {
  if (static_cast<int>(x.size()) != ambient_dim()) {
    throw InvalidInput("point has dimension " + std::to_string(x.size()) +
                       ", polytope lives in R^" +
                       std::to_string(ambient_dim()));
  }
}

void Polytope::BuildLattice(std::vector<VertexMask> facet_masks) {
  integer_facets_.clear();
  for (const Halfspace& h : facets_) integer_facets_.emplace_back(h);
  const VertexMask all = FullMask(vertices_.size());
  std::set<VertexMask> masks(facet_masks.begin(), facet_masks.end());
  masks.insert(all);
  // Close under intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexMask> current(masks.begin(), masks.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        VertexMask meet = current[i] & current[j];
        if (meet != 0 && masks.insert(meet).second) grew = true;
      }
    }
  }
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (!masks.contains(VertexMask{1} << v)) {
      throw InvalidInput("degenerate vertex list: point " + std::to_string(v) +
                         " is not a vertex of its convex hull");
    }
  }
  faces_.clear();
  for (VertexMask mask : masks) {
    Face face;
    face.mask = mask;
    std::vector<Point> pts;
    for (size_t v = 0; v < vertices_.size(); ++v) {
      if ((mask >> v) & 1U) {
        face.vertex_ids.push_back(static_cast<int>(v));
        pts.push_back(vertices_[v]);
      }
    }
    face.dim = AffineRank(pts);
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  face_by_mask_.clear();
  for (size_t i = 0; i < faces_.size(); ++i) {
    faces_[i].id = static_cast<int>(i);
    face_by_mask_[faces_[i].mask] = static_cast<int>(i);
  }
  facet_masks_ = std::move(facet_masks);
  barycenters_.clear();
  for (const Face& f : faces_) {
    std::vector<Point> pts;
    for (int v : f.vertex_ids) pts.push_back(vertices_[v]);
    barycenters_.push_back(Barycenter(pts));
  }

  // Coordinate chart: `dim_` coordinates on which the affine hull projects
  // injectively.
  chart_.clear();
  std::vector<Point> diffs;
  for (size_t i = 1; i < vertices_.size(); ++i) {
    diffs.push_back(Subtract(vertices_[i], vertices_[0]));
  }
  std::vector<std::vector<Rational>> columns;
  for (int c = 0; c < ambient_dim() && static_cast<int>(chart_.size()) < dim_;
       ++c) {
    std::vector<Rational> column;
    for (const Point& d : diffs) column.push_back(d[c]);
    columns.push_back(column);
    if (MatrixRank(columns) == static_cast<int>(columns.size())) {
      chart_.push_back(c);
    } else {
      columns.pop_back();
    }
  }
}

Polytope Polytope::Simplex(int k) {
  if (k < 1) throw InvalidInput("simplex needs k >= 1");
  if (k > 64) throw InvalidInput("simplex exceeds 64 vertices");
  Polytope p;
  p.dim_ = k - 1;
  for (int i = 0; i < k; ++i) {
    Point v(k, Rational(0));
    v[i] = 1;
    p.vertices_.push_back(std::move(v));
  }
  std::vector<VertexMask> masks;
  if (k >= 2) {
    for (int i = 0; i < k; ++i) {
      Point normal(k, Rational(0));
      normal[i] = -1;
      p.facets_.push_back({std::move(normal), Rational(0)});
      masks.push_back(FullMask(k) & ~(VertexMask{1} << i));
    }
  }
  p.equalities_.push_back({Point(k, Rational(1)), Rational(1)});
  p.BuildLattice(std::move(masks));
  return p;
}

Polytope Polytope::RegularPolygon(int m, const Rational& radius) {
  if (m < 3) throw InvalidInput("polygon needs at least 3 vertices");
  if (m > 64) throw InvalidInput("polygon exceeds 64 vertices");
  if (radius <= 0) throw InvalidInput("polygon radius must be positive");
  Polytope p;
  p.dim_ = 2;
  const double quarter = std::numbers::pi / 2;
  for (int i = 0; i < m; ++i) {
    double theta = (2 * i + 1) * std::numbers::pi / m;
    int quadrant = static_cast<int>(std::floor(theta / quarter));
    double phi = theta - quadrant * quarter;
    // Rational tan(phi/2) in [0, 1); the rational parametrisation of the
    // circle keeps the vertex exactly on it.
    Rational t(static_cast<long>(std::lround(std::tan(phi / 2) * 4096)), 4096);
    t.canonicalize();
    Rational denom = 1 + t * t;
    Rational x = (1 - t * t) / denom;
    Rational y = 2 * t / denom;
    for (int q = 0; q < quadrant % 4; ++q) {
      Rational nx = -y;
      y = x;
      x = nx;
    }
    p.vertices_.push_back({x * radius, y * radius});
  }
  std::vector<VertexMask> masks;
  for (int i = 0; i < m; ++i) {
    const Point& a = p.vertices_[i];
    const Point& b = p.vertices_[(i + 1) % m];
    Point normal = {b[1] - a[1], a[0] - b[0]};
    Rational offset = Dot(normal, a);
    for (int v = 0; v < m; ++v) {
      if (v == i || v == (i + 1) % m) continue;
      if (Dot(normal, p.vertices_[v]) >= offset) {
        throw InvalidInput("polygon vertices are not in strictly convex position");
      }
    }
    p.facets_.push_back({std::move(normal), offset});
    masks.push_back((VertexMask{1} << i) | (VertexMask{1} << ((i + 1) % m)));
  }
  p.BuildLattice(std::move(masks));
  return p;
}

Polytope Polytope::Explicit(std::vector<Point> vertices) {
  if (vertices.empty()) throw InvalidInput("explicit polytope has no vertices");
  if (vertices.size() > 64) throw InvalidInput("polytope exceeds 64 vertices");
  const size_t d = vertices.front().size();
  if (d == 0) throw InvalidInput("explicit polytope needs dimension >= 1");
  if (d > 3) throw InvalidInput("explicit polytopes are limited to d <= 3");
  for (const Point& v : vertices) {
    if (v.size() != d) throw InvalidInput("vertices differ in dimension");
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        throw InvalidInput("degenerate vertex list: duplicate vertex");
      }
    }
  }
  if (AffineRank(vertices) != static_cast<int>(d)) {
    throw InvalidInput("degenerate vertex list: not full-dimensional");
  }
  Polytope p;
  p.dim_ = static_cast<int>(d);
  p.vertices_ = std::move(vertices);
  const size_t n = p.vertices_.size();

  std::map<VertexMask, Halfspace> facets;
  std::vector<int> idx(d);
  // Enumerate d-subsets.
  auto visit = [&](auto&& self, size_t start, size_t depth) -> void {
    if (depth == d) {
      std::vector<Point> pts;
      for (int i : idx) pts.push_back(p.vertices_[i]);
      Point normal = HyperplaneNormal(pts);
      if (normal.empty()) return;
      Rational offset = Dot(normal, pts[0]);
      bool any_below = false, any_above = false;
      VertexMask tight = 0;
      for (size_t v = 0; v < n; ++v) {
        Rational s = Dot(normal, p.vertices_[v]);
        if (s < offset) any_below = true;
        if (s > offset) any_above = true;
        if (s == offset) tight |= VertexMask{1} << v;
      }
      if (any_below && any_above) return;
      if (any_above) {
        for (Rational& c : normal) c = -c;
        offset = -offset;
      }
      facets.emplace(tight, Halfspace{std::move(normal), offset});
      return;
    }
    for (size_t i = start; i < n; ++i) {
      idx[depth] = static_cast<int>(i);
      self(self, i + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);

  std::vector<VertexMask> masks;
  for (auto& [mask, halfspace] : facets) {
    masks.push_back(mask);
    p.facets_.push_back(std::move(halfspace));
  }
  p.BuildLattice(std::move(masks));
  return p;
}

std::optional<int> Polytope::FindFace(VertexMask mask) const {
  if (auto it = face_by_mask_.find(mask); it != face_by_mask_.end()) {
    return it->second;
  }
  return std::nullopt;
}

int Polytope::VertexFace(int vertex) const {
  return face_by_mask_.at(VertexMask{1} << vertex);
}

ScaledPoint::ScaledPoint(const Point& x) : den(1) {
  for (const Rational& c : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  num.reserve(x.size());
  for (const Rational& c : x) num.push_back(c.get_num() * (den / c.get_den()));
}

IntegerHalfspace::IntegerHalfspace(const Halfspace& h) {
  mpz_class den = h.offset.get_den();
  for (const Rational& c : h.normal) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  normal.reserve(h.normal.size());
  for (const Rational& c : h.normal) normal.push_back(c.get_num() * (den / c.get_den()));
  offset = h.offset.get_num() * (den / h.offset.get_den());
}

int IntegerHalfspace::Compare(const ScaledPoint& x) const {
  if (normal.size() != x.num.size()) {
    throw InvalidInput("halfspace dimension does not match the point");
  }
  mpz_class lhs = 0;
  for (size_t i = 0; i < normal.size(); ++i) {
    mpz_addmul(lhs.get_mpz_t(), normal[i].get_mpz_t(), x.num[i].get_mpz_t());
  }
  mpz_class rhs = offset * x.den;
  return cmp(lhs, rhs);
}

std::optional<VertexMask> Polytope::TightMask(const Point& x) const {
  CheckPointDim(x);
  for (const auto& [a, b] : equalities_) {
    if (Dot(a, x) != b) return std::nullopt;
  }
  VertexMask mask = FullMask(vertices_.size());
  const ScaledPoint scaled(x);
  for (size_t i = 0; i < facets_.size(); ++i) {
    const int c = integer_facets_[i].Compare(scaled);
    if (c > 0) return std::nullopt;
    if (c == 0) mask &= facet_masks_[i];
  }
  return mask;
}

bool Polytope::Contains(const Point& x) const {
  return TightMask(x).has_value();
}

int Polytope::Supp(const Point& x) const {
  const std::optional<VertexMask> mask = TightMask(x);
  if (!mask) throw InvalidInput("point lies outside the polytope");
  return face_by_mask_.at(*mask);
}

int Polytope::Join(std::span<const int> face_ids) const {
  VertexMask u = 0;
  for (int id : face_ids) u |= faces_.at(id).mask;
  VertexMask mask = FullMask(vertices_.size());
  for (VertexMask m : facet_masks_) {
    if ((u & ~m) == 0) mask &= m;
  }
  return face_by_mask_.at(mask);
}

bool Polytope::FaceContains(int face_id, const Point& x) const {
  const Face& f = faces_.at(face_id);
  if (f.vertex_ids.size() == 1) return x == vertices_[f.vertex_ids.front()];
  const std::optional<VertexMask> mask = TightMask(x);
  return mask && IsSubface(face_by_mask_.at(*mask), face_id);
}

const Point& Polytope::FaceBarycenter(int face_id) const {
  return barycenters_.at(face_id);
}

Rational Polytope::SquaredDiameter() const {
  Rational best = 0;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    for (size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, SquaredDistance(vertices_[i], vertices_[j]));
    }
  }
  return best;
}

Rational Polytope::ChartVolume(std::span<const Point> simplex) const {
  if (static_cast<int>(simplex.size()) != dim_ + 1) {
    throw InvalidInput("chart volume needs a full-dimensional simplex");
  }
  if (dim_ == 0) return 1;
  std::vector<std::vector<Rational>> m;
  for (int i = 1; i <= dim_; ++i) {
    std::vector<Rational> row;
    for (int c : chart_) row.push_back(simplex[i][c] - simplex[0][c]);
    m.push_back(std::move(row));
  }
  Rational det = Determinant(std::move(m));
  if (det < 0) det = -det;
  Rational factorial = 1;
  for (int i = 2; i <= dim_; ++i) factorial *= i;
  return det / factorial;
}

std::optional<HullCertificate> ConvContains(std::span<const Point> points,
                                            const Point& p) {
  for (const Point& q : points) {
    if (q.size() != p.size()) {
      throw InvalidInput("conv_contains: dimension mismatch");
    }
  }
  const size_t n = points.size();
  const size_t dim = p.size();
  const size_t max_size = std::min(n, dim + 1);
  std::vector<int> idx;
  std::vector<Rational> solution;
  for (size_t s = 1; s <= max_size; ++s) {
    idx.resize(s);
    for (size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    while (true) {
      std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(s));
      std::vector<Rational> b(dim + 1);
      for (size_t c = 0; c < dim; ++c) {
        for (size_t j = 0; j < s; ++j) a[c][j] = points[idx[j]][c];
        b[c] = p[c];
      }
      for (size_t j = 0; j < s; ++j) a[dim][j] = 1;
      b[dim] = 1;
      if (SolveUnique(std::move(a), std::move(b), &solution) &&
          std::all_of(solution.begin(), solution.end(),
                      [](const Rational& w) { return w >= 0; })) {
        HullCertificate cert;
        for (size_t j = 0; j < s; ++j) {
          if (solution[j] != 0) cert.weights.emplace_back(idx[j], solution[j]);
        }
        return cert;
      }
      // Next combination.
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(n - s + i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool CheckCertificate(std::span<const Point> points, const Point& p,
                      const HullCertificate& certificate) {
  Rational total = 0;
  Point sum(p.size(), Rational(0));
  for (const auto& [index, weight] : certificate.weights) {
    if (index < 0 || index >= static_cast<int>(points.size())) return false;
    if (weight < 0) return false;
    if (points[index].size() != p.size()) return false;
    total += weight;
    for (size_t c = 0; c < p.size(); ++c) sum[c] += weight * points[index][c];
  }
  return total == 1 && sum == p;
}

}  // namespace mkkm
