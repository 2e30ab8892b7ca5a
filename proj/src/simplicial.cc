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

#include "mkkm/simplicial.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace mkkm {

SimplexFace MakeFace(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

VertexId Triangulation::AddVertex(Point coords) {
  const int supp = polytope_->Supp(coords);
  coords_.push_back(std::move(coords));
  supp_.push_back(supp);
  incident_.emplace_back();
  return static_cast<VertexId>(coords_.size() - 1);
}

VertexId Triangulation::AddBarycenter(std::span<const VertexId> ids) {
  std::vector<Point> pts;
  std::vector<int> supps;
  for (VertexId v : ids) {
    pts.push_back(coords_.at(v));
    supps.push_back(supp_[v]);
  }
  coords_.push_back(Barycenter(pts));
  supp_.push_back(polytope_->Join(supps));
  incident_.emplace_back();
  return static_cast<VertexId>(coords_.size() - 1);
}

void Triangulation::AddSimplex(SimplexFace simplex) {
  uint32_t slot;
  if (!free_slots_.empty()) {
    slot = free_slots_.back();
    free_slots_.pop_back();
    slots_[slot] = std::move(simplex);
    alive_[slot] = true;
  } else {
    slot = static_cast<uint32_t>(slots_.size());
    slots_.push_back(std::move(simplex));
    alive_.push_back(true);
  }
  for (VertexId v : slots_[slot]) incident_[v].push_back(slot);
  ++live_count_;
}

void Triangulation::RemoveSimplex(uint32_t slot) {
  for (VertexId v : slots_[slot]) {
    auto& list = incident_[v];
    list.erase(std::find(list.begin(), list.end(), slot));
  }
  alive_[slot] = false;
  slots_[slot].clear();
  free_slots_.push_back(slot);
  --live_count_;
}

Triangulation Triangulation::Initial(std::shared_ptr<const Polytope> polytope) {
  Triangulation t(polytope);
  const Polytope& p = *polytope;
  for (const Face& f : p.faces()) t.AddVertex(p.FaceBarycenter(f.id));

  // Codimension-one subfaces of every face.
  std::vector<std::vector<int>> children(p.faces().size());
  for (const Face& f : p.faces()) {
    for (const Face& g : p.faces()) {
      if (g.dim == f.dim - 1 && p.IsSubface(g.id, f.id)) {
        children[f.id].push_back(g.id);
      }
    }
  }
  std::vector<VertexId> chain;
  auto descend = [&](auto&& self, int face) -> void {
    chain.push_back(static_cast<VertexId>(face));
    if (p.face(face).dim == 0) {
      t.AddSimplex(MakeFace(chain));
    } else {
      for (int child : children[face]) self(self, child);
    }
    chain.pop_back();
  };
  descend(descend, p.improper_face_id());
  return t;
}

Triangulation Triangulation::FromSimplices(
    std::shared_ptr<const Polytope> polytope, std::vector<Point> coords,
    std::vector<SimplexFace> simplices) {
  Triangulation t(polytope);
  for (Point& c : coords) {
    if (!polytope->Contains(c)) {
      throw InvalidInput("triangulation vertex lies outside the polytope");
    }
    t.AddVertex(std::move(c));
  }
  const size_t size = static_cast<size_t>(polytope->dim()) + 1;
  for (SimplexFace& s : simplices) {
    s = MakeFace(std::move(s));
    if (s.size() != size) {
      throw InvalidInput("simplex has " + std::to_string(s.size()) +
                         " distinct vertices, expected " +
                         std::to_string(size));
    }
    for (VertexId v : s) {
      if (v >= t.num_vertices()) throw InvalidInput("unknown vertex id");
    }
    if (t.Volume(s) == 0) throw InvalidInput("degenerate simplex");
    t.AddSimplex(std::move(s));
  }
  if (t.TotalVolume() != Initial(polytope).TotalVolume()) {
    throw InvalidInput("simplices do not cover the polytope exactly");
  }
  return t;
}

std::vector<SimplexFace> Triangulation::MaximalSimplices() const {
  std::vector<SimplexFace> out;
  out.reserve(live_count_);
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (alive_[i]) out.push_back(slots_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexFace> Triangulation::MaximalSimplicesContaining(
    VertexId v) const {
  std::vector<SimplexFace> out;
  for (uint32_t slot : incident_.at(v)) out.push_back(slots_[slot]);
  std::sort(out.begin(), out.end());
  return out;
}

size_t Triangulation::Degree(VertexId v) const { return incident_.at(v).size(); }

bool Triangulation::IsFace(const SimplexFace& face) const {
  if (face.empty()) return false;
  const std::vector<uint32_t>* best = nullptr;
  for (VertexId v : face) {
    if (v >= incident_.size()) return false;
    if (best == nullptr || incident_[v].size() < best->size()) {
      best = &incident_[v];
    }
  }
  for (uint32_t slot : *best) {
    const SimplexFace& s = slots_[slot];
    if (std::includes(s.begin(), s.end(), face.begin(), face.end())) return true;
  }
  return false;
}

std::vector<SimplexFace> Triangulation::Faces(
    std::optional<VertexId> containing) const {
  std::vector<SimplexFace> out;
  auto add_subsets = [&](const SimplexFace& s) {
    const size_t n = s.size();
    for (uint32_t bits = 1; bits < (1U << n); ++bits) {
      SimplexFace face;
      bool has = !containing.has_value();
      for (size_t i = 0; i < n; ++i) {
        if ((bits >> i) & 1U) {
          face.push_back(s[i]);
          if (containing && s[i] == *containing) has = true;
        }
      }
      if (has) out.push_back(std::move(face));
    }
  };
  if (containing) {
    if (*containing >= incident_.size() || incident_[*containing].empty()) {
      throw InvalidInput("vertex " + std::to_string(*containing) +
                         " is not a vertex of the triangulation");
    }
    for (uint32_t slot : incident_[*containing]) add_subsets(slots_[slot]);
  } else {
    for (size_t i = 0; i < slots_.size(); ++i) {
      if (alive_[i]) add_subsets(slots_[i]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexId Triangulation::StarSubdivide(const SimplexFace& face) {
  if (face.size() < 2 || !std::is_sorted(face.begin(), face.end()) ||
      !IsFace(face)) {
    throw InvalidInput("star subdivision target is not a face of size >= 2");
  }
  const VertexId b = AddBarycenter(face);

  VertexId pivot = face.front();
  for (VertexId v : face) {
    if (incident_[v].size() < incident_[pivot].size()) pivot = v;
  }
  std::vector<uint32_t> targets;
  for (uint32_t slot : incident_[pivot]) {
    const SimplexFace& s = slots_[slot];
    if (std::includes(s.begin(), s.end(), face.begin(), face.end())) {
      targets.push_back(slot);
    }
  }
  for (uint32_t slot : targets) {
    SimplexFace s = slots_[slot];
    RemoveSimplex(slot);
    for (VertexId drop : face) {
      SimplexFace child;
      child.reserve(s.size());
      for (VertexId v : s) {
        if (v != drop) child.push_back(v);
      }
      child.push_back(b);
      AddSimplex(MakeFace(std::move(child)));
    }
  }
  return b;
}

Rational Triangulation::SquaredDiameterOf(const SimplexFace& simplex) const {
  Rational best = 0;
  for (size_t i = 0; i < simplex.size(); ++i) {
    for (size_t j = i + 1; j < simplex.size(); ++j) {
      Rational d = SquaredDistance(coords_[simplex[i]], coords_[simplex[j]]);
      if (d > best) best = d;
    }
  }
  return best;
}

Rational Triangulation::SquaredDiameter() const {
  Rational best = 0;
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (!alive_[i]) continue;
    Rational d = SquaredDiameterOf(slots_[i]);
    if (d > best) best = d;
  }
  return best;
}

Rational Triangulation::Volume(const SimplexFace& simplex) const {
  std::vector<Point> pts;
  for (VertexId v : simplex) pts.push_back(coords_[v]);
  return polytope_->ChartVolume(pts);
}

Rational Triangulation::TotalVolume() const {
  Rational total = 0;
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (alive_[i]) total += Volume(slots_[i]);
  }
  return total;
}

std::pair<Triangulation, VertexId> StarSubdivided(const Triangulation& t,
                                                  const SimplexFace& face) {
  Triangulation copy = t;
  VertexId b = copy.StarSubdivide(face);
  return {std::move(copy), b};
}

Triangulation RefineGlobal(const Triangulation& t) {
  const int d = t.polytope().dim();
  if (d >= 4) return BarycentricRefine(t);
  Triangulation out(t.polytope_);
  out.coords_ = t.coords_;
  out.supp_ = t.supp_;
  out.incident_.assign(t.coords_.size(), {});
  if (d == 0) {
    for (const SimplexFace& s : t.MaximalSimplices()) out.AddSimplex(s);
    return out;
  }
  std::map<std::pair<VertexId, VertexId>, VertexId> midpoints;
  auto midpoint = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    auto [it, inserted] = midpoints.try_emplace({a, b}, 0);
    if (inserted) {
      const VertexId ends[] = {a, b};
      it->second = out.AddBarycenter(ends);
    }
    return it->second;
  };
  for (const SimplexFace& s : t.MaximalSimplices()) {
    if (d == 1) {
      VertexId m = midpoint(s[0], s[1]);
      out.AddSimplex(MakeFace({s[0], m}));
      out.AddSimplex(MakeFace({m, s[1]}));
    } else if (d == 2) {
      const VertexId a = s[0], b = s[1], c = s[2];
      VertexId ab = midpoint(a, b), bc = midpoint(b, c), ac = midpoint(a, c);
      out.AddSimplex(MakeFace({a, ab, ac}));
      out.AddSimplex(MakeFace({b, ab, bc}));
      out.AddSimplex(MakeFace({c, ac, bc}));
      out.AddSimplex(MakeFace({ab, bc, ac}));
    } else {
      const VertexId a = s[0], b = s[1], c = s[2], e = s[3];
      VertexId ab = midpoint(a, b), ac = midpoint(a, c), ae = midpoint(a, e);
      VertexId bc = midpoint(b, c), be = midpoint(b, e), ce = midpoint(c, e);
      out.AddSimplex(MakeFace({a, ab, ac, ae}));
      out.AddSimplex(MakeFace({b, ab, bc, be}));
      out.AddSimplex(MakeFace({c, ac, bc, ce}));
      out.AddSimplex(MakeFace({e, ae, be, ce}));
      // Octahedron: split along its shortest diagonal.
      std::pair<VertexId, VertexId> diagonals[3] = {{ab, ce}, {ac, be}, {ae, bc}};
      int best = 0;
      Rational best_len;
      for (int i = 0; i < 3; ++i) {
        Rational len = SquaredDistance(out.coords_[diagonals[i].first],
                                       out.coords_[diagonals[i].second]);
        if (i == 0 || len < best_len) {
          best = i;
          best_len = len;
        }
      }
      auto [p, q] = diagonals[best];
      auto [x1, x2] = diagonals[(best + 1) % 3];
      auto [y1, y2] = diagonals[(best + 2) % 3];
      const VertexId ring[4] = {x1, y1, x2, y2};
      for (int i = 0; i < 4; ++i) {
        out.AddSimplex(MakeFace({p, q, ring[i], ring[(i + 1) % 4]}));
      }
    }
  }
  return out;
}

Triangulation BarycentricRefine(const Triangulation& t) {
  Triangulation out(t.polytope_);
  out.coords_ = t.coords_;
  out.supp_ = t.supp_;
  out.incident_.assign(t.coords_.size(), {});
  std::map<SimplexFace, VertexId> barycenters;
  auto vertex_for = [&](const SimplexFace& face) -> VertexId {
    if (face.size() == 1) return face.front();
    auto it = barycenters.find(face);
    if (it != barycenters.end()) return it->second;
    VertexId id = out.AddBarycenter(face);
    barycenters.emplace(face, id);
    return id;
  };
  for (const SimplexFace& s : t.MaximalSimplices()) {
    std::vector<size_t> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      SimplexFace prefix;
      std::vector<VertexId> chain;
      for (size_t i : order) {
        prefix.push_back(s[i]);
        chain.push_back(vertex_for(MakeFace(prefix)));
      }
      out.AddSimplex(MakeFace(std::move(chain)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

TriangulationDump Dump(const Triangulation& t) {
  TriangulationDump dump;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    dump.vertices.push_back({v, t.coords(v), t.supp(v)});
  }
  dump.simplices = t.MaximalSimplices();
  return dump;
}

}  // namespace mkkm
