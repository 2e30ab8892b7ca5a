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


#include "mkkm/instance_io.h"

#include <fstream>
#include <sstream>
#include <utility>

namespace mkkm {

SchemaError::SchemaError(std::string path, const std::string& message)
    : InvalidInput((path.empty() ? std::string("/") : path) + ": " + message),
      path_(std::move(path)) {}

namespace {

// A JSON value with its pointer path, for error reporting.
class Node {
 public:
  Node(const Json& json, std::string path) : json_(json), path_(std::move(path)) {}

  const Json& json() const { return json_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw SchemaError(path_, message);
  }

  bool Has(const std::string& key) const {
    return json_.is_object() && json_.contains(key);
  }

  Node operator[](const std::string& key) const {
    if (!json_.is_object()) Fail("expected an object");
    if (!json_.contains(key)) Fail("missing member \"" + key + "\"");
    return Node(json_.at(key), path_ + "/" + Escape(key));
  }

  std::vector<Node> Items() const {
    if (!json_.is_array()) Fail("expected an array");
    std::vector<Node> items;
    for (size_t i = 0; i < json_.size(); ++i) {
      items.emplace_back(json_[i], path_ + "/" + std::to_string(i));
    }
    return items;
  }

  std::vector<Node> NonemptyItems() const {
    std::vector<Node> items = Items();
    if (items.empty()) Fail("expected a nonempty array");
    return items;
  }

  int Int() const {
    if (!json_.is_number_integer()) Fail("expected an integer");
    const auto value = json_.get<long long>();
    if (value < -(1LL << 30) || value > (1LL << 30)) Fail("integer out of range");
    return static_cast<int>(value);
  }

  int NonNegativeInt() const {
    const int value = Int();
    if (value < 0) Fail("expected a nonnegative integer");
    return value;
  }

  bool Bool() const {
    if (!json_.is_boolean()) Fail("expected a boolean");
    return json_.get<bool>();
  }

  std::string String() const {
    if (!json_.is_string()) Fail("expected a string");
    return json_.get<std::string>();
  }

  Rational Rat() const {
    if (json_.is_number_integer()) return Rational(json_.get<long>());
    if (!json_.is_string()) Fail("expected a rational string such as \"1/2\"");
    try {
      return ParseRational(json_.get<std::string>());
    } catch (const InvalidInput& e) {
      Fail(e.what());
    }
  }

  Point Pt() const {
    Point p;
    for (const Node& item : NonemptyItems()) p.push_back(item.Rat());
    return p;
  }

  template <typename F>
  auto Wrap(F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const SchemaError&) {
      throw;
    } catch (const InvalidInput& e) {
      Fail(e.what());
    } catch (const std::out_of_range& e) {
      Fail(e.what());
    }
  }

 private:
  static std::string Escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') {
        out += "~0";
      } else if (c == '/') {
        out += "~1";
      } else {
        out += c;
      }
    }
    return out;
  }

  const Json& json_;
  std::string path_;
};

Matroid MatroidAt(const Node& node) {
  const std::string kind = node["kind"].String();
  if (kind == "uniform") {
    const int n = node["n"].Int();
    const int k = node["k"].Int();
    return node.Wrap([&] { return Matroid::Uniform(n, k); });
  }
  if (kind == "partition") {
    std::vector<std::vector<int>> parts;
    for (const Node& part : node["parts"].NonemptyItems()) {
      parts.emplace_back();
      for (const Node& e : part.Items()) parts.back().push_back(e.NonNegativeInt());
    }
    return node["parts"].Wrap([&] { return Matroid::Partition(parts); });
  }
  if (kind == "linear") {
    std::vector<std::vector<Rational>> vectors;
    for (const Node& v : node["vectors"].NonemptyItems()) vectors.push_back(v.Pt());
    return node["vectors"].Wrap([&] { return Matroid::Linear(vectors); });
  }
  if (kind == "truncate") {
    Matroid inner = MatroidAt(node["inner"]);
    const int rank = node["rank"].Int();
    return node["rank"].Wrap([&] { return Matroid::Truncate(inner, rank); });
  }
  node["kind"].Fail("unknown matroid kind \"" + kind + "\"");
}

Polytope PolytopeAt(const Node& node) {
  const std::string kind = node["kind"].String();
  if (kind == "simplex") {
    const int k = node["k"].Int();
    return node.Wrap([&] { return Polytope::Simplex(k); });
  }
  if (kind == "regular_polygon") {
    const int m = node["m"].Int();
    const Rational radius = node.Has("radius") ? node["radius"].Rat() : Rational(1);
    return node.Wrap([&] { return Polytope::RegularPolygon(m, radius); });
  }
  if (kind == "explicit") {
    std::vector<Point> vertices;
    for (const Node& v : node["vertices"].NonemptyItems()) vertices.push_back(v.Pt());
    return node["vertices"].Wrap([&] { return Polytope::Explicit(vertices); });
  }
  node["kind"].Fail("unknown polytope kind \"" + kind + "\"");
}

Density DensityAt(const Node& node) {
  std::vector<Density::Piece> pieces;
  for (const Node& item : node.NonemptyItems()) {
    Density::Piece piece;
    piece.from = item["from"].Rat();
    piece.to = item["to"].Rat();
    if (item.Has("value")) {
      piece.value_from = piece.value_to = item["value"].Rat();
    } else {
      piece.value_from = item["value_from"].Rat();
      piece.value_to = item["value_to"].Rat();
    }
    pieces.push_back(piece);
  }
  return node.Wrap([&] { return Density(pieces); });
}

Polyhedron PolyhedronAt(const Node& node) {
  Polyhedron region;
  if (node.Has("halfspaces")) {
    for (const Node& h : node["halfspaces"].Items()) {
      region.halfspaces.push_back({h["normal"].Pt(), h["offset"].Rat()});
    }
  }
  if (node.Has("on_face")) region.on_face = node["on_face"].Bool();
  return region;
}

std::shared_ptr<const CoverOracle> CoverAt(const Node& node, Matroid matroid,
                                           std::shared_ptr<const Polytope> polytope) {
  const std::string kind = node["kind"].String();
  if (kind == "kkm_vertex") {
    std::vector<VertexRegion> regions;
    for (const Node& set : node["sets"].Items()) {
      VertexRegion r{set["w"].NonNegativeInt(), set["vertex"].NonNegativeInt(),
                     PolyhedronAt(set)};
      if (r.vertex >= static_cast<int>(polytope->vertices().size())) {
        set["vertex"].Fail("vertex index out of range");
      }
      if (r.w >= matroid.ground_size()) set["w"].Fail("ground element out of range");
      regions.push_back(std::move(r));
    }
    return node["sets"].Wrap(
        [&] { return BuildKkmVertexCover(matroid, polytope, regions); });
  }
  if (kind == "face_sets") {
    auto cover = std::make_shared<HalfspaceCover>(matroid, polytope);
    for (const Node& set : node["sets"].Items()) {
      const int w = set["w"].NonNegativeInt();
      if (w >= matroid.ground_size()) set["w"].Fail("ground element out of range");
      VertexMask mask = 0;
      for (const Node& v : set["face"].NonemptyItems()) {
        const int id = v.NonNegativeInt();
        if (id >= static_cast<int>(polytope->vertices().size())) {
          v.Fail("vertex index out of range");
        }
        mask |= VertexMask{1} << id;
      }
      const std::optional<int> face = polytope->FindFace(mask);
      if (!face) set["face"].Fail("not a face of the polytope");
      set.Wrap([&] { cover->AddRegion(w, *face, PolyhedronAt(set)); });
      if (set.Has("y")) {
        const Point y = set["y"].Pt();
        set["y"].Wrap([&] { cover->SetYPoint(w, *face, y); });
      }
    }
    return cover;
  }
  if (kind == "caratheodory") {
    std::vector<Point> points;
    for (const Node& v : node["points"].Items()) points.push_back(v.Pt());
    return node.Wrap([&] {
      return std::make_shared<CaratheodoryCover>(matroid, polytope, points);
    });
  }
  node["kind"].Fail("unknown cover kind \"" + kind + "\"");
}

CakeInstance CakeAt(const Node& root) {
  std::vector<Density> guests;
  for (const Node& g : root["guests"].NonemptyItems()) {
    guests.push_back(DensityAt(g["density"]));
  }
  const int pieces = root["pieces"].Int();
  if (pieces < 1) root["pieces"].Fail("expected a positive piece count");
  Matroid matroid = MatroidAt(root["matroid"]);
  if (matroid.ground_size() != static_cast<int>(guests.size())) {
    root["matroid"].Fail("ground set size must equal the number of guests");
  }
  if (matroid.rank() != pieces) {
    root["matroid"].Fail("rank must equal the number of pieces");
  }
  return CakeInstance{std::move(guests), pieces, std::move(matroid)};
}

Json FaceJson(const SimplexFace& face) {
  Json out = Json::array();
  for (VertexId v : face) out.push_back(v);
  return out;
}

SimplexFace FaceAt(const Node& node) {
  SimplexFace face;
  for (const Node& v : node.Items()) face.push_back(static_cast<VertexId>(v.NonNegativeInt()));
  return face;
}

std::vector<int> IntsAt(const Node& node) {
  std::vector<int> out;
  for (const Node& v : node.Items()) out.push_back(v.Int());
  return out;
}

Json ElementSetJson(ElementSet set) {
  Json out = Json::array();
  for (int e : Elements(set)) out.push_back(e);
  return out;
}

}  // namespace

Json ReadJsonFile(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw InvalidInput("cannot read " + filename);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

Matroid ParseMatroid(const Json& json) { return MatroidAt(Node(json, "")); }
Polytope ParsePolytope(const Json& json) { return PolytopeAt(Node(json, "")); }
Density ParseDensity(const Json& json) { return DensityAt(Node(json, "")); }

Instance ParseInstance(const Json& json) {
  const Node root(json, "");
  Instance instance;
  if (root.Has("guests")) {
    CakeInstance cake = CakeAt(root);
    auto cover = std::make_shared<CakeCover>(cake.matroid, cake.guests, cake.pieces);
    instance.cover = cover;
  } else {
    auto polytope = std::make_shared<const Polytope>(PolytopeAt(root["polytope"]));
    Matroid matroid = MatroidAt(root["matroid"]);
    instance.cover = CoverAt(root["cover"], std::move(matroid), polytope);
  }
  const Polytope& polytope = instance.cover->polytope();
  if (root.Has("p")) {
    Point p = root["p"].Pt();
    if (static_cast<int>(p.size()) != polytope.ambient_dim() ||
        !polytope.Contains(p)) {
      root["p"].Fail("p must be a point of the polytope");
    }
    instance.p = std::move(p);
  }
  if (root.Has("delta")) {
    instance.delta = root["delta"].Rat();
    if (*instance.delta <= 0) root["delta"].Fail("delta must be positive");
  }
  return instance;
}

CakeInstance ParseCakeInstance(const Json& json) { return CakeAt(Node(json, "")); }

CaratheodoryInstance ParseCaratheodoryInstance(const Json& json) {
  const Node root(json, "");
  std::vector<Point> points;
  for (const Node& v : root["points"].NonemptyItems()) {
    Point p = v.Pt();
    if (p.size() != 2) v.Fail("points must be planar");
    if (p[0] == 0 && p[1] == 0) v.Fail("the origin may not be one of the points");
    points.push_back(std::move(p));
  }
  if (points.size() > static_cast<size_t>(kMaxGroundSize)) {
    root["points"].Fail("too many points");
  }
  const int n = static_cast<int>(points.size());
  Matroid matroid = root.Has("matroid") ? MatroidAt(root["matroid"])
                                        : Matroid::Uniform(n, n);
  if (matroid.ground_size() != n) {
    root["matroid"].Fail("ground set size must equal the number of points");
  }
  return CaratheodoryInstance{std::move(points), std::move(matroid)};
}

Json RationalToJson(const Rational& value) { return ToString(value); }

Json PointToJson(const Point& point) {
  Json out = Json::array();
  for (const Rational& x : point) out.push_back(ToString(x));
  return out;
}

Json ToJson(const TraceEntry& e) {
  return Json{{"elimination", e.elimination},
              {"step", e.step},
              {"j", e.j},
              {"face", FaceJson(e.face)},
              {"barycenter", e.barycenter},
              {"w", e.w},
              {"tau", e.tau},
              {"removed_from_sequence", e.removed_from_sequence}};
}

Json ToJson(const Witness& witness) {
  Json out;
  out["basis"] = witness.basis;
  out["faces"] = witness.faces;
  out["simplex"] = FaceJson(witness.simplex);
  out["vertex_coords"] = Json::array();
  for (const Point& p : witness.vertex_coords) out["vertex_coords"].push_back(PointToJson(p));
  out["y_points"] = Json::array();
  for (const Point& p : witness.y_points) out["y_points"].push_back(PointToJson(p));
  out["certificate"] = Json::array();
  for (const auto& [v, weight] : witness.certificate) {
    out["certificate"].push_back(Json::array({v, ToString(weight)}));
  }
  out["diameter_bound"] = ToString(witness.diameter_bound);
  if (!witness.trace.empty()) {
    out["trace"] = Json::array();
    for (const TraceEntry& e : witness.trace) out["trace"].push_back(ToJson(e));
  }
  return out;
}

Witness WitnessFromJson(const Json& json) {
  const Node root(json, "");
  Witness w;
  w.basis = IntsAt(root["basis"]);
  w.faces = IntsAt(root["faces"]);
  w.simplex = FaceAt(root["simplex"]);
  for (const Node& p : root["vertex_coords"].Items()) w.vertex_coords.push_back(p.Pt());
  for (const Node& p : root["y_points"].Items()) w.y_points.push_back(p.Pt());
  for (const Node& c : root["certificate"].Items()) {
    const std::vector<Node> pair = c.Items();
    if (pair.size() != 2) c.Fail("expected [vertex, weight]");
    w.certificate.push_back(
        {static_cast<VertexId>(pair[0].NonNegativeInt()), pair[1].Rat()});
  }
  w.diameter_bound = root["diameter_bound"].Rat();
  if (root.Has("trace")) {
    for (const Node& t : root["trace"].Items()) {
      TraceEntry e;
      e.elimination = t["elimination"].Int();
      e.step = t["step"].Int();
      e.j = t["j"].Int();
      e.face = FaceAt(t["face"]);
      e.barycenter = static_cast<VertexId>(t["barycenter"].NonNegativeInt());
      e.w = t["w"].Int();
      e.tau = t["tau"].Int();
      e.removed_from_sequence = t["removed_from_sequence"].Bool();
      w.trace.push_back(std::move(e));
    }
  }
  return w;
}

Json ToJson(const ValidationReport& report) {
  Json out;
  out["passed"] = report.passed;
  out["resolution"] = report.resolution;
  out["samples_checked"] = report.samples_checked;
  if (report.violation) {
    out["violation"] = Json{{"hyperplane", ElementSetJson(report.violation->hyperplane)},
                            {"face", report.violation->face},
                            {"sample", PointToJson(report.violation->sample)}};
  }
  return out;
}

ValidationReport ValidationReportFromJson(const Json& json) {
  const Node root(json, "");
  ValidationReport report;
  report.passed = root["passed"].Bool();
  report.resolution = root["resolution"].Int();
  report.samples_checked = static_cast<size_t>(root["samples_checked"].NonNegativeInt());
  if (root.Has("violation")) {
    const Node v = root["violation"];
    CoverViolation violation;
    std::vector<int> h;
    for (const Node& e : v["hyperplane"].Items()) h.push_back(e.NonNegativeInt());
    violation.hyperplane = MakeSet(h);
    violation.face = v["face"].NonNegativeInt();
    violation.sample = v["sample"].Pt();
    report.violation = std::move(violation);
  }
  return report;
}

Json ToJson(const Allocation& a) {
  Json out;
  out["partition"] = PointToJson(a.partition);
  out["cut_points"] = Json::array();
  for (const Rational& c : a.cut_points) out["cut_points"].push_back(ToString(c));
  out["assignment"] = Json::array();
  for (const auto& [guest, piece] : a.assignment) {
    out["assignment"].push_back(Json::array({guest, piece}));
  }
  out["envy_gap"] = ToString(a.envy_gap);
  out["envy_bound"] = ToString(a.envy_bound);
  out["witness"] = ToJson(a.witness);
  return out;
}

Allocation AllocationFromJson(const Json& json) {
  const Node root(json, "");
  Allocation a;
  a.partition = root["partition"].Pt();
  for (const Node& c : root["cut_points"].Items()) a.cut_points.push_back(c.Rat());
  for (const Node& item : root["assignment"].Items()) {
    const std::vector<Node> pair = item.Items();
    if (pair.size() != 2) item.Fail("expected [guest, piece]");
    a.assignment.push_back({pair[0].NonNegativeInt(), pair[1].NonNegativeInt()});
  }
  a.envy_gap = root["envy_gap"].Rat();
  a.envy_bound = root["envy_bound"].Rat();
  a.witness = WitnessFromJson(root["witness"].json());
  return a;
}

Json ToJson(const CaratheodoryResult& r) {
  Json out;
  out["independent_set"] = r.independent_set;
  out["certificate"] = Json::array();
  for (const auto& [index, weight] : r.certificate) {
    out["certificate"].push_back(Json::array({index, ToString(weight)}));
  }
  out["delta"] = ToString(r.delta);
  out["witness"] = ToJson(r.witness);
  return out;
}

CaratheodoryResult CaratheodoryResultFromJson(const Json& json) {
  const Node root(json, "");
  CaratheodoryResult r;
  r.independent_set = IntsAt(root["independent_set"]);
  for (const Node& c : root["certificate"].Items()) {
    const std::vector<Node> pair = c.Items();
    if (pair.size() != 2) c.Fail("expected [index, weight]");
    r.certificate.push_back({pair[0].NonNegativeInt(), pair[1].Rat()});
  }
  r.delta = root["delta"].Rat();
  r.witness = WitnessFromJson(root["witness"].json());
  return r;
}

Json ToJson(const TriangulationDump& dump) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& v : dump.vertices) {
    out["vertices"].push_back(
        Json{{"id", v.id}, {"coords", PointToJson(v.coords)}, {"supp_face", v.supp_face}});
  }
  out["simplices"] = Json::array();
  for (const SimplexFace& s : dump.simplices) out["simplices"].push_back(FaceJson(s));
  return out;
}

}  // namespace mkkm
