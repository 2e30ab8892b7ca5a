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


#include "mkkm/rhombus_example.h"

#include <chrono>
#include <utility>

namespace mkkm {

namespace {

constexpr int kV1 = 0, kV2 = 1, kV3 = 2, kV4 = 3;

std::vector<std::string> Compare(const PaperExampleRun& run) {
  std::vector<std::string> out;
  const SimplexFace ab = {0, 1};
  if (run.initial_bad != FaceSet{ab}) {
    out.push_back("initial bad faces are not exactly {{a,b}}");
  }
  if (run.states.empty()) {
    out.push_back("no setup state recorded");
    return out;
  }
  const std::map<int, std::vector<SimplexFace>> q3 = {
      {3, {{0, 2, 4}, {1, 2, 4}, {3, 4}}}};
  if (run.states.front().queues != q3) {
    out.push_back("setup queues differ from Q_3 = {{b1,a,c},{b1,b,c},{b1,d}}");
  }
  if (run.stats.iterations != 3) {
    out.push_back("expected 3 loop iterations, got " +
                  std::to_string(run.stats.iterations));
  }
  const std::vector<SimplexFace> chosen = {{0, 2, 4}, {1, 2, 4}, {3, 4}};
  for (size_t i = 1; i < run.states.size() && i <= chosen.size(); ++i) {
    if (run.states[i].entry.face != chosen[i - 1]) {
      out.push_back("iteration " + std::to_string(i) + " chose a different face");
    }
    if (!run.states[i].entry.removed_from_sequence) {
      out.push_back("iteration " + std::to_string(i) +
                    " did not remove its face from S");
    }
  }
  if (run.final_triangulation.num_vertices() != 8) {
    out.push_back("expected 8 vertices, got " +
                  std::to_string(run.final_triangulation.num_vertices()));
  }
  if (run.final_triangulation.num_simplices() != 10) {
    out.push_back("expected 10 triangles, got " +
                  std::to_string(run.final_triangulation.num_simplices()));
  }
  const std::vector<int> labels = {kV3, kV4, kV4, kV4};
  for (size_t i = 0; i < labels.size(); ++i) {
    const VertexId v = static_cast<VertexId>(4 + i);
    if (!run.final_labeling.IsLabeled(v) || run.final_labeling.f[v] != labels[i]) {
      out.push_back("barycenter " + PaperVertexName(v) + " has the wrong label");
    }
  }
  if (!run.final_bad.empty()) out.push_back("bad faces remain at exit");
  return out;
}

}  // namespace

PaperExample BuildPaperExample() {
  const Rational h(433, 125);
  std::vector<Point> vertices = {{Rational(-2), Rational(0)},
                                 {Rational(2), Rational(0)},
                                 {Rational(0), h},
                                 {Rational(0), -h}};
  auto polytope = std::make_shared<const Polytope>(Polytope::Explicit(vertices));
  Matroid matroid = Matroid::Linear({{1, 1, 0}, {-1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  auto cover = std::make_shared<HalfspaceCover>(matroid, polytope);
  for (int w = 0; w < 4; ++w) {
    for (const Face& face : polytope->faces()) {
      if (w == kV2 && face.id == polytope->improper_face_id()) continue;
      cover->AddRegion(w, face.id, Polyhedron{{}, true});
    }
  }
  Triangulation t = Triangulation::FromSimplices(polytope, vertices,
                                                 {{0, 1, 2}, {0, 1, 3}});
  Labeling labeling;
  const int f[] = {kV1, kV1, kV2, kV3};
  for (VertexId v = 0; v < 4; ++v) {
    const int tau = polytope->VertexFace(static_cast<int>(v));
    labeling.Set(v, {f[v], tau}, cover->YPoint(f[v], tau));
  }
  return {std::move(cover), std::move(t), std::move(labeling)};
}

std::string PaperVertexName(VertexId v) {
  if (v < 4) return std::string(1, static_cast<char>('a' + v));
  return "b" + std::to_string(v - 3);
}

PaperExampleRun RunPaperExample() {
  const auto start = std::chrono::steady_clock::now();
  PaperExample example = BuildPaperExample();
  const Matroid& m = example.cover->matroid();
  PaperExampleRun run{.final_triangulation = example.triangulation};
  run.initial_bad = BadFaces(example.triangulation, example.labeling, m);

  auto observer = [&run](const TraceEntry& entry, const AlgState& state,
                         const Triangulation& t, const Labeling& labeling) {
    PaperExampleState s;
    s.entry = entry;
    for (const auto& [index, queue] : state.queues) {
      if (!queue.empty()) {
        s.queues[index] = std::vector<SimplexFace>(queue.begin(), queue.end());
      }
    }
    for (const auto& item : state.sequence) s.sequence.push_back(item.first);
    s.triangulation = Dump(t);
    s.labels = labeling.f;
    run.states.push_back(std::move(s));
  };
  SolverOptions options;
  options.checks = CheckLevel::kFull;
  if (run.initial_bad.size() == 1) {
    run.stats = EliminateBadFace(example.triangulation, example.labeling,
                                 *run.initial_bad.begin(), *example.cover,
                                 options, observer);
  }
  run.final_bad = BadFaces(example.triangulation, example.labeling, m);
  run.final_triangulation = std::move(example.triangulation);
  run.final_labeling = std::move(example.labeling);
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  run.mismatches = Compare(run);
  return run;
}

}  // namespace mkkm
