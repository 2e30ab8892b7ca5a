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


#ifndef MKKM_RHOMBUS_EXAMPLE_H_
#define MKKM_RHOMBUS_EXAMPLE_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mkkm/cover.h"
#include "mkkm/simplicial.h"
#include "mkkm/solver.h"

namespace mkkm {

// The rank-3 worked example: a rhombus a, b, c, d split along the diagonal
// {a, b}, labeled f = (v1, v1, v2, v3), the matroid of
// v1 = (1,1,0), v2 = (-1,1,0), v3 = (0,1,0), v4 = (0,0,1), and the cover
// A_sigma^w = sigma except A_P^{v2} = empty.
struct PaperExample {
  std::shared_ptr<HalfspaceCover> cover;
  Triangulation triangulation;
  Labeling labeling;
};

PaperExample BuildPaperExample();

// Display name of a vertex: a, b, c, d for the given vertices, then
// b1, b2, ... for barycenters in order of creation.
std::string PaperVertexName(VertexId v);

struct PaperExampleState {
  TraceEntry entry;
  std::map<int, std::vector<SimplexFace>> queues;
  std::vector<SimplexFace> sequence;
  TriangulationDump triangulation;
  std::vector<int> labels;
};

struct PaperExampleRun {
  Triangulation final_triangulation;
  FaceSet initial_bad = {};
  std::vector<PaperExampleState> states = {};
  EliminationStats stats = {};
  Labeling final_labeling = {};
  FaceSet final_bad = {};
  // Empty when the run matches the golden trace.
  std::vector<std::string> mismatches = {};
  double seconds = 0;
};

PaperExampleRun RunPaperExample();

}  // namespace mkkm

#endif  // MKKM_RHOMBUS_EXAMPLE_H_
