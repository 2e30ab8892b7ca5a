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


#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "mkkm/cake.h"
#include "mkkm/caratheodory.h"
#include "mkkm/instance_io.h"
#include "mkkm/rhombus_example.h"
#include "mkkm/solver.h"

namespace mkkm {

namespace {

struct Failure {
  int code;
  std::string message;
  Json details;
};

Json Names(const SimplexFace& face) {
  Json out = Json::array();
  for (VertexId v : face) out.push_back(PaperVertexName(v));
  return out;
}

std::string ElementName(int w) { return "v" + std::to_string(w + 1); }

Json DemoDocument(const PaperExampleRun& run) {
  Json doc;
  doc["initial_bad_faces"] = Json::array();
  for (const SimplexFace& f : run.initial_bad) doc["initial_bad_faces"].push_back(Names(f));
  doc["states"] = Json::array();
  for (const PaperExampleState& s : run.states) {
    Json state;
    state["step"] = s.entry.step;
    state["j"] = s.entry.j;
    state["face"] = Names(s.entry.face);
    state["barycenter"] = PaperVertexName(s.entry.barycenter);
    state["label"] = ElementName(s.entry.w);
    state["tau"] = s.entry.tau;
    state["removed_from_sequence"] = s.entry.removed_from_sequence;
    state["queues"] = Json::object();
    for (const auto& [index, queue] : s.queues) {
      Json faces = Json::array();
      for (const SimplexFace& f : queue) faces.push_back(Names(f));
      state["queues"]["Q_" + std::to_string(index)] = faces;
    }
    state["sequence"] = Json::array();
    for (const SimplexFace& f : s.sequence) state["sequence"].push_back(Names(f));
    state["triangulation"] = ToJson(s.triangulation);
    Json labels = Json::object();
    for (size_t v = 0; v < s.labels.size(); ++v) {
      if (s.labels[v] >= 0) {
        labels[PaperVertexName(static_cast<VertexId>(v))] = ElementName(s.labels[v]);
      }
    }
    state["labels"] = labels;
    doc["states"].push_back(std::move(state));
  }
  doc["iterations"] = run.stats.iterations;
  doc["final"] = ToJson(Dump(run.final_triangulation));
  doc["final_bad_faces"] = run.final_bad.size();
  doc["golden"] = Json{{"passed", run.mismatches.empty()},
                       {"mismatches", run.mismatches}};
  doc["seconds"] = run.seconds;
  return doc;
}

Rational ParseDelta(const std::string& text) {
  Rational delta = ParseRational(text);
  if (delta <= 0) throw InvalidInput("--delta must be positive");
  return delta;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Constructive matroid-colorful KKM solver", "mkkm"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string delta_text;
  bool trace = false;
  int resolution = 8;

  auto* solve = app.add_subcommand("solve", "Find an epsilon-witness for an instance");
  solve->add_option("instance", file, "Instance JSON")->required();
  solve->add_option("--delta", delta_text, "Target mesh diameter (rational)");
  solve->add_flag("--trace", trace, "Record the elimination trace");

  auto* validate = app.add_subcommand("validate", "Grid-check the M-Komiya condition");
  validate->add_option("instance", file, "Instance JSON")->required();
  validate->add_option("--resolution", resolution, "Grid resolution")
      ->check(CLI::PositiveNumber);

  auto* cake = app.add_subcommand("cake", "Matroid envy-free cake division");
  cake->add_option("instance", file, "Cake instance JSON")->required();
  cake->add_option("--delta", delta_text, "Target mesh diameter (rational)");

  auto* cara = app.add_subcommand("caratheodory", "Planar matroid colorful Caratheodory");
  cara->add_option("points", file, "Point set JSON")->required();

  auto* demo = app.add_subcommand("demo-paper-example",
                                  "Run the rhombus worked example against its golden trace");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitMalformedInput;
  }

  std::optional<Failure> failure;
  Json doc;
  int code = kExitOk;
  try {
    if (solve->parsed()) {
      Instance instance = ParseInstance(ReadJsonFile(file));
      const Polytope& polytope = instance.cover->polytope();
      const Point p = instance.p.value_or(
          polytope.FaceBarycenter(polytope.improper_face_id()));
      Rational delta = delta_text.empty() ? instance.delta.value_or(Rational(1, 16))
                                          : ParseDelta(delta_text);
      SolveOptions options;
      options.record_trace = trace;
      Witness witness = Solve(*instance.cover, p, delta, options);
      const char* trace_dir = std::getenv("MKKM_TRACE_DIR");
      if (trace && trace_dir != nullptr && *trace_dir != '\0') {
        Json trace_doc = Json::array();
        for (const TraceEntry& e : witness.trace) trace_doc.push_back(ToJson(e));
        const std::filesystem::path path =
            std::filesystem::path(trace_dir) /
            (std::filesystem::path(file).stem().string() + ".trace.json");
        std::ofstream trace_out(path);
        if (!trace_out) throw InvalidInput("cannot write " + path.string());
        trace_out << trace_doc.dump(2) << "\n";
        witness.trace.clear();
      }
      doc = ToJson(witness);
    } else if (validate->parsed()) {
      Instance instance = ParseInstance(ReadJsonFile(file));
      ValidationReport report = ValidateMKomiya(*instance.cover, resolution);
      doc = ToJson(report);
      if (!report.passed) code = kExitValidationFailure;
    } else if (cake->parsed()) {
      CakeInstance instance = ParseCakeInstance(ReadJsonFile(file));
      CakeCover cover(instance.matroid, instance.guests, instance.pieces);
      ValidationReport report = ValidateMKomiya(cover, 8);
      if (!report.passed) {
        failure = Failure{kExitValidationFailure, "the cake cover fails the M-hungry check",
                          ToJson(report)};
      } else {
        const Rational delta =
            delta_text.empty() ? Rational(1, 64) : ParseDelta(delta_text);
        doc = ToJson(CakeSolve(instance, delta));
      }
    } else if (cara->parsed()) {
      CaratheodoryInstance instance = ParseCaratheodoryInstance(ReadJsonFile(file));
      HypothesisReport hypothesis = CheckCaratheodoryHypothesis(instance);
      if (!hypothesis.holds) {
        Json details = Json::object();
        details["counterexample"] = Json::array();
        for (int e : Elements(hypothesis.counterexample.value_or(0))) {
          details["counterexample"].push_back(e);
        }
        failure = Failure{kExitValidationFailure,
                          "hypothesis fails: 0 is not in conv(G) for some G with "
                          "r(V - G) <= 2",
                          details};
      } else {
        doc = ToJson(CaratheodorySolve(instance));
      }
    } else if (demo->parsed()) {
      PaperExampleRun run = RunPaperExample();
      doc = DemoDocument(run);
      if (!run.mismatches.empty()) code = kExitValidationFailure;
    }
  } catch (const SchemaError& e) {
    failure = Failure{kExitMalformedInput, e.what(), Json{{"path", e.path()}}};
  } catch (const InvalidInput& e) {
    failure = Failure{kExitMalformedInput, e.what(), Json::object()};
  } catch (const NoLabelError& e) {
    failure = Failure{kExitValidationFailure, e.what(), Json::object()};
  } catch (const NotFoundError& e) {
    failure = Failure{kExitValidationFailure, e.what(), Json::object()};
  }

  if (failure) {
    Json error_doc = {{"error", failure->message}};
    for (auto& [key, value] : failure->details.items()) error_doc[key] = value;
    out << error_doc.dump(2) << "\n";
    err << "mkkm: " << failure->message << "\n";
    return failure->code;
  }
  out << doc.dump(2) << "\n";
  return code;
}

}  // namespace mkkm
