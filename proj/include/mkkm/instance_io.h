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


#ifndef MKKM_INSTANCE_IO_H_
#define MKKM_INSTANCE_IO_H_

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "mkkm/cake.h"
#include "mkkm/caratheodory.h"
#include "mkkm/cover.h"
#include "mkkm/geometry.h"
#include "mkkm/matroid.h"
#include "mkkm/simplicial.h"
#include "mkkm/solver.h"

namespace mkkm {

using Json = nlohmann::ordered_json;

// Malformed instance; `path` is a JSON pointer to the offending value.
class SchemaError : public InvalidInput {
 public:
  SchemaError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json ReadJsonFile(const std::string& filename);

Matroid ParseMatroid(const Json& json);
Polytope ParsePolytope(const Json& json);
Density ParseDensity(const Json& json);

// A solve/validate instance: polytope, matroid and cover, or a cake
// instance (recognized by its "guests" member).
struct Instance {
  std::shared_ptr<const CoverOracle> cover;
  std::optional<Point> p;
  std::optional<Rational> delta;
};
Instance ParseInstance(const Json& json);
CakeInstance ParseCakeInstance(const Json& json);
CaratheodoryInstance ParseCaratheodoryInstance(const Json& json);

Json RationalToJson(const Rational& value);
Json PointToJson(const Point& point);

Json ToJson(const Witness& witness);
Witness WitnessFromJson(const Json& json);
Json ToJson(const ValidationReport& report);
ValidationReport ValidationReportFromJson(const Json& json);
Json ToJson(const Allocation& allocation);
Allocation AllocationFromJson(const Json& json);
Json ToJson(const CaratheodoryResult& result);
CaratheodoryResult CaratheodoryResultFromJson(const Json& json);
Json ToJson(const TraceEntry& entry);
Json ToJson(const TriangulationDump& dump);

}  // namespace mkkm

#endif  // MKKM_INSTANCE_IO_H_
