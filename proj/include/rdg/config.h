// Copyright 2026 The rdg Authors
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

#ifndef RDG_CONFIG_H_
#define RDG_CONFIG_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "rdg/harness.h"
#include "rdg/weights.h"

namespace rdg {

// {"kind":"constant","value":1}
// {"kind":"discrete","values":[1,2],"probs":[0.5,0.5]}
// {"kind":"exponential","rate":1}
// {"kind":"truncated_exponential","rate":1,"upper":5}
// {"kind":"uniform","lo":0.5,"hi":1.5}
WeightSpec WeightSpecFromJson(const nlohmann::json& j);

struct PlanFile {
  ExperimentPlan plan;
  std::optional<std::string> output;
  std::optional<std::string> format;
};

// Keys: N (int or list), exactly one of c / lambda (number or list; lambda
// is converted with c = lambda / (4 log 2)), weights, replicates, seed,
// estimator, output, format, tolerance, threads. The sweep is the cartesian
// product of N and c/lambda, N varying slowest. Throws std::invalid_argument
// on missing or conflicting keys.
PlanFile PlanFromJson(const nlohmann::json& j);
PlanFile LoadPlanFile(const std::string& path);

}  // namespace rdg

#endif  // RDG_CONFIG_H_
