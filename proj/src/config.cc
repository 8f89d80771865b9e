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

#include "rdg/config.h"

#include <fstream>
#include <stdexcept>
#include <vector>

#include "rdg/model.h"

namespace rdg {
namespace {

template <typename T>
std::vector<T> ScalarOrList(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = j.at(key);
  if (v.is_array()) {
    if (v.empty()) throw std::invalid_argument(std::string(key) + " list is empty");
    return v.get<std::vector<T>>();
  }
  return {v.get<T>()};
}

double Field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw std::invalid_argument(std::string("weights: missing key '") + key + "'");
  }
  return j.at(key).get<double>();
}

}  // namespace

WeightSpec WeightSpecFromJson(const nlohmann::json& j) {
  const std::string kind = j.value("kind", "constant");
  if (kind == "constant") return WeightSpec::Constant(j.value("value", 1.0));
  if (kind == "discrete") {
    const auto values = j.at("values").get<std::vector<double>>();
    const auto probs = j.at("probs").get<std::vector<double>>();
    if (values.size() != probs.size()) {
      throw std::invalid_argument("weights: values and probs differ in length");
    }
    std::vector<WeightAtom> atoms;
    for (std::size_t i = 0; i < values.size(); ++i) atoms.push_back({values[i], probs[i]});
    return WeightSpec::FiniteDiscrete(std::move(atoms));
  }
  if (kind == "exponential") return WeightSpec::Exponential(Field(j, "rate"));
  if (kind == "truncated_exponential") {
    return WeightSpec::TruncatedExponential(Field(j, "rate"), Field(j, "upper"));
  }
  if (kind == "uniform") return WeightSpec::Uniform(Field(j, "lo"), Field(j, "hi"));
  throw std::invalid_argument("weights: unknown kind '" + kind + "'");
}

PlanFile PlanFromJson(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    if (!j.contains("N")) throw std::invalid_argument("config: missing key 'N'");
    const bool has_c = j.contains("c");
    const bool has_lambda = j.contains("lambda");
    if (has_c == has_lambda) {
      throw std::invalid_argument("config: give exactly one of 'c' and 'lambda'");
    }
    std::vector<double> cs = has_c ? ScalarOrList<double>(j, "c")
                                   : ScalarOrList<double>(j, "lambda");
    if (has_lambda) {
      for (double& x : cs) x = c_of_lambda(x);
    }
    const WeightSpec weights =
        j.contains("weights") ? WeightSpecFromJson(j.at("weights")) : WeightSpec::Constant(1.0);

    PlanFile file;
    ExperimentPlan& plan = file.plan;
    for (int n : ScalarOrList<int>(j, "N")) {
      for (double c : cs) plan.sweep.push_back({n, c, weights});
    }
    plan.replicates = j.value("replicates", 1);
    plan.seed = j.value("seed", std::uint64_t{0});
    plan.threads = j.value("threads", 1);
    plan.estimator = ParseEstimator(j.value("estimator", std::string("C_over_N2")));
    if (j.contains("tolerance")) plan.tolerance = j.at("tolerance").get<double>();
    if (j.contains("output")) file.output = j.at("output").get<std::string>();
    if (j.contains("format")) file.format = j.at("format").get<std::string>();
    Validate(plan);
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

PlanFile LoadPlanFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  return PlanFromJson(j);
}

}  // namespace rdg
