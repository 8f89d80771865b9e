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

// Command-line front end: simulate, theory, branching, verify, export-graph.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdg/components.h"
#include "rdg/config.h"
#include "rdg/harness.h"
#include "rdg/model.h"
#include "rdg/theory.h"

namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::string out;
  std::string format;
};

void AddCommon(CLI::App* app, CommonFlags* flags, const std::string& default_format) {
  flags->format = default_format;
  app->add_option("--seed", flags->seed, "Root RNG seed");
  app->add_option("--threads", flags->threads, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--out", flags->out, "Output path (default: stdout)");
  app->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

// Writes `body` to --out, or stdout when unset.
void Emit(const CommonFlags& flags, const std::string& body) {
  if (flags.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream os(flags.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + flags.out);
  os << body;
}

rdg::WeightSpec ParseWeightsFlag(const std::string& text) {
  if (text.empty()) return rdg::WeightSpec::Constant(1.0);
  return rdg::WeightSpecFromJson(nlohmann::json::parse(text));
}

std::string TableAs(const std::vector<rdg::CheckRow>& rows, const std::string& format,
                    bool human) {
  std::ostringstream os;
  if (human) {
    rdg::WriteTable(rows, os);
  } else if (format == "json") {
    rdg::WriteTableJson(rows, os);
  } else {
    rdg::WriteTableCsv(rows, os);
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random distance graphs on the discrete torus"};
  app.require_subcommand(1);

  // simulate
  CommonFlags sim_flags;
  std::string config_path;
  auto* sim = app.add_subcommand("simulate", "Run an experiment plan from a JSON config");
  sim->add_option("--config", config_path, "Experiment config file")->required();
  AddCommon(sim, &sim_flags, "");

  // theory
  CommonFlags th_flags;
  std::optional<double> th_lambda, th_c;
  std::string th_weights;
  auto* th = app.add_subcommand("theory", "Emit every limit constant for (lambda, W)");
  auto* lam_opt = th->add_option("--lambda", th_lambda, "lambda = 4 c log 2");
  auto* c_opt = th->add_option("--c", th_c, "Edge intensity c");
  lam_opt->excludes(c_opt);
  th->add_option("--weights", th_weights, "Weight law as JSON");
  AddCommon(th, &th_flags, "json");

  // branching
  CommonFlags br_flags;
  rdg::BorelCheckOptions borel;
  rdg::SizeBiasedCheckOptions biased;
  auto* br = app.add_subcommand("branching", "Branching-process oracle/simulator cross-checks");
  br->add_option("--runs", borel.runs, "Trees per lambda' for the Borel check");
  br->add_option("--kmax", borel.kmax, "Largest k in the Borel tail check");
  br->add_option("--samples", biased.samples, "Trees per process for the KS check");
  AddCommon(br, &br_flags, "");

  // verify
  CommonFlags ve_flags;
  auto* ve = app.add_subcommand("verify", "Coupling bound and lambda_N expansion suite");
  AddCommon(ve, &ve_flags, "");

  // export-graph
  CommonFlags ex_flags;
  int ex_n = 0;
  std::optional<double> ex_lambda, ex_c;
  std::string ex_weights, trace_from;
  auto* ex = app.add_subcommand("export-graph", "Sample one graph and dump it");
  ex->add_option("--N", ex_n, "Torus side length")->required();
  auto* ex_lam = ex->add_option("--lambda", ex_lambda, "lambda = 4 c log 2");
  auto* ex_copt = ex->add_option("--c", ex_c, "Edge intensity c");
  ex_lam->excludes(ex_copt);
  ex->add_option("--weights", ex_weights, "Weight law as JSON");
  ex->add_option("--trace-from", trace_from,
                 "Also dump the exploration trace from vertex 'u1,u2'");
  AddCommon(ex, &ex_flags, "");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      rdg::PlanFile file = rdg::LoadPlanFile(config_path);
      if (sim_flags.seed) file.plan.seed = *sim_flags.seed;
      if (sim->count("--threads")) file.plan.threads = sim_flags.threads;
      if (sim_flags.out.empty() && file.output) sim_flags.out = *file.output;
      std::string format = sim_flags.format;
      if (format.empty()) format = file.format.value_or("csv");
      const rdg::ExperimentResult result = rdg::run_experiment(file.plan);
      std::ostringstream os;
      if (format == "json") {
        rdg::WriteJson(result, os);
      } else {
        rdg::WriteCsv(result, os);
      }
      Emit(sim_flags, os.str());
      for (const auto& p : result.points) {
        for (const auto& w : p.warnings) std::cerr << "warning (N=" << p.point.n << "): " << w << "\n";
      }
      return 0;
    }
    if (*th) {
      if (!th_lambda && !th_c) throw CLI::ValidationError("theory", "give --lambda or --c");
      const double lambda = th_lambda ? *th_lambda : rdg::lambda_of_c(*th_c);
      const rdg::TheoryReport report = rdg::verify_theory(lambda, ParseWeightsFlag(th_weights));
      if (th_flags.format == "csv") {
        const auto j = nlohmann::json::parse(rdg::ToJson(report, -1));
        std::ostringstream os;
        os << "key,value\n";
        for (const auto& [k, v] : j.items()) {
          if (v.is_object() || v.is_array()) continue;
          os << k << "," << (v.is_null() ? "" : v.dump()) << "\n";
        }
        Emit(th_flags, os.str());
      } else {
        Emit(th_flags, rdg::ToJson(report) + "\n");
      }
      return 0;
    }
    if (*br) {
      if (br_flags.seed) {
        borel.seed = *br_flags.seed;
        biased.seed = *br_flags.seed + 1;
      }
      borel.threads = biased.threads = br_flags.threads;
      std::vector<rdg::CheckRow> rows = rdg::CheckBorelTail(borel);
      for (const rdg::WeightSpec& w :
           {rdg::WeightSpec::Constant(1.0),
            rdg::WeightSpec::FiniteDiscrete({{1.0, 0.5}, {2.0, 0.5}}),
            rdg::WeightSpec::TruncatedExponential(1.0, 4.0)}) {
        rows.push_back(rdg::CheckSizeBiasedIdentity(w, biased));
      }
      Emit(br_flags, TableAs(rows, br_flags.format, br_flags.format.empty()));
      return rdg::AllPass(rows) ? 0 : 1;
    }
    if (*ve) {
      const std::vector<rdg::CheckRow> rows = rdg::verify_coupling();
      Emit(ve_flags, TableAs(rows, ve_flags.format, ve_flags.format.empty()));
      return rdg::AllPass(rows) ? 0 : 1;
    }
    if (*ex) {
      if (ex_flags.out.empty()) throw CLI::ValidationError("export-graph", "--out prefix is required");
      if (!ex_lambda && !ex_c) throw CLI::ValidationError("export-graph", "give --lambda or --c");
      const double c = ex_c ? *ex_c : rdg::c_of_lambda(*ex_lambda);
      const rdg::ModelConfig m{rdg::TorusConfig(ex_n), c, ParseWeightsFlag(ex_weights),
                               ex_flags.seed.value_or(0)};
      const rdg::Graph g = rdg::sample_graph(m, ex_flags.threads);
      std::ofstream edges(ex_flags.out + ".edges");
      std::ofstream weights(ex_flags.out + ".weights");
      if (!edges || !weights) throw std::runtime_error("cannot write " + ex_flags.out + ".*");
      rdg::WriteEdgeList(g, edges);
      rdg::WriteWeights(g, weights);
      if (!trace_from.empty()) {
        int u1 = 0, u2 = 0;
        char comma = 0;
        std::istringstream is(trace_from);
        if (!(is >> u1 >> comma >> u2) || comma != ',') {
          throw CLI::ValidationError("--trace-from", "expected 'u1,u2'");
        }
        const rdg::Vertex start{u1, u2};
        if (!m.torus.Contains(start)) throw CLI::ValidationError("--trace-from", "vertex outside torus");
        rdg::Rng rng = rdg::Substream(m.seed, rdg::StreamDomain::kExploration, 0);
        const rdg::ExplorationTrace trace =
            rdg::explore_component(g, m.torus.Index(start), rng, {.record_rings = true});
        std::ofstream tr(ex_flags.out + ".trace.jsonl");
        rdg::WriteTraceJsonLines(g, trace, tr);
      }
      std::cerr << "N=" << ex_n << " c=" << c << " edges=" << g.edge_count() << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
