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

#include "rdg/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rdg/branching.h"
#include "rdg/components.h"
#include "rdg/error.h"
#include "rdg/model.h"
#include "rdg/rng.h"

namespace rdg {
namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <typename Fn>
void ParallelFor(std::size_t n, int threads, Fn fn) {
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(workers, n); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string Num(double x) {
  if (std::isnan(x)) return "";
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string Num(const std::optional<double>& x) { return x ? Num(*x) : ""; }

// Short form for labels.
std::string Label(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

nlohmann::json OptJson(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string ToString(Estimator e) {
  return e == Estimator::kCOverN2 ? "C_over_N2" : "C_over_logN2";
}

Estimator ParseEstimator(const std::string& name) {
  if (name == "C_over_N2") return Estimator::kCOverN2;
  if (name == "C_over_logN2") return Estimator::kCOverLogN2;
  throw std::invalid_argument("unknown estimator '" + name +
                              "' (expected C_over_N2 or C_over_logN2)");
}

void Validate(const ExperimentPlan& plan) {
  if (plan.sweep.empty()) throw std::invalid_argument("sweep is empty");
  if (plan.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  for (const SweepPoint& p : plan.sweep) {
    Validate(ModelConfig{TorusConfig(p.n), p.c, p.weights, 0});
    if (!p.weights.CanSample()) {
      throw std::invalid_argument("weight law " + p.weights.label() + " cannot be sampled");
    }
  }
}

double Estimate(Estimator e, std::int64_t largest, int n) {
  const double nv = static_cast<double>(n) * n;
  return e == Estimator::kCOverN2 ? static_cast<double>(largest) / nv
                                  : static_cast<double>(largest) / std::log(nv);
}

std::optional<double> TheoryTarget(Estimator e, double lambda, const WeightSpec& w) {
  const double crit = critical_parameter(lambda, w);
  const Regime regime = ClassifyRegime(crit);
  if (regime == Regime::kCritical) return std::nullopt;
  if (e == Estimator::kCOverN2) {
    if (regime == Regime::kSubcritical) return 0.0;
    return weighted_beta_profile(lambda, w).beta_hat;
  }
  if (regime == Regime::kSupercritical) return std::nullopt;
  try {
    return theorem3_constants(lambda, w).limit;
  } catch (const AssumptionError&) {
    return std::nullopt;
  }
}

std::uint64_t ReplicateSeed(std::uint64_t root, std::size_t point, int replicate) {
  return DeriveSeed(root, point, static_cast<std::uint64_t>(replicate));
}

ExperimentResult run_experiment(const ExperimentPlan& plan) {
  Validate(plan);
  ExperimentResult result;
  result.estimator = plan.estimator;
  result.seed = plan.seed;
  for (std::size_t i = 0; i < plan.sweep.size(); ++i) {
    const SweepPoint& point = plan.sweep[i];
    PointResult pr;
    pr.point = point;
    pr.lambda = lambda_of_c(point.c);
    pr.crit = critical_parameter(pr.lambda, point.weights);
    pr.regime = ClassifyRegime(pr.crit);
    if (auto bound = point.weights.support_bound();
        bound && point.c * *bound * *bound / point.n >= 1.0) {
      pr.warnings.push_back("edge probabilities capped at 1 on ring 1 (c B^2 / N >= 1); "
                            "limit theory assumes uncapped probabilities");
    }
    pr.target = TheoryTarget(plan.estimator, pr.lambda, point.weights);
    if (!pr.target) pr.warnings.push_back("no theory target for this regime/estimator");

    pr.replicates.resize(static_cast<std::size_t>(plan.replicates));
    ParallelFor(pr.replicates.size(), plan.threads, [&](std::size_t r) {
      ReplicateRecord rec;
      rec.replicate = static_cast<int>(r);
      rec.seed = ReplicateSeed(plan.seed, i, rec.replicate);
      const Graph g =
          sample_graph(ModelConfig{TorusConfig(point.n), point.c, point.weights, rec.seed});
      const ComponentSummary cs = largest_component(g);
      rec.largest = cs.largest;
      rec.components = cs.count;
      rec.edges = g.edge_count();
      rec.estimate = Estimate(plan.estimator, cs.largest, point.n);
      pr.replicates[r] = rec;
    });

    std::vector<double> xs;
    for (const ReplicateRecord& rec : pr.replicates) xs.push_back(rec.estimate);
    pr.summary = Summarize(xs);
    if (pr.target && pr.summary.sem > 0.0) {
      pr.z = (pr.summary.mean - *pr.target) / pr.summary.sem;
    }
    if (pr.target && plan.tolerance) {
      const auto outside = std::count_if(xs.begin(), xs.end(), [&](double x) {
        return std::fabs(x - *pr.target) > *plan.tolerance;
      });
      pr.frac_outside = static_cast<double>(outside) / static_cast<double>(xs.size());
    }
    result.points.push_back(std::move(pr));
  }
  return result;
}

void WriteCsv(const ExperimentResult& result, std::ostream& os) {
  os << "kind,point,N,c,lambda,weights,estimator,replicate,seed,C,components,edges,"
        "estimate,mean,std,sem,target,z,frac_outside\n";
  const std::string est = ToString(result.estimator);
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const PointResult& p = result.points[i];
    const std::string prefix = std::to_string(i) + "," + std::to_string(p.point.n) + "," +
                               Num(p.point.c) + "," + Num(p.lambda) + "," +
                               Quote(p.point.weights.label()) + "," + est + ",";
    for (const ReplicateRecord& r : p.replicates) {
      os << "replicate," << prefix << r.replicate << "," << r.seed << "," << r.largest
         << "," << r.components << "," << r.edges << "," << Num(r.estimate)
         << ",,,," << Num(p.target) << ",,\n";
    }
    os << "summary," << prefix << p.replicates.size() << ",,,,,," << Num(p.summary.mean)
       << "," << Num(p.summary.std) << "," << Num(p.summary.sem) << "," << Num(p.target)
       << "," << Num(p.z) << "," << Num(p.frac_outside) << "\n";
  }
}

void WriteJson(const ExperimentResult& result, std::ostream& os) {
  nlohmann::json j;
  j["estimator"] = ToString(result.estimator);
  j["seed"] = result.seed;
  j["points"] = nlohmann::json::array();
  for (const PointResult& p : result.points) {
    nlohmann::json reps = nlohmann::json::array();
    for (const ReplicateRecord& r : p.replicates) {
      reps.push_back({{"replicate", r.replicate},
                      {"seed", r.seed},
                      {"C", r.largest},
                      {"components", r.components},
                      {"edges", r.edges},
                      {"estimate", r.estimate}});
    }
    j["points"].push_back({{"N", p.point.n},
                           {"c", p.point.c},
                           {"lambda", p.lambda},
                           {"weights", p.point.weights.label()},
                           {"crit", p.crit},
                           {"regime", ToString(p.regime)},
                           {"mean", p.summary.mean},
                           {"std", p.summary.std},
                           {"sem", p.summary.sem},
                           {"target", OptJson(p.target)},
                           {"z", OptJson(p.z)},
                           {"frac_outside", OptJson(p.frac_outside)},
                           {"warnings", p.warnings},
                           {"replicates", reps}});
  }
  os << j.dump(2) << "\n";
}

TheoryReport verify_theory(double lambda, const WeightSpec& w) {
  return BuildTheoryReport(lambda, w);
}

bool AllPass(const std::vector<CheckRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

void WriteTable(const std::vector<CheckRow>& rows, std::ostream& os) {
  for (const CheckRow& r : rows) {
    os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << r.name
       << " value=" << Num(r.value) << " bound=" << Num(r.bound) << "\n";
  }
}

void WriteTableCsv(const std::vector<CheckRow>& rows, std::ostream& os) {
  os << "name,value,bound,pass\n";
  for (const CheckRow& r : rows) {
    os << Quote(r.name) << "," << Num(r.value) << "," << Num(r.bound) << ","
       << (r.pass ? "true" : "false") << "\n";
  }
}

void WriteTableJson(const std::vector<CheckRow>& rows, std::ostream& os) {
  nlohmann::json j = nlohmann::json::array();
  for (const CheckRow& r : rows) {
    j.push_back({{"name", r.name}, {"value", r.value}, {"bound", r.bound}, {"pass", r.pass}});
  }
  os << j.dump(2) << "\n";
}

std::vector<CheckRow> verify_coupling(const CouplingGrid& grid) {
  std::vector<CheckRow> rows;
  for (std::int64_t n : grid.ns) {
    for (double lambda : grid.lambdas) {
      if (lambda > static_cast<double>(n)) continue;
      CheckRow row;
      row.name = "tv n=" + std::to_string(n) + " lambda=" + Label(lambda);
      row.value = binomial_poisson_tv(n, lambda);
      row.bound = lambda * lambda / static_cast<double>(n);
      row.pass = row.value <= row.bound;
      rows.push_back(row);
    }
  }
  const double lambda = lambda_of_c(grid.c);
  double previous = std::numeric_limits<double>::infinity();
  for (int n : grid.lambda_n_sizes) {
    CheckRow row;
    row.name = "lambda_N N=" + std::to_string(n) + " c=" + Label(grid.c);
    row.bound = previous;
    try {
      const double ln = lambda_N(grid.c, TorusConfig(n));
      row.value = n * std::fabs(ln - lambda + 2.0 * grid.c / n);
      row.pass = row.value < previous;
      previous = row.value;
    } catch (const ParameterError&) {
      row.value = std::numeric_limits<double>::quiet_NaN();
      row.pass = false;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<CheckRow> CheckBorelTail(const BorelCheckOptions& options) {
  std::vector<CheckRow> rows;
  for (std::size_t li = 0; li < options.lambdas.size(); ++li) {
    const double lp = options.lambdas[li];
    std::vector<std::int64_t> totals(static_cast<std::size_t>(options.runs));
    const std::uint64_t seed = DeriveSeed(options.seed, li);
    ParallelFor(totals.size(), options.threads, [&](std::size_t r) {
      Rng rng = Substream(seed, StreamDomain::kBranching, r);
      totals[r] = simulate_poisson_gw(lp, options.kmax + 1, rng).total;
    });
    for (std::int64_t k = 1; k <= options.kmax; ++k) {
      const auto hits = std::count_if(totals.begin(), totals.end(),
                                      [k](std::int64_t t) { return t >= k; });
      const double emp = static_cast<double>(hits) / static_cast<double>(options.runs);
      const double tail = borel_tail(lp, k);
      const double sigma = std::sqrt(tail * (1.0 - tail) / static_cast<double>(options.runs));
      CheckRow row;
      row.name = "borel lambda'=" + Label(lp) + " k=" + std::to_string(k);
      row.value = std::fabs(emp - tail);
      row.bound = 3.0 * sigma;
      row.pass = sigma > 0.0 ? row.value <= row.bound : row.value == 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

CheckRow CheckSizeBiasedIdentity(const WeightSpec& w,
                                 const SizeBiasedCheckOptions& options) {
  const SizeBiasedSpec sb = size_biased(w);
  const double lambda = options.crit / w.second_moment();
  const auto n = static_cast<std::size_t>(options.samples);
  std::vector<double> b1(n), b2(n);
  const std::uint64_t seed1 = DeriveSeed(options.seed, 1);
  const std::uint64_t seed2 = DeriveSeed(options.seed, 2);
  ParallelFor(n, options.threads, [&](std::size_t i) {
    Rng r1 = Substream(seed1, StreamDomain::kBranching, i);
    Rng r2 = Substream(seed2, StreamDomain::kBranching, i);
    b1[i] = static_cast<double>(
        simulate_B1_size_biased_root(lambda, sb, options.cap, r1).Ranked(options.cap));
    b2[i] = static_cast<double>(simulate_B2(lambda, sb, options.cap, r2).Ranked(options.cap));
  });
  const KsResult ks = KsTwoSample(std::move(b1), std::move(b2));
  CheckRow row;
  row.name = "ks B1(W~) vs B2 " + w.label();
  row.value = ks.p_value;
  row.bound = 0.01;
  row.pass = ks.p_value >= 0.01;
  return row;
}

}  // namespace rdg
