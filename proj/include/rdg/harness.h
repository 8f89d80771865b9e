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

#ifndef RDG_HARNESS_H_
#define RDG_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rdg/stats.h"
#include "rdg/theory.h"
#include "rdg/weights.h"

namespace rdg {

enum class Estimator { kCOverN2, kCOverLogN2 };

std::string ToString(Estimator e);
// Accepts "C_over_N2" and "C_over_logN2".
Estimator ParseEstimator(const std::string& name);

struct SweepPoint {
  int n = 2;
  double c = 0.0;
  WeightSpec weights = WeightSpec::Constant(1.0);
};

struct ExperimentPlan {
  std::vector<SweepPoint> sweep;
  int replicates = 1;
  Estimator estimator = Estimator::kCOverN2;
  std::uint64_t seed = 0;
  int threads = 1;
  // Half-width of the band used for the fraction-outside statistic.
  std::optional<double> tolerance;
};

// Throws std::invalid_argument for an empty sweep, replicates < 1, or an
// invalid sweep point.
void Validate(const ExperimentPlan& plan);

struct ReplicateRecord {
  int replicate = 0;
  std::uint64_t seed = 0;
  std::int64_t largest = 0;
  std::int64_t components = 0;
  std::int64_t edges = 0;
  double estimate = 0.0;
};

struct PointResult {
  SweepPoint point;
  double lambda = 0.0;
  double crit = 0.0;
  Regime regime = Regime::kCritical;
  std::vector<ReplicateRecord> replicates;
  SampleSummary summary;
  std::optional<double> target;
  std::optional<double> z;
  std::optional<double> frac_outside;
  std::vector<std::string> warnings;
};

struct ExperimentResult {
  Estimator estimator = Estimator::kCOverN2;
  std::uint64_t seed = 0;
  std::vector<PointResult> points;
};

double Estimate(Estimator e, std::int64_t largest, int n);

// Limit of the estimator predicted for (lambda, w), if the regime has one:
// beta_hat (0 below criticality) for C/N^2, the logarithmic constant for
// C/log N^2 below criticality.
std::optional<double> TheoryTarget(Estimator e, double lambda, const WeightSpec& w);

// Seed of replicate r at sweep point i.
std::uint64_t ReplicateSeed(std::uint64_t root, std::size_t point, int replicate);

// Samples `replicates` graphs per sweep point and measures the largest
// component. Replicates fan out over `threads` workers; results are stored
// by replicate index, so the output depends only on the plan.
ExperimentResult run_experiment(const ExperimentPlan& plan);

// One row per replicate and one summary row per sweep point.
void WriteCsv(const ExperimentResult& result, std::ostream& os);
void WriteJson(const ExperimentResult& result, std::ostream& os);

TheoryReport verify_theory(double lambda, const WeightSpec& w);

struct CheckRow {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

bool AllPass(const std::vector<CheckRow>& rows);
void WriteTable(const std::vector<CheckRow>& rows, std::ostream& os);
void WriteTableCsv(const std::vector<CheckRow>& rows, std::ostream& os);
void WriteTableJson(const std::vector<CheckRow>& rows, std::ostream& os);

struct CouplingGrid {
  std::vector<std::int64_t> ns = {10, 100, 1000};
  std::vector<double> lambdas = {0.5, 1.0, 2.0};
  std::vector<int> lambda_n_sizes = {250, 500, 1000, 2000};
  double c = 1.0;
};

// TV(Bin(n, lambda/n), Po(lambda)) <= lambda^2 / n for every grid case with
// lambda <= n, then N |lambda_N - lambda + 2c/N| strictly decreasing along
// lambda_n_sizes.
std::vector<CheckRow> verify_coupling(const CouplingGrid& grid = {});

struct BorelCheckOptions {
  std::vector<double> lambdas = {0.3, 0.5, 0.8};
  std::int64_t runs = 1'000'000;
  std::int64_t kmax = 20;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Empirical P{T >= k} from simulated Poisson trees against borel_tail,
// passing within 3 binomial standard errors.
std::vector<CheckRow> CheckBorelTail(const BorelCheckOptions& options);

struct SizeBiasedCheckOptions {
  std::int64_t samples = 100'000;
  std::int64_t cap = 1'000'000;
  // lambda is chosen for each weight law so that lambda E W^2 equals this.
  double crit = 0.8;
  std::uint64_t seed = 2;
  int threads = 1;
};

// Two-sample KS test between the progeny of B1 (root ~ W~) and B2, passing
// at the 1% level.
CheckRow CheckSizeBiasedIdentity(const WeightSpec& w,
                                 const SizeBiasedCheckOptions& options);

}  // namespace rdg

#endif  // RDG_HARNESS_H_
