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

#ifndef RDG_THEORY_H_
#define RDG_THEORY_H_

#include <functional>
#include <optional>
#include <string>

#include "rdg/weights.h"

namespace rdg {

enum class Regime { kSubcritical, kCritical, kSupercritical };

std::string ToString(Regime regime);

// |lambda E W^2 - 1| at or below this is reported as critical.
inline constexpr double kCriticalBand = 1e-12;

// 1 / (lambda - 1 - log lambda), the limit of C / log(N^2) for lambda < 1.
// Throws RegimeError unless 0 < lambda < 1.
double subcritical_constant(double lambda);

// Unique positive root of beta = 1 - exp(-lambda beta). Throws RegimeError
// unless lambda > 1.
double supercritical_beta(double lambda);

// lambda * E W^2. Throws AssumptionError when E W^2 is infinite.
double critical_parameter(double lambda, const WeightSpec& w);
Regime ClassifyRegime(double critical);

struct BetaProfile {
  // Largest root of b = E[W (1 - exp(-lambda W b))].
  double b_star = 0.0;
  // E beta(W), the limit of C / N^2.
  double beta_hat = 0.0;
  double lambda = 0.0;
  double residual = 0.0;

  // Survival probability of a type-x ancestor: 1 - exp(-lambda x b*).
  double Beta(double x) const;
};

// Solves the survival equation through its scalar reduction: substituting
// f(x) = 1 - exp(-lambda x b) closes the map, leaving a concave fixed point
// problem in b on [0, E W].
BetaProfile weighted_beta_profile(double lambda, const WeightSpec& w);

// E(W^k exp(s W)) for k in {0, 1, 2}. Throws AssumptionError on divergence.
double tilt_moments(const WeightSpec& w, double s, int k);

struct SubcriticalWeighted {
  double y = 0.0;
  double gamma = 0.0;
  double limit = 0.0;  // 1 / log(gamma)
  double residual = 0.0;
};

// Root y > 1 of y = E(W e^{tW}) / (lambda M E(W^2 e^{tW})), t = lambda M (y-1),
// and gamma = 1 / (lambda E(W^2 e^{tW})). Requires lambda E W^2 < 1
// (RegimeError otherwise) and an exponential moment (AssumptionError).
SubcriticalWeighted theorem3_constants(double lambda, const WeightSpec& w);

// Residual of the equation above at y.
double Theorem3Residual(double lambda, const WeightSpec& w, double y);

struct TheoryReport {
  double lambda = 0.0;
  double c = 0.0;
  std::string weights;
  double mean = 0.0;
  double second_moment = 0.0;
  double crit = 0.0;
  Regime regime = Regime::kCritical;
  std::optional<double> beta;
  std::optional<double> beta_residual;
  std::optional<double> b_star;
  std::optional<double> beta_hat;
  std::optional<double> b_star_residual;
  std::optional<double> sub_const;
  std::optional<double> y;
  std::optional<double> gamma;
  std::optional<double> sub_const_weighted;
  std::optional<double> y_residual;
  std::vector<std::string> notes;
};

// Every limit constant available for (lambda, w). Constants are suppressed
// in the critical regime; assumption failures are recorded in notes.
TheoryReport BuildTheoryReport(double lambda, const WeightSpec& w);

std::string ToJson(const TheoryReport& report, int indent = 2);

// Bisection for a continuous g with g(lo) > 0 > g(hi); stops when the
// bracket collapses to adjacent doubles.
double BisectRoot(const std::function<double(double)>& g, double lo, double hi);

}  // namespace rdg

#endif  // RDG_THEORY_H_
