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

#include "rdg/theory.h"

#include <cmath>
#include <limits>
#include <string>

#include "json.hpp"
#include "rdg/error.h"
#include "rdg/model.h"

namespace rdg {
namespace {

constexpr int kMaxBisections = 4000;
constexpr int kMaxBracketSteps = 1100;

// Survival map of the scalar reduction: E[W (1 - exp(-lambda W b))] - b.
double ProfileGap(double lambda, const WeightSpec& w, double b) {
  return w.Expect([&](double x) { return -x * std::expm1(-lambda * x * b); }) - b;
}

}  // namespace

std::string ToString(Regime regime) {
  switch (regime) {
    case Regime::kSubcritical:
      return "subcritical";
    case Regime::kCritical:
      return "critical";
    case Regime::kSupercritical:
      return "supercritical";
  }
  return "unknown";
}

double BisectRoot(const std::function<double(double)>& g, double lo, double hi) {
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::fabs(g(lo)) <= std::fabs(g(hi)) ? lo : hi;
}

double subcritical_constant(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw RegimeError("subcritical constant needs 0 < lambda < 1, got " +
                      std::to_string(lambda));
  }
  return 1.0 / (lambda - 1.0 - std::log(lambda));
}

double supercritical_beta(double lambda) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) {
    throw RegimeError("beta > 0 needs lambda > 1, got " + std::to_string(lambda));
  }
  auto g = [lambda](double b) { return -std::expm1(-lambda * b) - b; };
  // g is concave with g(0) = 0 and g'(0) = lambda - 1 > 0, so it is positive
  // on (0, beta) and negative on (beta, 1].
  double lo = std::min(0.5, (lambda - 1.0) / (lambda * lambda));
  for (int i = 0; i < kMaxBracketSteps && !(g(lo) > 0.0); ++i) lo *= 0.5;
  if (!(g(lo) > 0.0)) {
    throw RegimeError("lambda too close to 1 to resolve beta in double precision");
  }
  return BisectRoot(g, lo, 1.0);
}

double critical_parameter(double lambda, const WeightSpec& w) {
  const double m2 = w.second_moment();
  if (!std::isfinite(m2)) {
    throw AssumptionError("E W^2 is infinite; the giant component criterion needs E W^2 < inf");
  }
  return lambda * m2;
}

Regime ClassifyRegime(double critical) {
  if (std::fabs(critical - 1.0) <= kCriticalBand) return Regime::kCritical;
  return critical < 1.0 ? Regime::kSubcritical : Regime::kSupercritical;
}

double BetaProfile::Beta(double x) const {
  return -std::expm1(-lambda * x * b_star);
}

BetaProfile weighted_beta_profile(double lambda, const WeightSpec& w) {
  const double crit = critical_parameter(lambda, w);
  if (!std::isfinite(w.mean())) throw AssumptionError("E W is infinite");
  BetaProfile profile;
  profile.lambda = lambda;
  if (crit <= 1.0 || w.mean() <= 0.0) return profile;
  auto g = [&](double b) { return ProfileGap(lambda, w, b); };
  // b* <= E W, and the gap is concave in b with positive slope at 0.
  const double hi = w.mean();
  double lo = 0.5 * hi;
  for (int i = 0; i < kMaxBracketSteps && !(g(lo) > 0.0); ++i) lo *= 0.5;
  if (!(g(lo) > 0.0)) return profile;
  profile.b_star = BisectRoot(g, lo, hi);
  profile.residual = g(profile.b_star);
  profile.beta_hat = w.Expect([&](double x) { return profile.Beta(x); });
  return profile;
}

double tilt_moments(const WeightSpec& w, double s, int k) {
  if (k < 0 || k > 2) throw DomainError("tilt moment order must be 0, 1 or 2");
  return w.Expect([s, k](double x) {
    const double e = std::exp(s * x);
    return k == 0 ? e : (k == 1 ? x * e : x * x * e);
  });
}

double Theorem3Residual(double lambda, const WeightSpec& w, double y) {
  const double m = w.mean();
  const double s = lambda * m * (y - 1.0);
  return y - tilt_moments(w, s, 1) / (lambda * m * tilt_moments(w, s, 2));
}

SubcriticalWeighted theorem3_constants(double lambda, const WeightSpec& w) {
  const double crit = critical_parameter(lambda, w);
  if (!(lambda > 0.0) || ClassifyRegime(crit) != Regime::kSubcritical) {
    throw RegimeError("logarithmic regime needs 0 < lambda E W^2 < 1, got " +
                      std::to_string(crit));
  }
  if (!w.exp_moment_radius()) {
    throw AssumptionError("no exponential moment certificate E exp(eps W) < inf");
  }
  if (!(w.mean() > 0.0)) throw AssumptionError("E W must be positive");

  // R(1) = 1 - 1/(lambda E W^2) < 0 and R increases in y; grow the upper end
  // until R > 0, backing off whenever the tilted moments diverge.
  auto residual = [&](double y) { return Theorem3Residual(lambda, w, y); };
  double lo = 1.0;
  double step = 1.0;
  double hi = 0.0;
  for (int i = 0; i < kMaxBracketSteps; ++i) {
    const double cand = lo + step;
    double r;
    try {
      r = residual(cand);
    } catch (const AssumptionError&) {
      step *= 0.5;
      continue;
    }
    if (r > 0.0) {
      hi = cand;
      break;
    }
    lo = cand;
    step *= 2.0;
  }
  if (hi == 0.0) {
    throw AssumptionError("tilted moments diverge before the root is bracketed");
  }
  SubcriticalWeighted out;
  out.y = BisectRoot([&](double y) { return -residual(y); }, lo, hi);
  out.residual = residual(out.y);
  const double s = lambda * w.mean() * (out.y - 1.0);
  out.gamma = 1.0 / (lambda * tilt_moments(w, s, 2));
  out.limit = 1.0 / std::log(out.gamma);
  return out;
}

TheoryReport BuildTheoryReport(double lambda, const WeightSpec& w) {
  TheoryReport r;
  r.lambda = lambda;
  r.c = c_of_lambda(lambda);
  r.weights = w.label();
  r.mean = w.mean();
  r.second_moment = w.second_moment();
  r.crit = critical_parameter(lambda, w);
  r.regime = ClassifyRegime(r.crit);
  switch (r.regime) {
    case Regime::kCritical:
      r.notes.push_back("lambda E W^2 = 1: critical, limit constants suppressed");
      break;
    case Regime::kSupercritical: {
      if (lambda > 1.0) {
        r.beta = supercritical_beta(lambda);
        r.beta_residual = -std::expm1(-lambda * *r.beta) - *r.beta;
      }
      const BetaProfile profile = weighted_beta_profile(lambda, w);
      r.b_star = profile.b_star;
      r.beta_hat = profile.beta_hat;
      r.b_star_residual = profile.residual;
      break;
    }
    case Regime::kSubcritical: {
      if (lambda > 0.0 && lambda < 1.0) r.sub_const = subcritical_constant(lambda);
      r.b_star = 0.0;
      r.beta_hat = 0.0;
      try {
        const SubcriticalWeighted t3 = theorem3_constants(lambda, w);
        r.y = t3.y;
        r.gamma = t3.gamma;
        r.sub_const_weighted = t3.limit;
        r.y_residual = t3.residual;
      } catch (const AssumptionError& e) {
        r.notes.push_back(std::string("logarithmic constants unavailable: ") + e.what());
      } catch (const RegimeError& e) {
        r.notes.push_back(std::string("logarithmic constants unavailable: ") + e.what());
      }
      break;
    }
  }
  return r;
}

std::string ToJson(const TheoryReport& r, int indent) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j = {
      {"lambda", r.lambda},
      {"c", r.c},
      {"weights", r.weights},
      {"mean", r.mean},
      {"second_moment", r.second_moment},
      {"crit", r.crit},
      {"regime", ToString(r.regime)},
      {"beta", opt(r.beta)},
      {"beta_hat", opt(r.beta_hat)},
      {"b_star", opt(r.b_star)},
      {"sub_const", opt(r.sub_const)},
      {"y", opt(r.y)},
      {"gamma", opt(r.gamma)},
      {"sub_const_weighted", opt(r.sub_const_weighted)},
      {"residuals",
       {{"beta", opt(r.beta_residual)},
        {"b_star", opt(r.b_star_residual)},
        {"y", opt(r.y_residual)}}},
      {"notes", r.notes},
  };
  return j.dump(indent);
}

}  // namespace rdg
