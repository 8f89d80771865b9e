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

#include "rdg/weights.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "rdg/error.h"

namespace rdg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kBoundedPanels = 64;
constexpr int kMaxTailPanels = 20000;

using Gauss = boost::math::quadrature::gauss<double, 20>;

double Panel(const std::function<double(double)>& g, double a, double b) {
  return Gauss::integrate(g, a, b);
}

std::string FormatDouble(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

WeightSpec WeightSpec::Constant(double w) {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("constant weight must be finite and >= 0");
  }
  WeightSpec spec;
  spec.kind_ = Kind::kConstant;
  spec.atoms_ = {{w, 1.0}};
  spec.label_ = "constant(" + FormatDouble(w) + ")";
  spec.CacheMoments();
  return spec;
}

WeightSpec WeightSpec::FiniteDiscrete(std::vector<WeightAtom> atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("finite discrete law needs at least one atom");
  }
  std::map<double, double> merged;
  double total = 0.0;
  for (const WeightAtom& a : atoms) {
    if (!(a.value >= 0.0) || !std::isfinite(a.value)) {
      throw std::invalid_argument("weight values must be finite and >= 0");
    }
    if (!(a.prob >= 0.0)) {
      throw std::invalid_argument("probabilities must be >= 0");
    }
    merged[a.value] += a.prob;
    total += a.prob;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities sum to " + FormatDouble(total) +
                                ", expected 1");
  }
  WeightSpec spec;
  spec.kind_ = Kind::kFiniteDiscrete;
  std::ostringstream label;
  label << "discrete{";
  for (const auto& [value, prob] : merged) {
    if (prob == 0.0) continue;
    if (!spec.atoms_.empty()) label << ",";
    label << value << ":" << prob;
    spec.atoms_.push_back({value, prob});
  }
  label << "}";
  spec.label_ = label.str();
  double acc = 0.0;
  for (const WeightAtom& a : spec.atoms_) {
    acc += a.prob;
    spec.cumulative_.push_back(acc);
  }
  spec.CacheMoments();
  return spec;
}

WeightSpec WeightSpec::Continuous(ContinuousLaw law) {
  if (!law.density) throw std::invalid_argument("continuous law needs a density");
  if (!(law.lower >= 0.0) || !(law.upper > law.lower)) {
    throw std::invalid_argument("continuous support must be [lo, hi], 0 <= lo < hi");
  }
  WeightSpec spec;
  spec.kind_ = Kind::kContinuous;
  spec.label_ = law.name.empty() ? "continuous" : law.name;
  spec.law_ = std::move(law);
  try {
    const double mass = spec.Expect([](double) { return 1.0; });
    if (std::fabs(mass - 1.0) > 1e-8) {
      throw std::invalid_argument("density integrates to " + FormatDouble(mass));
    }
  } catch (const AssumptionError&) {
    if (!spec.law_->mean) {
      throw std::invalid_argument("density normalization does not converge numerically");
    }
  }
  spec.CacheMoments();
  return spec;
}

WeightSpec WeightSpec::Exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be > 0");
  ContinuousLaw law;
  law.name = "exponential(" + FormatDouble(rate) + ")";
  law.density = [rate](double x) { return rate * std::exp(-rate * x); };
  law.lower = 0.0;
  law.upper = kInf;
  law.sampler = [rate](Rng& rng) { return -std::log(UniformOpen0(rng)) / rate; };
  // Size-biased exponential is Gamma(2, rate).
  law.size_biased_sampler = [rate](Rng& rng) {
    return -(std::log(UniformOpen0(rng)) + std::log(UniformOpen0(rng))) / rate;
  };
  law.exp_moment_radius = rate / 2.0;
  return Continuous(std::move(law));
}

WeightSpec WeightSpec::TruncatedExponential(double rate, double upper) {
  if (!(rate > 0.0) || !(upper > 0.0) || !std::isfinite(upper)) {
    throw std::invalid_argument("truncated exponential needs rate > 0, 0 < upper < inf");
  }
  const double norm = -std::expm1(-rate * upper);
  ContinuousLaw law;
  law.name = "truncated_exponential(" + FormatDouble(rate) + "," +
             FormatDouble(upper) + ")";
  law.density = [rate, norm](double x) { return rate * std::exp(-rate * x) / norm; };
  law.lower = 0.0;
  law.upper = upper;
  law.sampler = [rate, norm](Rng& rng) {
    return -std::log1p(-Uniform01(rng) * norm) / rate;
  };
  return Continuous(std::move(law));
}

WeightSpec WeightSpec::Uniform(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("uniform law needs 0 <= lo < hi < inf");
  }
  ContinuousLaw law;
  law.name = "uniform(" + FormatDouble(lo) + "," + FormatDouble(hi) + ")";
  law.density = [lo, hi](double) { return 1.0 / (hi - lo); };
  law.lower = lo;
  law.upper = hi;
  law.sampler = [lo, hi](Rng& rng) { return lo + (hi - lo) * Uniform01(rng); };
  return Continuous(std::move(law));
}

std::optional<double> WeightSpec::exp_moment_radius() const {
  if (support_bound_) return kInf;
  if (law_) return law_->exp_moment_radius;
  return std::nullopt;
}

void WeightSpec::CacheMoments() {
  if (law_) {
    auto moment = [this](const std::optional<double>& closed, int k) {
      if (closed) return *closed;
      try {
        return Expect([k](double x) { return k == 1 ? x : x * x; });
      } catch (const AssumptionError&) {
        return kInf;
      }
    };
    mean_ = moment(law_->mean, 1);
    second_moment_ = moment(law_->second_moment, 2);
    if (std::isfinite(law_->upper)) support_bound_ = law_->upper;
    return;
  }
  mean_ = 0.0;
  second_moment_ = 0.0;
  double bound = 0.0;
  for (const WeightAtom& a : atoms_) {
    mean_ += a.prob * a.value;
    second_moment_ += a.prob * a.value * a.value;
    bound = std::max(bound, a.value);
  }
  support_bound_ = bound;
}

double WeightSpec::Expect(const std::function<double(double)>& f) const {
  if (!law_) {
    double acc = 0.0;
    for (const WeightAtom& a : atoms_) acc += a.prob * f(a.value);
    if (!std::isfinite(acc)) throw AssumptionError("expectation is not finite");
    return acc;
  }
  const ContinuousLaw& law = *law_;
  auto g = [&](double x) { return f(x) * law.density(x); };
  double total = 0.0;
  if (std::isfinite(law.upper)) {
    const double h = (law.upper - law.lower) / kBoundedPanels;
    for (int i = 0; i < kBoundedPanels; ++i) {
      total += Panel(g, law.lower + i * h, law.lower + (i + 1) * h);
    }
    if (!std::isfinite(total)) throw AssumptionError("expectation is not finite");
    return total;
  }
  // Unbounded support: append unit-scale panels until four consecutive
  // panels are negligible relative to the running total.
  const double h = law.exp_moment_radius ? 1.0 / *law.exp_moment_radius : 1.0;
  int quiet = 0;
  for (int i = 0; i < kMaxTailPanels; ++i) {
    const double piece = Panel(g, law.lower + i * h, law.lower + (i + 1) * h);
    total += piece;
    if (!std::isfinite(total)) throw AssumptionError("expectation diverges");
    if (i >= 8 && std::fabs(piece) <= 1e-17 * std::fabs(total)) {
      if (++quiet == 4) return total;
    } else {
      quiet = 0;
    }
  }
  throw AssumptionError("expectation did not converge over the truncated support");
}

bool WeightSpec::CanSample() const {
  return !law_ || static_cast<bool>(law_->sampler);
}

double WeightSpec::Sample(Rng& rng) const {
  switch (kind_) {
    case Kind::kConstant:
      return atoms_.front().value;
    case Kind::kFiniteDiscrete: {
      const double u = Uniform01(rng) * cumulative_.back();
      const auto it =
          std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
      const auto idx = std::min<std::size_t>(
          static_cast<std::size_t>(it - cumulative_.begin()), atoms_.size() - 1);
      return atoms_[idx].value;
    }
    case Kind::kContinuous:
      if (!law_->sampler) {
        throw UnsupportedError("no sampler for weight law " + label_);
      }
      return law_->sampler(rng);
  }
  return 0.0;
}

std::vector<double> sample_weights(const WeightSpec& spec, std::int64_t n,
                                   Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample count must be >= 0");
  if (!spec.CanSample()) {
    throw UnsupportedError("no sampler for weight law " + spec.label());
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (double& w : out) w = spec.Sample(rng);
  return out;
}

}  // namespace rdg
