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

#ifndef RDG_WEIGHTS_H_
#define RDG_WEIGHTS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rdg/rng.h"

namespace rdg {

struct WeightAtom {
  double value = 0.0;
  double prob = 0.0;
};

// A continuous weight law on [lower, upper] (upper may be +infinity).
struct ContinuousLaw {
  std::string name;
  std::function<double(double)> density;
  double lower = 0.0;
  double upper = 0.0;
  // Optional exact samplers. Without `sampler` the law can be integrated
  // against but not drawn from.
  std::function<double(Rng&)> sampler;
  std::function<double(Rng&)> size_biased_sampler;
  // Some eps > 0 with E exp(eps W) < infinity, when known.
  std::optional<double> exp_moment_radius;
  // Closed-form moments; take precedence over quadrature. Heavy-tailed laws
  // whose integrals do not converge numerically must supply them.
  std::optional<double> mean;
  std::optional<double> second_moment;
};

// Distribution of the vertex weight W.
class WeightSpec {
 public:
  enum class Kind { kConstant, kFiniteDiscrete, kContinuous };

  static WeightSpec Constant(double w);
  // Merges repeated values; probabilities must sum to 1 within 1e-12.
  static WeightSpec FiniteDiscrete(std::vector<WeightAtom> atoms);
  static WeightSpec Continuous(ContinuousLaw law);

  static WeightSpec Exponential(double rate);
  static WeightSpec TruncatedExponential(double rate, double upper);
  static WeightSpec Uniform(double lo, double hi);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  double mean() const { return mean_; }
  double second_moment() const { return second_moment_; }
  std::optional<double> support_bound() const { return support_bound_; }
  // eps with E exp(eps W) < infinity; +infinity for bounded support.
  std::optional<double> exp_moment_radius() const;

  // Atoms of a constant or finite-discrete law; empty for continuous.
  const std::vector<WeightAtom>& atoms() const { return atoms_; }
  const ContinuousLaw* continuous() const {
    return law_ ? &*law_ : nullptr;
  }

  // E f(W). Exact for atomic laws; Gauss-Legendre panels for continuous
  // laws, with tail panels appended until they stop contributing. Throws
  // AssumptionError when the integral is not finite.
  double Expect(const std::function<double(double)>& f) const;

  // Throws UnsupportedError for a continuous law without a sampler.
  double Sample(Rng& rng) const;
  bool CanSample() const;

 private:
  WeightSpec() = default;
  void CacheMoments();

  Kind kind_ = Kind::kConstant;
  std::string label_;
  std::vector<WeightAtom> atoms_;
  std::vector<double> cumulative_;
  std::optional<ContinuousLaw> law_;
  double mean_ = 0.0;
  double second_moment_ = 0.0;
  std::optional<double> support_bound_;
};

// n i.i.d. draws of W.
std::vector<double> sample_weights(const WeightSpec& spec, std::int64_t n,
                                   Rng& rng);

}  // namespace rdg

#endif  // RDG_WEIGHTS_H_
