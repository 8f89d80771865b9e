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

#include "rdg/branching.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <boost/random/binomial_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>

#include "rdg/error.h"

namespace rdg {
namespace {

constexpr std::int64_t kMaxTailTerms = 100'000'000;

void CheckCap(std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("progeny cap must be >= 1");
}

std::int64_t PoissonDraw(Rng& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  boost::random::poisson_distribution<std::int64_t, double> dist(mean);
  return dist(rng);
}

std::int64_t BinomialDraw(Rng& rng, std::int64_t n, double p) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  boost::random::binomial_distribution<std::int64_t, double> dist(n, p);
  return dist(rng);
}

// Splits n individuals over the atoms of `law` by sequential binomials.
void Multinomial(Rng& rng, std::int64_t n, const std::vector<WeightAtom>& atoms,
                 std::vector<std::int64_t>* counts) {
  counts->assign(atoms.size(), 0);
  double mass = 1.0;
  for (std::size_t k = 0; k < atoms.size() && n > 0; ++k) {
    if (k + 1 == atoms.size()) {
      (*counts)[k] = n;
      break;
    }
    const double p = mass > 0.0 ? std::min(1.0, atoms[k].prob / mass) : 1.0;
    const std::int64_t take = BinomialDraw(rng, n, p);
    (*counts)[k] = take;
    n -= take;
    mass -= atoms[k].prob;
  }
}

// Sum over the generation of type(k) * count(k).
double TypeMass(const std::vector<WeightAtom>& atoms,
                const std::vector<std::int64_t>& counts) {
  double acc = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    acc += atoms[k].value * static_cast<double>(counts[k]);
  }
  return acc;
}

}  // namespace

double borel_pmf(double lambda_prime, std::int64_t j) {
  if (j < 1) return 0.0;
  if (lambda_prime == 0.0) return j == 1 ? 1.0 : 0.0;
  const double jd = static_cast<double>(j);
  return std::exp(-lambda_prime * jd + (jd - 1.0) * std::log(lambda_prime * jd) -
                  std::lgamma(jd + 1.0));
}

double borel_tail(double lambda_prime, std::int64_t k) {
  if (!(lambda_prime > 0.0 && lambda_prime < 1.0)) {
    throw RegimeError("Borel tail needs 0 < lambda' < 1, got " +
                      std::to_string(lambda_prime));
  }
  if (k < 1) throw DomainError("tail index must be >= 1");
  // The law has total mass 1 for lambda' < 1, so while the head is small
  // the complement is accurate in absolute terms; otherwise sum the tail.
  double head = 0.0;
  for (std::int64_t j = 1; j < k && head < 0.5; ++j) head += borel_pmf(lambda_prime, j);
  if (head < 0.5) return 1.0 - head;

  const double alpha = lambda_prime - 1.0 - std::log(lambda_prime);
  const double min_terms = 50.0 / alpha;
  double sum = 0.0;
  for (std::int64_t j = k; j < k + kMaxTailTerms; ++j) {
    const double term = borel_pmf(lambda_prime, j);
    sum += term;
    if (term < 1e-16 * sum && static_cast<double>(j - k) > min_terms) break;
  }
  return sum;
}

double BorelAsymptotic(double lambda_prime, std::int64_t k) {
  const double alpha = lambda_prime - 1.0 - std::log(lambda_prime);
  const double kd = static_cast<double>(k);
  return std::exp(-alpha * kd) /
         (std::sqrt(2.0 * std::numbers::pi) * lambda_prime * kd * std::sqrt(kd));
}

Progeny simulate_poisson_gw(double lambda_prime, std::int64_t cap, Rng& rng) {
  CheckCap(cap);
  Progeny out{1, false};
  std::int64_t frontier = 1;
  while (frontier > 0) {
    // The children of a whole generation are Poisson(lambda' * size).
    frontier = PoissonDraw(rng, lambda_prime * static_cast<double>(frontier));
    out.total += frontier;
    if (out.total > cap) return {cap + 1, true};
  }
  return out;
}

SizeBiasedSpec size_biased(const WeightSpec& w) {
  const double m = w.mean();
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DegenerateError("size-biasing needs 0 < E W < inf");
  }
  switch (w.kind()) {
    case WeightSpec::Kind::kConstant:
      return {w, w};
    case WeightSpec::Kind::kFiniteDiscrete: {
      std::vector<WeightAtom> atoms;
      for (const WeightAtom& a : w.atoms()) {
        if (a.value > 0.0) atoms.push_back({a.value, a.value * a.prob / m});
      }
      // Renormalize away rounding so the masses pass the 1e-12 check.
      double total = 0.0;
      for (const WeightAtom& a : atoms) total += a.prob;
      for (WeightAtom& a : atoms) a.prob /= total;
      return {w, WeightSpec::FiniteDiscrete(std::move(atoms))};
    }
    case WeightSpec::Kind::kContinuous:
      break;
  }
  const ContinuousLaw& base = *w.continuous();
  ContinuousLaw law;
  law.name = "size_biased(" + w.label() + ")";
  law.density = [density = base.density, m](double y) { return y * density(y) / m; };
  law.lower = base.lower;
  law.upper = base.upper;
  law.exp_moment_radius = base.exp_moment_radius;
  if (base.size_biased_sampler) {
    law.sampler = base.size_biased_sampler;
  } else if (std::isfinite(base.upper) && base.sampler) {
    // Accept a draw y of W with probability y / upper.
    law.sampler = [sampler = base.sampler, upper = base.upper](Rng& rng) {
      for (;;) {
        const double y = sampler(rng);
        if (Uniform01(rng) * upper < y) return y;
      }
    };
  }
  return {w, WeightSpec::Continuous(std::move(law))};
}

Progeny simulate_B1(double x, double lambda, const SizeBiasedSpec& w,
                    std::int64_t cap, Rng& rng) {
  CheckCap(cap);
  const double scale = lambda * w.base.mean();
  Progeny out{1, false};
  std::int64_t children = PoissonDraw(rng, scale * x);
  out.total += children;
  if (out.total > cap) return {cap + 1, true};

  if (w.tilde.kind() != WeightSpec::Kind::kContinuous) {
    const auto& atoms = w.tilde.atoms();
    std::vector<std::int64_t> counts;
    while (children > 0) {
      Multinomial(rng, children, atoms, &counts);
      children = PoissonDraw(rng, scale * TypeMass(atoms, counts));
      out.total += children;
      if (out.total > cap) return {cap + 1, true};
    }
    return out;
  }

  std::vector<double> pending;
  for (std::int64_t i = 0; i < children; ++i) pending.push_back(w.tilde.Sample(rng));
  while (!pending.empty()) {
    const double type = pending.back();
    pending.pop_back();
    const std::int64_t k = PoissonDraw(rng, scale * type);
    out.total += k;
    if (out.total > cap) return {cap + 1, true};
    for (std::int64_t i = 0; i < k; ++i) pending.push_back(w.tilde.Sample(rng));
  }
  return out;
}

Progeny simulate_B1_size_biased_root(double lambda, const SizeBiasedSpec& w,
                                     std::int64_t cap, Rng& rng) {
  const double root = w.tilde.Sample(rng);
  return simulate_B1(root, lambda, w, cap, rng);
}

std::int64_t b2_offspring(double lambda, const SizeBiasedSpec& w, Rng& rng) {
  return PoissonDraw(rng, lambda * w.base.mean() * w.tilde.Sample(rng));
}

Progeny simulate_B2(double lambda, const SizeBiasedSpec& w, std::int64_t cap,
                    Rng& rng) {
  CheckCap(cap);
  const double scale = lambda * w.base.mean();
  Progeny out{1, false};

  if (w.tilde.kind() != WeightSpec::Kind::kContinuous) {
    // Each member of a generation draws its own W~; only the per-atom counts
    // matter for the generation's total offspring.
    const auto& atoms = w.tilde.atoms();
    std::vector<std::int64_t> counts;
    std::int64_t generation = 1;
    while (generation > 0) {
      Multinomial(rng, generation, atoms, &counts);
      generation = PoissonDraw(rng, scale * TypeMass(atoms, counts));
      out.total += generation;
      if (out.total > cap) return {cap + 1, true};
    }
    return out;
  }

  std::int64_t pending = 1;
  while (pending > 0) {
    --pending;
    const std::int64_t k = b2_offspring(lambda, w, rng);
    out.total += k;
    if (out.total > cap) return {cap + 1, true};
    pending += k;
  }
  return out;
}

double binomial_poisson_tv(std::int64_t n, double lambda) {
  if (n < 1) throw DomainError("binomial size must be >= 1");
  if (!(lambda >= 0.0) || lambda > static_cast<double>(n)) {
    throw DomainError("need 0 <= lambda <= n");
  }
  if (lambda == 0.0) return 0.0;
  const boost::math::binomial_distribution<double> bin(static_cast<double>(n),
                                                       lambda / static_cast<double>(n));
  const boost::math::poisson_distribution<double> po(lambda);
  double acc = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    acc += std::fabs(boost::math::pdf(bin, kd) - boost::math::pdf(po, kd));
  }
  acc += boost::math::cdf(boost::math::complement(po, static_cast<double>(n)));
  return 0.5 * acc;
}

}  // namespace rdg
