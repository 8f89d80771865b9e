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

#ifndef RDG_BRANCHING_H_
#define RDG_BRANCHING_H_

#include <cstdint>
#include <functional>

#include "rdg/rng.h"
#include "rdg/weights.h"

namespace rdg {

// Total progeny of a simulated tree, or Exceeded once more than `cap`
// individuals have been born.
struct Progeny {
  std::int64_t total = 0;
  bool exceeded = false;

  // Exceeded trees sort above every finite total.
  std::int64_t Ranked(std::int64_t cap) const { return exceeded ? cap + 1 : total; }
};

// P{T = j} for Poisson(lambda') offspring: e^{-lambda' j} (lambda' j)^{j-1} / j!.
double borel_pmf(double lambda_prime, std::int64_t j);

// P{T >= k} = sum_{j >= k} borel_pmf(lambda', j). Throws RegimeError unless
// 0 < lambda' < 1, DomainError unless k >= 1.
double borel_tail(double lambda_prime, std::int64_t k);

// (1 / (sqrt(2 pi) lambda')) k^{-3/2} e^{-alpha k}, alpha = lambda' - 1 - log lambda'.
double BorelAsymptotic(double lambda_prime, std::int64_t k);

// Generation-by-generation Poisson(lambda') Galton-Watson tree.
Progeny simulate_poisson_gw(double lambda_prime, std::int64_t cap, Rng& rng);

// Size-biased law mu_{W~}(dy) = y mu_W(dy) / E W.
struct SizeBiasedSpec {
  WeightSpec base;
  WeightSpec tilde;
};

// Throws DegenerateError when E W = 0 and UnsupportedError when a
// continuous law can be neither reweighted nor sampled.
SizeBiasedSpec size_biased(const WeightSpec& w);

// Multi-type process: a type-x individual has Poisson(lambda x E W) children
// whose types are i.i.d. W~. Returns the total progeny from a root of type x.
Progeny simulate_B1(double x, double lambda, const SizeBiasedSpec& w,
                    std::int64_t cap, Rng& rng);
// Same, root type drawn from W~.
Progeny simulate_B1_size_biased_root(double lambda, const SizeBiasedSpec& w,
                                     std::int64_t cap, Rng& rng);

// Offspring count of one B2 individual: Poisson(W~ lambda E W), fresh W~.
std::int64_t b2_offspring(double lambda, const SizeBiasedSpec& w, Rng& rng);

// Single-type process whose offspring count is Poisson(W~ lambda E W), with
// a fresh W~ for each individual.
Progeny simulate_B2(double lambda, const SizeBiasedSpec& w, std::int64_t cap,
                    Rng& rng);

// Exact total variation distance between Bin(n, lambda/n) and Po(lambda).
// Throws DomainError unless 0 <= lambda <= n and n >= 1.
double binomial_poisson_tv(std::int64_t n, double lambda);

}  // namespace rdg

#endif  // RDG_BRANCHING_H_
