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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "rdg/error.h"
#include "rdg/stats.h"
#include "rdg/theory.h"

namespace rdg {
namespace {

WeightSpec OneTwo() { return WeightSpec::FiniteDiscrete({{1.0, 0.5}, {2.0, 0.5}}); }

// Independent TV oracle: direct summation of log-space pmfs in long double.
double TvOracle(std::int64_t n, double lambda) {
  long double diff = 0.0L, po_head = 0.0L;
  const long double p = lambda / n;
  for (std::int64_t k = 0; k <= n; ++k) {
    const long double log_binom = std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) -
                                  std::lgamma(n - k + 1.0L) + k * std::log(p) +
                                  (n - k) * std::log1p(-p);
    const long double log_po = -lambda + k * std::log(static_cast<long double>(lambda)) -
                               std::lgamma(k + 1.0L);
    const long double b = (p == 1.0L) ? (k == n ? 1.0L : 0.0L) : std::exp(log_binom);
    const long double q = std::exp(log_po);
    diff += std::fabs(b - q);
    po_head += q;
  }
  return static_cast<double>(0.5L * (diff + (1.0L - po_head)));
}

TEST(BorelTest, SmallValues) {
  for (double lp : {0.2, 0.5, 0.9}) {
    EXPECT_DOUBLE_EQ(borel_tail(lp, 1), 1.0);
    EXPECT_NEAR(borel_tail(lp, 2), -std::expm1(-lp), 1e-14);
    EXPECT_NEAR(borel_pmf(lp, 1), std::exp(-lp), 1e-15);
    EXPECT_NEAR(borel_pmf(lp, 3), std::exp(-3 * lp) * 9 * lp * lp / 6, 1e-15);
  }
  EXPECT_THROW(borel_tail(1.0, 3), RegimeError);
  EXPECT_THROW(borel_tail(0.0, 3), RegimeError);
  EXPECT_THROW(borel_tail(0.5, 0), DomainError);
}

TEST(BorelTest, TailIsMonotoneAndConsistent) {
  for (double lp : {0.3, 0.5, 0.8}) {
    double previous = 1.0;
    for (std::int64_t k = 2; k <= 200; ++k) {
      const double t = borel_tail(lp, k);
      ASSERT_LT(t, previous);
      ASSERT_NEAR(previous - t, borel_pmf(lp, k - 1), 1e-13);
      previous = t;
    }
  }
}

TEST(BorelTest, AsymptoticShape) {
  for (double lp : {0.3, 0.5, 0.8}) {
    for (std::int64_t k = 30; k <= 60; ++k) {
      const double ratio = borel_pmf(lp, k) / BorelAsymptotic(lp, k);
      EXPECT_GE(ratio, 0.5);
      EXPECT_LE(ratio, 2.0);
      EXPECT_GE(borel_tail(lp, k), BorelAsymptotic(lp, k));
    }
  }
}

TEST(PoissonGwTest, MatchesBorelTail) {
  const double lp = 0.5;
  const int runs = 200000;
  Rng rng(1);
  std::vector<int> at_least(11, 0);
  for (int r = 0; r < runs; ++r) {
    const Progeny p = simulate_poisson_gw(lp, 1000000, rng);
    ASSERT_FALSE(p.exceeded);
    for (int k = 1; k <= 10; ++k) at_least[k] += p.total >= k;
  }
  for (int k = 1; k <= 10; ++k) {
    const double tail = borel_tail(lp, k);
    const double emp = static_cast<double>(at_least[k]) / runs;
    EXPECT_NEAR(emp, tail, 4 * std::sqrt(tail * (1 - tail) / runs) + 1e-12) << k;
  }
}

TEST(PoissonGwTest, SupercriticalSurvival) {
  const int runs = 20000;
  Rng rng(2);
  int exceeded = 0;
  for (int r = 0; r < runs; ++r) exceeded += simulate_poisson_gw(2.0, 1000, rng).exceeded;
  const double beta = 0.796812130020020046;
  EXPECT_NEAR(static_cast<double>(exceeded) / runs, beta, 4 * std::sqrt(beta * (1 - beta) / runs));
  Rng other(3);
  const Progeny p = simulate_poisson_gw(5.0, 10, other);
  if (p.exceeded) EXPECT_EQ(p.total, 11);
  EXPECT_EQ(p.Ranked(10), p.exceeded ? 11 : p.total);
}

TEST(SizeBiasedTest, Discrete) {
  const SizeBiasedSpec sb = size_biased(OneTwo());
  ASSERT_EQ(sb.tilde.atoms().size(), 2u);
  EXPECT_NEAR(sb.tilde.atoms()[0].prob, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(sb.tilde.atoms()[1].prob, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(sb.tilde.mean(), 5.0 / 3.0, 1e-15);
  EXPECT_THROW(size_biased(WeightSpec::Constant(0.0)), DegenerateError);
}

TEST(SizeBiasedTest, Continuous) {
  for (const WeightSpec& w : {WeightSpec::Exponential(1.0), WeightSpec::Uniform(1.0, 3.0),
                              WeightSpec::TruncatedExponential(1.0, 4.0)}) {
    const SizeBiasedSpec sb = size_biased(w);
    const double m = w.mean();
    EXPECT_NEAR(sb.tilde.Expect([m](double y) { return m / y; }), 1.0, 1e-9) << w.label();
    EXPECT_NEAR(sb.tilde.mean(), w.second_moment() / m, 1e-9) << w.label();
    Rng rng(4);
    double acc = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) acc += sb.tilde.Sample(rng);
    const double sd = std::sqrt((sb.tilde.second_moment() - sb.tilde.mean() * sb.tilde.mean()) / n);
    EXPECT_NEAR(acc / n, sb.tilde.mean(), 4 * sd) << w.label();
  }
}

TEST(B1Test, ConstantWeightsIsBorel) {
  const SizeBiasedSpec sb = size_biased(WeightSpec::Constant(1.0));
  Rng rng(5);
  const int runs = 100000;
  double acc = 0.0, acc2 = 0.0;
  for (int r = 0; r < runs; ++r) {
    const Progeny p = simulate_B1(1.0, 0.5, sb, 1000000, rng);
    ASSERT_FALSE(p.exceeded);
    acc += p.total;
    acc2 += double(p.total) * p.total;
  }
  // Borel(0.5): mean 1 / (1 - 0.5) = 2.
  const double mean = acc / runs;
  const double sd = std::sqrt((acc2 / runs - mean * mean) / runs);
  EXPECT_NEAR(mean, 2.0, 4 * sd);
}

TEST(B1Test, MeanProgenyForTypedRoot) {
  // Subcritical: E T(x) = 1 + lambda x M E T(W~), E T(W~) = 1 / (1 - lambda E W^2).
  const double lambda = 0.2;
  const SizeBiasedSpec sb = size_biased(OneTwo());
  const double m = 1.5;
  const double tilde_mean_total = 1.0 / (1.0 - lambda * 2.5);
  Rng rng(6);
  for (double x : {1.0, 2.0}) {
    const int runs = 100000;
    double acc = 0.0, acc2 = 0.0;
    for (int r = 0; r < runs; ++r) {
      const Progeny p = simulate_B1(x, lambda, sb, 1000000, rng);
      acc += p.total;
      acc2 += double(p.total) * p.total;
    }
    const double mean = acc / runs;
    const double sd = std::sqrt((acc2 / runs - mean * mean) / runs);
    EXPECT_NEAR(mean, 1.0 + lambda * x * m * tilde_mean_total, 4 * sd) << x;
  }
}

TEST(B2Test, OffspringMean) {
  const SizeBiasedSpec sb = size_biased(OneTwo());
  Rng rng(7);
  const int n = 200000;
  double acc = 0.0, acc2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(b2_offspring(0.4, sb, rng));
    acc += k;
    acc2 += k * k;
  }
  const double mean = acc / n;
  const double sd = std::sqrt((acc2 / n - mean * mean) / n);
  EXPECT_NEAR(mean, 0.4 * 2.5, 4 * sd);
}

TEST(B2Test, SurvivalMatchesProfile) {
  const double lambda = 1.0;
  const SizeBiasedSpec sb = size_biased(OneTwo());
  const double survival = weighted_beta_profile(lambda, OneTwo()).b_star / 1.5;
  Rng rng(8);
  const int runs = 20000;
  int exceeded = 0;
  for (int r = 0; r < runs; ++r) exceeded += simulate_B2(lambda, sb, 2000, rng).exceeded;
  EXPECT_NEAR(static_cast<double>(exceeded) / runs, survival,
              4 * std::sqrt(survival * (1 - survival) / runs));
}

TEST(B2Test, SubcriticalNeverExceedsLargeCap) {
  const SizeBiasedSpec sb = size_biased(OneTwo());
  Rng rng(9);
  for (int r = 0; r < 20000; ++r) {
    ASSERT_FALSE(simulate_B2(0.2, sb, 1000000, rng).exceeded);
  }
}

TEST(SizeBiasedIdentityTest, B1FromTildeRootMatchesB2) {
  for (const WeightSpec& w : {OneTwo(), WeightSpec::TruncatedExponential(1.0, 4.0)}) {
    const SizeBiasedSpec sb = size_biased(w);
    const double lambda = 0.8 / w.second_moment();
    Rng rng1(10), rng2(11);
    std::vector<double> b1, b2;
    for (int i = 0; i < 20000; ++i) {
      b1.push_back(static_cast<double>(simulate_B1_size_biased_root(lambda, sb, 1000000, rng1).total));
      b2.push_back(static_cast<double>(simulate_B2(lambda, sb, 1000000, rng2).total));
    }
    EXPECT_GE(KsTwoSample(b1, b2).p_value, 0.01) << w.label();
  }
}

TEST(TvTest, Examples) {
  EXPECT_EQ(binomial_poisson_tv(10, 0.0), 0.0);
  EXPECT_NEAR(binomial_poisson_tv(1, 1.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_THROW(binomial_poisson_tv(5, 6.0), DomainError);
  EXPECT_THROW(binomial_poisson_tv(0, 0.0), DomainError);
}

TEST(TvTest, AgreesWithOracleAndBound) {
  for (std::int64_t n : {1, 2, 5, 10, 100, 1000}) {
    for (double lambda : {0.1, 0.5, 1.0, 2.0}) {
      if (lambda > n) continue;
      const double tv = binomial_poisson_tv(n, lambda);
      EXPECT_NEAR(tv, TvOracle(n, lambda), 1e-12) << n << " " << lambda;
      EXPECT_LE(tv, lambda * lambda / n + 1e-15);
      EXPECT_GE(tv, 0.0);
    }
  }
}

}  // namespace
}  // namespace rdg
