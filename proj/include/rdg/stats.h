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

#ifndef RDG_STATS_H_
#define RDG_STATS_H_

#include <span>
#include <vector>

namespace rdg {

struct SampleSummary {
  double mean = 0.0;
  double std = 0.0;     // n - 1 denominator; 0 for n < 2
  double sem = 0.0;     // standard error of the mean, std / sqrt(n)
};

SampleSummary Summarize(std::span<const double> xs);

// Kolmogorov survival function P(K > x) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 x^2}.
double KolmogorovSurvival(double x);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value and the
// usual small-sample correction (sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) D. Ties
// are handled by stepping over equal values together, which makes the test
// conservative for discrete data.
KsResult KsTwoSample(std::vector<double> a, std::vector<double> b);

}  // namespace rdg

#endif  // RDG_STATS_H_
