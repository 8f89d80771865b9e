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

#include "rdg/stats.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "rdg/rng.h"

namespace rdg {
namespace {

TEST(SummarizeTest, Examples) {
  const std::vector<double> xs = {1.0, 2.0, 3.0};
  const SampleSummary s = Summarize(xs);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.std, 1.0);
  EXPECT_NEAR(s.sem, 1.0 / std::sqrt(3.0), 1e-15);
  const SampleSummary one = Summarize(std::vector<double>{4.0});
  EXPECT_EQ(one.mean, 4.0);
  EXPECT_EQ(one.std, 0.0);
}

TEST(KolmogorovTest, KnownValues) {
  EXPECT_NEAR(KolmogorovSurvival(1.0), 0.26999967167735456, 1e-12);
  EXPECT_NEAR(KolmogorovSurvival(0.5), 0.9639452436648751, 1e-12);
  EXPECT_NEAR(KolmogorovSurvival(1.36), 0.04948, 1e-4);
  EXPECT_EQ(KolmogorovSurvival(0.0), 1.0);
}

TEST(KsTwoSampleTest, SeparatedAndIdentical) {
  const KsResult apart = KsTwoSample({1, 2, 3}, {4, 5, 6});
  EXPECT_DOUBLE_EQ(apart.statistic, 1.0);
  const KsResult same = KsTwoSample({1, 2, 2, 3}, {1, 2, 2, 3});
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_EQ(same.p_value, 1.0);
}

TEST(KsTwoSampleTest, DetectsShift) {
  Rng rng(1);
  std::vector<double> a, b, c;
  for (int i = 0; i < 2000; ++i) {
    a.push_back(Uniform01(rng));
    b.push_back(Uniform01(rng) + 0.2);
    c.push_back(Uniform01(rng));
  }
  EXPECT_LT(KsTwoSample(a, b).p_value, 1e-6);
  EXPECT_GT(KsTwoSample(a, c).p_value, 0.01);
}

}  // namespace
}  // namespace rdg
