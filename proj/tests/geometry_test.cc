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

#include "rdg/geometry.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "rdg/error.h"

namespace rdg {
namespace {

// Oracle: shortest wrap-around displacement per coordinate.
int BruteDistance(const Vertex& u, const Vertex& v, int n) {
  auto axis = [n](int a, int b) {
    int best = std::numeric_limits<int>::max();
    for (int k = -1; k <= 1; ++k) best = std::min(best, std::abs(a - b + k * n));
    return best;
  };
  return axis(u.u1, v.u1) + axis(u.u2, v.u2);
}

std::vector<Vertex> AllVertices(int n) {
  std::vector<Vertex> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) out.push_back({a, b});
  }
  return out;
}

TEST(TorusDistanceTest, Examples) {
  const TorusConfig cfg(10);
  EXPECT_EQ(torus_distance({1, 1}, {1, 1}, cfg), 0);
  EXPECT_EQ(torus_distance({1, 1}, {2, 3}, cfg), 3);
  EXPECT_EQ(torus_distance({1, 1}, {10, 1}, cfg), 1);
  EXPECT_EQ(BruteDistance({1, 1}, {10, 1}, 10), 1);
}

TEST(TorusDistanceTest, MatchesBruteForce) {
  for (int n = 2; n <= 13; ++n) {
    const TorusConfig cfg(n);
    for (const Vertex& u : AllVertices(n)) {
      for (const Vertex& v : AllVertices(n)) {
        ASSERT_EQ(torus_distance(u, v, cfg), BruteDistance(u, v, n)) << "N=" << n;
      }
    }
  }
}

TEST(TorusDistanceTest, IsAMetric) {
  for (int n = 2; n <= 12; ++n) {
    const TorusConfig cfg(n);
    const auto vs = AllVertices(n);
    const auto count = vs.size();
    std::vector<int> d(count * count);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) d[i * count + j] = torus_distance(vs[i], vs[j], cfg);
    }
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        ASSERT_EQ(d[i * count + j], d[j * count + i]);
        ASSERT_EQ(d[i * count + j] == 0, i == j);
        for (std::size_t k = 0; k < count; ++k) {
          ASSERT_LE(d[i * count + k], d[i * count + j] + d[j * count + k]);
        }
      }
    }
  }
}

TEST(TorusDistanceTest, ShiftInvariant) {
  for (int n : {5, 8}) {
    const TorusConfig cfg(n);
    for (const Vertex& u : AllVertices(n)) {
      for (const Vertex& v : AllVertices(n)) {
        for (const Vertex& s : AllVertices(n)) {
          ASSERT_EQ(torus_distance(cfg.Wrap(u.u1 + s.u1, u.u2 + s.u2),
                                   cfg.Wrap(v.u1 + s.u1, v.u2 + s.u2), cfg),
                    torus_distance(u, v, cfg));
        }
      }
    }
  }
}

TEST(RingSizeTest, Examples) {
  EXPECT_EQ(ring_size(2, TorusConfig(4)), 6);
  EXPECT_EQ(ring_size(4, TorusConfig(4)), 1);
  EXPECT_EQ(ring_size(2, TorusConfig(5)), 8);
  // Odd N: the ring at r = N is empty, not an error.
  EXPECT_EQ(ring_size(5, TorusConfig(5)), 0);
}

TEST(RingSizeTest, MatchesEnumerationAndSumsToAllOthers) {
  for (int n = 3; n <= 50; ++n) {
    const TorusConfig cfg(n);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(2 * n + 1), 0);
    for (const Vertex& v : AllVertices(n)) ++counts[BruteDistance({1, 1}, v, n)];
    std::int64_t total = 0;
    for (int r = 1; r <= n; ++r) {
      const std::int64_t size = ring_size(r, cfg);
      ASSERT_EQ(size, counts[r]) << "N=" << n << " r=" << r;
      ASSERT_GE(size, 0);
      ASSERT_LE(size, 4 * r);
      total += size;
    }
    EXPECT_EQ(total, cfg.num_vertices() - 1) << "N=" << n;
    EXPECT_GT(ring_size(cfg.max_distance(), cfg), 0);
    if (cfg.max_distance() < n) EXPECT_EQ(ring_size(cfg.max_distance() + 1, cfg), 0);
  }
}

TEST(RingSizeTest, RejectsOutOfRange) {
  const TorusConfig cfg(6);
  EXPECT_THROW(ring_size(0, cfg), DomainError);
  EXPECT_THROW(ring_size(7, cfg), DomainError);
  EXPECT_THROW(ring_vertices({1, 1}, 0, cfg), DomainError);
  EXPECT_THROW(ring_vertices({1, 1}, 7, cfg), DomainError);
}

TEST(RingVerticesTest, Examples) {
  auto r1 = ring_vertices({1, 1}, 1, TorusConfig(5));
  std::sort(r1.begin(), r1.end());
  const std::vector<Vertex> expected = {{1, 2}, {1, 5}, {2, 1}, {5, 1}};
  EXPECT_EQ(r1, expected);
  EXPECT_EQ(ring_vertices({1, 1}, 4, TorusConfig(4)), std::vector<Vertex>({{3, 3}}));
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(ring_vertices({2, 3}, 1, TorusConfig(n)).size(), 4u);
  }
}

TEST(RingVerticesTest, MatchesBruteForce) {
  for (int n = 2; n <= 12; ++n) {
    const TorusConfig cfg(n);
    for (const Vertex& u : {Vertex{1, 1}, Vertex{2, n}, Vertex{n, n / 2 + 1}}) {
      for (int r = 1; r <= n; ++r) {
        auto got = ring_vertices(u, r, cfg);
        std::set<Vertex> unique(got.begin(), got.end());
        ASSERT_EQ(unique.size(), got.size()) << "duplicates at N=" << n << " r=" << r;
        std::set<Vertex> want;
        for (const Vertex& v : AllVertices(n)) {
          if (BruteDistance(u, v, n) == r) want.insert(v);
        }
        ASSERT_EQ(unique, want) << "N=" << n << " r=" << r;
        ASSERT_EQ(static_cast<std::int64_t>(got.size()), ring_size(r, cfg));
      }
    }
  }
}

TEST(TorusConfigTest, IndexRoundTripAndErrors) {
  const TorusConfig cfg(7);
  for (VertexId id = 0; id < 49; ++id) EXPECT_EQ(cfg.Index(cfg.At(id)), id);
  EXPECT_EQ(cfg.Wrap(0, 8), (Vertex{7, 1}));
  EXPECT_EQ(cfg.max_distance(), 6);
  EXPECT_EQ(TorusConfig(8).max_distance(), 8);
  EXPECT_THROW(TorusConfig(1), DomainError);
  EXPECT_THROW(TorusConfig(0), DomainError);
}

TEST(ContinuousRhoTest, Examples) {
  EXPECT_DOUBLE_EQ(continuous_rho({0, 0}, {0.5, 0.5}), 1.0);
  EXPECT_NEAR(continuous_rho({0, 0}, {0.9, 0}), 0.1, 1e-15);
  EXPECT_EQ(continuous_rho({0.3, 0.7}, {0.3, 0.7}), 0.0);
}

TEST(KernelTest, Examples) {
  EXPECT_DOUBLE_EQ(kernel({0, 0}, 1.0, {0.5, 0.5}, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(kernel({0, 0}, 2.0, {0.25, 0}, 3.0), 24.0);
  EXPECT_THROW(kernel({0.1, 0.2}, 1.0, {0.1, 0.2}, 1.0), SingularityError);
}

TEST(KernelTest, RescaledRhoIsDistanceOverN) {
  for (int n = 2; n <= 12; ++n) {
    const TorusConfig cfg(n);
    for (const Vertex& u : AllVertices(n)) {
      for (const Vertex& v : AllVertices(n)) {
        const int d = torus_distance(u, v, cfg);
        const double rho = continuous_rho(cfg.Rescale(u), cfg.Rescale(v));
        ASSERT_NEAR(rho * n, d, 4 * std::numeric_limits<double>::epsilon() * std::max(d, 1));
        if (d > 0) {
          ASSERT_NEAR(kernel(cfg.Rescale(u), 1.0, cfg.Rescale(v), 1.0), static_cast<double>(n) / d,
                      1e-14 * n);
        }
      }
    }
  }
}

}  // namespace
}  // namespace rdg
