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

#include <cmath>
#include <cstdlib>
#include <string>

#include "rdg/error.h"

namespace rdg {
namespace {

void CheckRing(int r, const TorusConfig& cfg) {
  if (r < 1 || r > cfg.side()) {
    throw DomainError("ring index " + std::to_string(r) +
                      " outside [1, " + std::to_string(cfg.side()) + "]");
  }
}

double FoldedUnit(double a) {
  a = std::fabs(a);
  return a <= 0.5 ? a : 1.0 - a;
}

}  // namespace

TorusConfig::TorusConfig(int n) : n_(n), max_dist_(n % 2 == 0 ? n : n - 1) {
  if (n <= 1 || n > 65535) {
    throw DomainError("torus side must satisfy 1 < N <= 65535, got " +
                      std::to_string(n));
  }
}

Vertex TorusConfig::Wrap(int u1, int u2) const {
  auto wrap = [this](int x) { return ((x - 1) % n_ + n_) % n_ + 1; };
  return {wrap(u1), wrap(u2)};
}

bool TorusConfig::Contains(const Vertex& v) const {
  return v.u1 >= 1 && v.u1 <= n_ && v.u2 >= 1 && v.u2 <= n_;
}

ContinuousPoint TorusConfig::Rescale(const Vertex& v) const {
  return {static_cast<double>(v.u1 % n_) / n_,
          static_cast<double>(v.u2 % n_) / n_};
}

int FoldedDistance(int i, int n) {
  // i is a coordinate difference reduced into {0, ..., N-1}; for even N the
  // value N/2 falls in the first branch, and i = N never occurs, so no
  // extension of d_N beyond i < N is needed.
  return 2 * i <= n ? i : n - i;
}

int torus_distance(const Vertex& u, const Vertex& v, const TorusConfig& cfg) {
  const int n = cfg.side();
  const int a = std::abs(u.u1 - v.u1) % n;
  const int b = std::abs(u.u2 - v.u2) % n;
  return FoldedDistance(a, n) + FoldedDistance(b, n);
}

std::int64_t ring_size(int r, const TorusConfig& cfg) {
  CheckRing(r, cfg);
  const std::int64_t n = cfg.side();
  if (n % 2 == 1) {
    return r <= n / 2 ? 4 * r : 4 * (n - r);
  }
  if (2 * r < n) return 4 * r;
  if (2 * r == n) return 2 * (n - 1);
  if (r < n) return 4 * (n - r);
  return 1;
}

std::vector<Vertex> ring_vertices(const Vertex& u, int r,
                                  const TorusConfig& cfg) {
  CheckRing(r, cfg);
  const int n = cfg.side();
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(ring_size(r, cfg)));
  for (int a = 0; a < n; ++a) {
    const int rest = r - FoldedDistance(a, n);
    if (rest < 0 || 2 * rest > n) continue;
    out.push_back(cfg.Wrap(u.u1 + a, u.u2 + rest));
    if (rest != 0 && 2 * rest != n) {
      out.push_back(cfg.Wrap(u.u1 + a, u.u2 - rest));
    }
  }
  return out;
}

double continuous_rho(const ContinuousPoint& p, const ContinuousPoint& q) {
  return FoldedUnit(p.x1 - q.x1) + FoldedUnit(p.x2 - q.x2);
}

double kernel(const ContinuousPoint& p, double wp, const ContinuousPoint& q,
              double wq) {
  const double rho = continuous_rho(p, q);
  if (rho == 0.0) {
    throw SingularityError("kernel is undefined on the diagonal");
  }
  return wp * wq / rho;
}

}  // namespace rdg
