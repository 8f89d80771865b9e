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

#ifndef RDG_GEOMETRY_H_
#define RDG_GEOMETRY_H_

#include <cstdint>
#include <vector>

namespace rdg {

using VertexId = std::uint32_t;

// A vertex of the discrete torus, coordinates in {1, ..., N}.
struct Vertex {
  int u1 = 1;
  int u2 = 1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// A point of the continuous torus [0,1)^2.
struct ContinuousPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

// Side length N of the torus {1..N}^2 with the folded L1 metric.
class TorusConfig {
 public:
  // Throws DomainError unless 1 < n <= 65535.
  explicit TorusConfig(int n);

  int side() const { return n_; }
  std::int64_t num_vertices() const {
    return static_cast<std::int64_t>(n_) * n_;
  }
  // Largest r with ring_size(r) > 0: N - 1 for odd N, N for even N.
  int max_distance() const { return max_dist_; }

  // Wraps arbitrary integer coordinates into {1..N}.
  Vertex Wrap(int u1, int u2) const;
  bool Contains(const Vertex& v) const;

  // Row-major index in [0, N^2).
  VertexId Index(const Vertex& v) const {
    return static_cast<VertexId>((v.u1 - 1) * n_ + (v.u2 - 1));
  }
  Vertex At(VertexId id) const {
    return {static_cast<int>(id / n_) + 1, static_cast<int>(id % n_) + 1};
  }

  // Rescaled position ((u1 mod N)/N, (u2 mod N)/N) on [0,1)^2.
  ContinuousPoint Rescale(const Vertex& v) const;

  friend bool operator==(const TorusConfig& a, const TorusConfig& b) {
    return a.n_ == b.n_;
  }

 private:
  int n_;
  int max_dist_;
};

// One-dimensional folded distance d_N(i) for i in {0, ..., N-1}.
int FoldedDistance(int i, int n);

// d(u,v) = d_N(|u1-v1|) + d_N(|u2-v2|).
int torus_distance(const Vertex& u, const Vertex& v, const TorusConfig& cfg);

// Number of vertices at distance exactly r from any fixed vertex, from the
// closed-form parity formulas. Rings past max_distance() are empty rather
// than errors. Throws DomainError unless 1 <= r <= N.
std::int64_t ring_size(int r, const TorusConfig& cfg);

// All vertices at distance exactly r from u. Throws DomainError unless
// 1 <= r <= N.
std::vector<Vertex> ring_vertices(const Vertex& u, int r,
                                  const TorusConfig& cfg);

// rho(p,q) = rho1(|p1-q1|) + rho1(|p2-q2|), rho1(a) = min(a, 1-a).
double continuous_rho(const ContinuousPoint& p, const ContinuousPoint& q);

// kappa((p,wp),(q,wq)) = wp * wq / rho(p,q). Throws SingularityError when
// rho(p,q) == 0.
double kernel(const ContinuousPoint& p, double wp, const ContinuousPoint& q,
              double wq);

}  // namespace rdg

#endif  // RDG_GEOMETRY_H_
