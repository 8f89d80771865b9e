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

#ifndef RDG_MODEL_H_
#define RDG_MODEL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rdg/geometry.h"
#include "rdg/graph.h"
#include "rdg/weights.h"

namespace rdg {

struct ModelConfig {
  TorusConfig torus;
  double c = 0.0;
  WeightSpec weights = WeightSpec::Constant(1.0);
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument unless c is finite and >= 0. c = 0 is
// accepted and yields the empty graph.
void Validate(const ModelConfig& m);

// min{c * wu * wv / (N * d(u,v)), 1}. Throws DomainError when u == v.
double edge_probability(const Vertex& u, const Vertex& v, double wu, double wv,
                        const ModelConfig& m);

// Same, from a known distance r >= 1.
inline double PairProbability(double c, int n, int r, double wu, double wv) {
  const double p = c * wu * wv / (static_cast<double>(n) * r);
  return p < 1.0 ? p : 1.0;
}

// lambda = 4 c log 2 and its inverse.
double lambda_of_c(double c);
double c_of_lambda(double lambda);

// lambda_N = sum_r -N_r log(1 - p_r) with p_r = c / (N r). Throws
// ParameterError if some non-empty ring has p_r >= 1.
double lambda_N(double c, const TorusConfig& cfg);

// Offsets (da, db) in [0,N)^2 \ {(0,0)} keeping one representative of each
// pair {o, -o}, plus the self-inverse offsets o == -o (even N only). Sorted
// by ring and grouped into dyadic ring blocks [2^k, 2^(k+1)).
class HalfOffsetTable {
 public:
  struct Offset {
    int da;
    int db;
    int ring;
    bool self_inverse;
  };
  struct Block {
    std::size_t begin;
    std::size_t end;
    int min_ring;
  };

  explicit HalfOffsetTable(const TorusConfig& torus);

  std::span<const Offset> offsets() const { return offsets_; }
  std::span<const Block> blocks() const { return blocks_; }

  VertexId Apply(VertexId u, const Offset& o) const {
    const VertexId x = u / n_;
    const VertexId y = u % n_;
    return ((x + o.da) % n_) * n_ + (y + o.db) % n_;
  }

 private:
  VertexId n_;
  std::vector<Offset> offsets_;
  std::vector<Block> blocks_;
};

// Samples the weights from m.weights (stream kWeights of m.seed), then the
// edges. Throws UnsupportedError when the weight law has no sampler.
Graph sample_graph(const ModelConfig& m, int threads = 1);

// Fast exact sampler given realized weights. For every vertex u and dyadic
// ring block, candidates are proposed by geometric skipping with the block's
// largest probability min{c B^2 / (N r_min), 1}, B = max realized weight,
// and thinned to the exact pair probability. Each vertex draws from its own
// Philox stream, so the result does not depend on `threads`.
Graph sample_graph_given_weights(const ModelConfig& m,
                                 std::vector<double> weights, int threads = 1);

// O(N^4) per-pair Bernoulli sampler; reference for tests.
Graph sample_graph_reference(const ModelConfig& m, std::vector<double> weights);

// Decision for the unordered pair (a, b), a < b, with edge probability p.
using PairOracle = std::function<bool(VertexId a, VertexId b, double p)>;

// Builds a graph by asking `oracle` about every unordered pair exactly once,
// walking pairs the way the fast sampler does (half-offset table).
Graph build_graph_via_offsets(const ModelConfig& m, std::vector<double> weights,
                              const PairOracle& oracle);
// Same, walking pairs (a, b), a < b, in index order.
Graph build_graph_via_pairs(const ModelConfig& m, std::vector<double> weights,
                            const PairOracle& oracle);

}  // namespace rdg

#endif  // RDG_MODEL_H_
