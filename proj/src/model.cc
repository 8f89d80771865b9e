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

#include "rdg/model.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "rdg/error.h"
#include "rdg/rng.h"

namespace rdg {
namespace {

double MaxWeight(const std::vector<double>& weights) {
  double b = 0.0;
  for (double w : weights) b = std::max(b, w);
  return b;
}

void CheckWeights(const ModelConfig& m, const std::vector<double>& weights) {
  if (weights.size() != static_cast<std::size_t>(m.torus.num_vertices())) {
    throw std::invalid_argument("weight vector length does not match N^2");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("realized weights must be finite and >= 0");
    }
  }
}

// Edges proposed from the vertices in [first, last).
void SampleRange(const ModelConfig& m, const HalfOffsetTable& table,
                 const std::vector<double>& weights, double bound,
                 VertexId first, VertexId last, std::vector<Edge>* out) {
  const int n = m.torus.side();
  const auto offsets = table.offsets();
  for (VertexId u = first; u < last; ++u) {
    const double wu = weights[u];
    if (wu == 0.0) continue;
    Rng rng = Substream(m.seed, StreamDomain::kEdges, u);
    for (const HalfOffsetTable::Block& block : table.blocks()) {
      const double proposal =
          PairProbability(m.c, n, block.min_ring, bound, bound);
      if (proposal <= 0.0) continue;
      const double log_reject = proposal < 1.0 ? std::log1p(-proposal) : 0.0;
      std::size_t pos = block.begin;
      for (;;) {
        if (proposal < 1.0) {
          const double skip = std::floor(std::log(UniformOpen0(rng)) / log_reject);
          if (skip >= static_cast<double>(block.end - pos)) break;
          pos += static_cast<std::size_t>(skip);
        }
        if (pos >= block.end) break;
        const HalfOffsetTable::Offset& o = offsets[pos++];
        const VertexId v = table.Apply(u, o);
        const double p = PairProbability(m.c, n, o.ring, wu, weights[v]);
        // Thinning draw is taken before the self-inverse check so that the
        // stream layout does not depend on which endpoint keeps the pair.
        const bool accept = p >= proposal || Uniform01(rng) * proposal < p;
        // Pairs at a self-inverse offset are proposed from both endpoints;
        // only the proposal from the smaller index counts.
        if (o.self_inverse && v < u) continue;
        if (accept) out->emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  }
}

}  // namespace

void Validate(const ModelConfig& m) {
  if (!(m.c >= 0.0) || !std::isfinite(m.c)) {
    throw std::invalid_argument("edge intensity c must be finite and >= 0");
  }
}

double edge_probability(const Vertex& u, const Vertex& v, double wu, double wv,
                        const ModelConfig& m) {
  const int d = torus_distance(u, v, m.torus);
  if (d == 0) throw DomainError("edge probability undefined for u == v");
  return PairProbability(m.c, m.torus.side(), d, wu, wv);
}

double lambda_of_c(double c) { return 4.0 * c * std::numbers::ln2; }

double c_of_lambda(double lambda) { return lambda / (4.0 * std::numbers::ln2); }

double lambda_N(double c, const TorusConfig& cfg) {
  const int n = cfg.side();
  double acc = 0.0;
  for (int r = 1; r <= n; ++r) {
    const std::int64_t size = ring_size(r, cfg);
    if (size == 0) continue;
    const double p = c / (static_cast<double>(n) * r);
    if (p >= 1.0) {
      throw ParameterError("p_" + std::to_string(r) + " = " + std::to_string(p) +
                           " >= 1; N is too small for this c");
    }
    acc -= static_cast<double>(size) * std::log1p(-p);
  }
  return acc;
}

HalfOffsetTable::HalfOffsetTable(const TorusConfig& torus)
    : n_(static_cast<VertexId>(torus.side())) {
  const int n = torus.side();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == 0 && b == 0) continue;
      const int na = (n - a) % n;
      const int nb = (n - b) % n;
      const bool self = (a == na && b == nb);
      if (!self && std::tie(a, b) > std::tie(na, nb)) continue;
      offsets_.push_back(
          {a, b, FoldedDistance(a, n) + FoldedDistance(b, n), self});
    }
  }
  std::sort(offsets_.begin(), offsets_.end(), [](const Offset& x, const Offset& y) {
    return std::tie(x.ring, x.da, x.db) < std::tie(y.ring, y.da, y.db);
  });
  std::size_t pos = 0;
  for (int lo = 1; pos < offsets_.size(); lo *= 2) {
    const std::size_t begin = pos;
    while (pos < offsets_.size() && offsets_[pos].ring < 2 * lo) ++pos;
    if (pos > begin) blocks_.push_back({begin, pos, offsets_[begin].ring});
  }
}

Graph sample_graph(const ModelConfig& m, int threads) {
  Validate(m);
  Rng rng = Substream(m.seed, StreamDomain::kWeights, 0);
  auto weights = sample_weights(m.weights, m.torus.num_vertices(), rng);
  return sample_graph_given_weights(m, std::move(weights), threads);
}

Graph sample_graph_given_weights(const ModelConfig& m,
                                 std::vector<double> weights, int threads) {
  Validate(m);
  CheckWeights(m, weights);
  const HalfOffsetTable table(m.torus);
  const double bound = MaxWeight(weights);
  const auto n = static_cast<VertexId>(m.torus.num_vertices());
  std::vector<Edge> edges;
  if (m.c > 0.0 && bound > 0.0) {
    const int workers = std::clamp<int>(threads, 1, 256);
    if (workers == 1) {
      SampleRange(m, table, weights, bound, 0, n, &edges);
    } else {
      std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      const VertexId chunk = (n + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        const VertexId first = std::min<VertexId>(n, chunk * t);
        const VertexId last = std::min<VertexId>(n, first + chunk);
        pool.emplace_back([&, t, first, last] {
          SampleRange(m, table, weights, bound, first, last, &parts[t]);
        });
      }
      for (auto& th : pool) th.join();
      for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
    }
  }
  return Graph(m.torus, std::move(weights), std::move(edges));
}

Graph sample_graph_reference(const ModelConfig& m, std::vector<double> weights) {
  Validate(m);
  CheckWeights(m, weights);
  const auto n = static_cast<VertexId>(m.torus.num_vertices());
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    Rng rng = Substream(m.seed, StreamDomain::kReference, a);
    for (VertexId b = a + 1; b < n; ++b) {
      const int r = torus_distance(m.torus.At(a), m.torus.At(b), m.torus);
      const double p = PairProbability(m.c, m.torus.side(), r, weights[a], weights[b]);
      if (Uniform01(rng) < p) edges.emplace_back(a, b);
    }
  }
  return Graph(m.torus, std::move(weights), std::move(edges));
}

Graph build_graph_via_offsets(const ModelConfig& m, std::vector<double> weights,
                              const PairOracle& oracle) {
  Validate(m);
  CheckWeights(m, weights);
  const HalfOffsetTable table(m.torus);
  const auto n = static_cast<VertexId>(m.torus.num_vertices());
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (const HalfOffsetTable::Offset& o : table.offsets()) {
      const VertexId v = table.Apply(u, o);
      if (o.self_inverse && v < u) continue;
      const VertexId a = std::min(u, v);
      const VertexId b = std::max(u, v);
      const double p =
          PairProbability(m.c, m.torus.side(), o.ring, weights[a], weights[b]);
      if (oracle(a, b, p)) edges.emplace_back(a, b);
    }
  }
  return Graph(m.torus, std::move(weights), std::move(edges));
}

Graph build_graph_via_pairs(const ModelConfig& m, std::vector<double> weights,
                            const PairOracle& oracle) {
  Validate(m);
  CheckWeights(m, weights);
  const auto n = static_cast<VertexId>(m.torus.num_vertices());
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const int r = torus_distance(m.torus.At(a), m.torus.At(b), m.torus);
      const double p =
          PairProbability(m.c, m.torus.side(), r, weights[a], weights[b]);
      if (oracle(a, b, p)) edges.emplace_back(a, b);
    }
  }
  return Graph(m.torus, std::move(weights), std::move(edges));
}

}  // namespace rdg
