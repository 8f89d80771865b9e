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

#include "rdg/graph.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rdg {

Graph::Graph(TorusConfig torus, std::vector<double> weights,
             std::vector<Edge> edges)
    : torus_(torus), weights_(std::move(weights)) {
  const auto n = static_cast<std::uint64_t>(torus_.num_vertices());
  if (weights_.size() != n) {
    throw std::invalid_argument("weight vector has " +
                                std::to_string(weights_.size()) +
                                " entries, expected " + std::to_string(n));
  }
  offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::uint64_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adj_.resize(offsets_[n]);
  std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    adj_[fill[a]++] = b;
    adj_[fill[b]++] = a;
  }
  for (std::uint64_t v = 0; v < n; ++v) {
    auto first = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
}

bool Graph::HasEdge(VertexId a, VertexId b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (VertexId a = 0; a < static_cast<VertexId>(num_vertices()); ++a) {
    for (VertexId b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

void WriteEdgeList(const Graph& g, std::ostream& os) {
  for (const auto& [a, b] : g.Edges()) {
    const Vertex u = g.torus().At(a);
    const Vertex v = g.torus().At(b);
    os << u.u1 << ' ' << u.u2 << ' ' << v.u1 << ' ' << v.u2 << '\n';
  }
}

void WriteWeights(const Graph& g, std::ostream& os) {
  const auto old = os.precision(17);
  for (VertexId id = 0; id < static_cast<VertexId>(g.num_vertices()); ++id) {
    const Vertex u = g.torus().At(id);
    os << u.u1 << ' ' << u.u2 << ' ' << g.weight(id) << '\n';
  }
  os.precision(old);
}

}  // namespace rdg
