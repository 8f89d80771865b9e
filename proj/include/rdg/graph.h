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

#ifndef RDG_GRAPH_H_
#define RDG_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "rdg/geometry.h"

namespace rdg {

using Edge = std::pair<VertexId, VertexId>;

// Immutable undirected graph on the N^2 torus vertices, stored as sorted
// CSR adjacency with a weight per vertex.
class Graph {
 public:
  // Throws std::invalid_argument on self-loops, duplicate edges, endpoints
  // out of range, or a weight vector of the wrong length.
  Graph(TorusConfig torus, std::vector<double> weights, std::vector<Edge> edges);

  const TorusConfig& torus() const { return torus_; }
  std::int64_t num_vertices() const { return torus_.num_vertices(); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size() / 2); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::int64_t degree(VertexId v) const {
    return static_cast<std::int64_t>(offsets_[v + 1] - offsets_[v]);
  }
  double weight(VertexId v) const { return weights_[v]; }
  const std::vector<double>& weights() const { return weights_; }

  bool HasEdge(VertexId a, VertexId b) const;
  // Each edge once as (a, b) with a < b, in increasing order.
  std::vector<Edge> Edges() const;

 private:
  TorusConfig torus_;
  std::vector<double> weights_;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adj_;
};

// Edge list, one line "u1 u2 v1 v2" per edge (a < b), in torus coordinates.
void WriteEdgeList(const Graph& g, std::ostream& os);
// Weights, one line "u1 u2 w" per vertex in index order.
void WriteWeights(const Graph& g, std::ostream& os);

}  // namespace rdg

#endif  // RDG_GRAPH_H_
