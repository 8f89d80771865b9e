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

#ifndef RDG_COMPONENTS_H_
#define RDG_COMPONENTS_H_

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rdg/graph.h"
#include "rdg/rng.h"

namespace rdg {

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  VertexId Find(VertexId x);
  // Returns false if a and b were already joined.
  bool Unite(VertexId a, VertexId b);
  std::int64_t SizeOf(VertexId x) { return size_[Find(x)]; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::int64_t> size_;
};

struct ComponentSummary {
  std::vector<std::int64_t> sizes;  // descending
  std::int64_t largest = 0;
  std::int64_t count = 0;
};

// Exact component decomposition by union-find.
ComponentSummary largest_component(const Graph& g);

struct ExplorationStep {
  std::int64_t i = 0;
  std::int64_t active = 0;     // |S_i|
  std::int64_t activated = 0;  // X_i
  VertexId chosen = 0;         // v_i
  // (ring r, X_{i,r}) for rings with X_{i,r} > 0; filled only on request.
  std::vector<std::pair<int, std::int64_t>> per_ring;
};

struct ExplorationTrace {
  VertexId start = 0;
  std::vector<ExplorationStep> steps;
  std::int64_t stopping_time = 0;  // T
  bool rings_recorded = false;
};

struct ExplorationOptions {
  bool record_rings = false;
};

// Runs the active/saturated/neutral exploration from `start`: S_0 = {start};
// at step i an active vertex v_i is chosen uniformly at random, its neutral
// neighbours become active (X_i of them) and v_i becomes saturated, so
// |S_i| = |S_{i-1}| + X_i - 1. Stops at the first T with |S_T| = 0.
ExplorationTrace explore_component(const Graph& g, VertexId start, Rng& rng,
                                   ExplorationOptions options = {});

// Explores from the lowest-index unexplored vertex until every vertex is
// covered; one trace per component.
std::vector<ExplorationTrace> component_decomposition(
    const Graph& g, Rng& rng, ExplorationOptions options = {});

// One JSON object per line: {"i":..,"S":..,"X":..,"v":[u1,u2]} plus
// "rings":[[r,X_r],...] when per-ring counts were recorded.
void WriteTraceJsonLines(const Graph& g, const ExplorationTrace& trace,
                         std::ostream& os);

}  // namespace rdg

#endif  // RDG_COMPONENTS_H_
