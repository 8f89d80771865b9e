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

#include "rdg/components.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>

#include "json.hpp"

namespace rdg {
namespace {

enum class State : std::uint8_t { kNeutral, kActive, kSaturated };

// Shared state so that a decomposition does not re-explore vertices.
class Explorer {
 public:
  explicit Explorer(const Graph& g)
      : g_(g), state_(static_cast<std::size_t>(g.num_vertices()), State::kNeutral) {}

  bool Explored(VertexId v) const { return state_[v] != State::kNeutral; }

  ExplorationTrace Run(VertexId start, Rng& rng, const ExplorationOptions& options) {
    ExplorationTrace trace;
    trace.start = start;
    trace.rings_recorded = options.record_rings;
    std::vector<VertexId> active = {start};
    state_[start] = State::kActive;
    std::map<int, std::int64_t> rings;
    for (std::int64_t i = 1; !active.empty(); ++i) {
      const auto pick = static_cast<std::size_t>(UniformIndex(rng, active.size()));
      const VertexId v = active[pick];
      active[pick] = active.back();
      active.pop_back();
      state_[v] = State::kSaturated;
      std::int64_t x = 0;
      rings.clear();
      for (VertexId w : g_.neighbors(v)) {
        if (state_[w] != State::kNeutral) continue;
        state_[w] = State::kActive;
        active.push_back(w);
        ++x;
        if (options.record_rings) {
          ++rings[torus_distance(g_.torus().At(v), g_.torus().At(w), g_.torus())];
        }
      }
      ExplorationStep step;
      step.i = i;
      step.active = static_cast<std::int64_t>(active.size());
      step.activated = x;
      step.chosen = v;
      step.per_ring.assign(rings.begin(), rings.end());
      trace.steps.push_back(std::move(step));
    }
    trace.stopping_time = static_cast<std::int64_t>(trace.steps.size());
    return trace;
  }

 private:
  const Graph& g_;
  std::vector<State> state_;
};

}  // namespace

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId UnionFind::Find(VertexId x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::Unite(VertexId a, VertexId b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

ComponentSummary largest_component(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  UnionFind uf(n);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b : g.neighbors(a)) {
      if (a < b) uf.Unite(a, b);
    }
  }
  ComponentSummary summary;
  for (VertexId v = 0; v < n; ++v) {
    if (uf.Find(v) == v) summary.sizes.push_back(uf.SizeOf(v));
  }
  std::sort(summary.sizes.begin(), summary.sizes.end(), std::greater<>());
  summary.count = static_cast<std::int64_t>(summary.sizes.size());
  summary.largest = summary.sizes.empty() ? 0 : summary.sizes.front();
  return summary;
}

ExplorationTrace explore_component(const Graph& g, VertexId start, Rng& rng,
                                   ExplorationOptions options) {
  Explorer explorer(g);
  return explorer.Run(start, rng, options);
}

std::vector<ExplorationTrace> component_decomposition(const Graph& g, Rng& rng,
                                                      ExplorationOptions options) {
  Explorer explorer(g);
  std::vector<ExplorationTrace> traces;
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId v = 0; v < n; ++v) {
    if (!explorer.Explored(v)) traces.push_back(explorer.Run(v, rng, options));
  }
  return traces;
}

void WriteTraceJsonLines(const Graph& g, const ExplorationTrace& trace,
                         std::ostream& os) {
  for (const ExplorationStep& step : trace.steps) {
    const Vertex v = g.torus().At(step.chosen);
    nlohmann::json rec = {{"i", step.i},
                          {"S", step.active},
                          {"X", step.activated},
                          {"v", {v.u1, v.u2}}};
    if (trace.rings_recorded) rec["rings"] = step.per_ring;
    os << rec.dump() << '\n';
  }
}

}  // namespace rdg
