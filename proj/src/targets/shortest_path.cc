// Copyright 2026 The gdfuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Single-pair shortest path length. A negative cycle reachable from the
// source makes the answer NegativeCycle regardless of the target.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "src/targets/impls.h"

namespace gdfuzz::impl {
namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

SpfOut Finish(const std::vector<Weight>& dist, VertexId t) {
  if (dist[t] == kInf) return SpfOut::Unreachable();
  return SpfOut::Length(dist[t]);
}

}  // namespace

TargetOutput BellmanFord(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kBellmanFord);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  std::vector<Weight> dist(n, kInf);
  dist[in.endpoints.s] = 0;

  bool changed = true;
  for (int32_t round = 0; round + 1 < n && changed; ++round) {
    ctx.Probe(p | 0);
    changed = false;
    for (const Edge& e : g.edges) {
      ctx.Tick();
      if (dist[e.u] == kInf) continue;
      if (dist[e.u] + e.w < dist[e.v]) {
        ctx.Probe(p | 1);
        dist[e.v] = dist[e.u] + e.w;
        changed = true;
      }
    }
  }
  if (changed) {
    ctx.Probe(p | 2);
    for (const Edge& e : g.edges) {
      if (dist[e.u] != kInf && dist[e.u] + e.w < dist[e.v]) {
        ctx.Probe(p | 3);
        return SpfOut::NegativeCycle();
      }
    }
  }
  ctx.Probe(dist[in.endpoints.t] == kInf ? (p | 4) : (p | 5));
  return Finish(dist, in.endpoints.t);
}

// Goldberg-Radzik: each pass topologically orders the vertices reachable from
// the labeled set through admissible arcs (negative reduced cost), then scans
// them in that order. A cycle of admissible arcs has negative total weight.
TargetOutput GoldbergRadzik(const TargetInput& in, ExecContext& ctx, bool fault) {
  const ProbeId p = ProbeBase(ImplId::kGoldbergRadzik);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const Csr adj = BuildCsr(g);
  std::vector<Weight> dist(n, kInf);
  dist[in.endpoints.s] = 0;

  // Reduced cost dist[u] + w - dist[v] must be strictly negative.
  // GR_ZERO_CYCLE: the mutant accepts zero reduced cost (`<=`), so a tight
  // zero-weight cycle reads as a negative one.
  auto admissible = [&](VertexId u, Weight w, VertexId v) {
    if (dist[u] == kInf) return false;
    if (dist[v] == kInf) return true;
    return fault ? dist[u] + w <= dist[v] : dist[u] + w < dist[v];
  };

  std::vector<VertexId> labeled = {in.endpoints.s};
  std::vector<uint8_t> state(n);  // 0 unvisited, 1 on stack, 2 finished
  std::vector<uint8_t> relabeled(n);
  std::vector<VertexId> order;
  std::vector<std::pair<VertexId, int32_t>> stack;
  int32_t passes = 0;

  while (!labeled.empty()) {
    ctx.Probe(p | 0);
    if (++passes > n) {
      // More passes than any negative-cycle-free graph needs.
      ctx.Probe(p | 1);
      return SpfOut::NegativeCycle();
    }
    std::fill(state.begin(), state.end(), 0);
    order.clear();
    for (VertexId b : labeled) {
      ctx.Probe(p | 2);
      if (state[b] != 0) continue;
      bool has_admissible = false;
      for (int32_t i = adj.begin(b); i < adj.end(b) && !has_admissible; ++i) {
        has_admissible = admissible(b, adj.weights[i], adj.targets[i]);
      }
      if (!has_admissible) {
        ctx.Probe(p | 3);
        continue;
      }
      stack.assign(1, {b, adj.begin(b)});
      state[b] = 1;
      while (!stack.empty()) {
        auto& [u, next] = stack.back();
        ctx.Probe(p | 4);
        if (next == adj.end(u)) {
          state[u] = 2;
          order.push_back(u);
          stack.pop_back();
          continue;
        }
        const int32_t i = next++;
        const VertexId v = adj.targets[i];
        if (!admissible(u, adj.weights[i], v)) continue;
        if (state[v] == 1) {
          ctx.Probe(p | 5);
          return SpfOut::NegativeCycle();
        }
        if (state[v] == 0) {
          ctx.Probe(p | 6);
          state[v] = 1;
          stack.emplace_back(v, adj.begin(v));
        }
      }
    }
    std::reverse(order.begin(), order.end());

    std::fill(relabeled.begin(), relabeled.end(), 0);
    for (VertexId u : order) {
      ctx.Probe(p | 7);
      for (int32_t i = adj.begin(u); i < adj.end(u); ++i) {
        ctx.Tick();
        const VertexId v = adj.targets[i];
        if (dist[u] + adj.weights[i] < dist[v]) {
          ctx.Probe(p | 8);
          dist[v] = dist[u] + adj.weights[i];
          relabeled[v] = 1;
        }
      }
    }
    labeled.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (relabeled[v]) labeled.push_back(v);
    }
  }
  ctx.Probe(dist[in.endpoints.t] == kInf ? (p | 9) : (p | 10));
  return Finish(dist, in.endpoints.t);
}

TargetOutput Dijkstra(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kDijkstra);
  const Graph& g = in.graph;
  for (const Edge& e : g.edges) {
    if (e.w < 0) throw std::domain_error("Dijkstra: negative edge weight");
  }
  const Csr adj = BuildCsr(g);
  std::vector<Weight> dist(g.num_vertices, kInf);
  std::vector<uint8_t> done(g.num_vertices);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[in.endpoints.s] = 0;
  heap.emplace(0, in.endpoints.s);
  while (!heap.empty()) {
    ctx.Probe(p | 0);
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) {
      ctx.Probe(p | 1);
      continue;
    }
    done[u] = 1;
    if (u == in.endpoints.t) {
      ctx.Probe(p | 2);
      break;
    }
    for (int32_t i = adj.begin(u); i < adj.end(u); ++i) {
      ctx.Tick();
      const VertexId v = adj.targets[i];
      if (d + adj.weights[i] < dist[v]) {
        ctx.Probe(p | 3);
        dist[v] = d + adj.weights[i];
        heap.emplace(dist[v], v);
      }
    }
  }
  ctx.Probe(dist[in.endpoints.t] == kInf ? (p | 4) : (p | 5));
  return Finish(dist, in.endpoints.t);
}

}  // namespace gdfuzz::impl
