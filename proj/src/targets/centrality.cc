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

// Harmonic centrality on unweighted graphs: score(u) = sum over v != u of
// 1 / d(u, v), unreachable pairs contributing 0.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "src/targets/impls.h"

namespace gdfuzz::impl {

TargetOutput BfsPerSource(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kBfsPerSource);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const Csr adj = BuildCsr(g);
  HcOut out;
  out.scores.assign(n, 0.0);
  std::vector<int32_t> dist(n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId src = 0; src < n; ++src) {
    ctx.Probe(p | 0);
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    queue.assign(1, src);
    for (size_t head = 0; head < queue.size(); ++head) {
      ctx.Probe(p | 1);
      const VertexId u = queue[head];
      for (int32_t i = adj.begin(u); i < adj.end(u); ++i) {
        const VertexId v = adj.targets[i];
        if (dist[v] < 0) {
          ctx.Probe(p | 2);
          dist[v] = dist[u] + 1;
          out.scores[src] += 1.0 / dist[v];
          queue.push_back(v);
        }
      }
    }
  }
  return out;
}

TargetOutput AllPairsFloyd(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kAllPairsFloyd);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  constexpr int32_t kInf = std::numeric_limits<int32_t>::max() / 2;
  std::vector<int32_t> d(static_cast<size_t>(n) * n, kInf);
  auto at = [&](VertexId a, VertexId b) -> int32_t& { return d[a * n + b]; };
  for (VertexId v = 0; v < n; ++v) at(v, v) = 0;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    at(e.u, e.v) = 1;
    if (!g.directed) at(e.v, e.u) = 1;
  }
  for (VertexId k = 0; k < n; ++k) {
    ctx.Probe(p | 0);
    for (VertexId i = 0; i < n; ++i) {
      ctx.Tick();
      if (at(i, k) == kInf) continue;
      for (VertexId j = 0; j < n; ++j) {
        if (at(i, k) + at(k, j) < at(i, j)) at(i, j) = at(i, k) + at(k, j);
      }
    }
  }
  HcOut out;
  out.scores.assign(n, 0.0);
  for (VertexId i = 0; i < n; ++i) {
    ctx.Probe(p | 1);
    for (VertexId j = 0; j < n; ++j) {
      if (i == j) continue;
      if (at(i, j) == kInf) {
        ctx.Probe(p | 2);
        continue;
      }
      ctx.Probe(p | 3);
      out.scores[i] += 1.0 / at(i, j);
    }
  }
  return out;
}

}  // namespace gdfuzz::impl
