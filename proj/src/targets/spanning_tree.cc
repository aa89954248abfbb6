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

// Minimum spanning forest. Disconnected inputs get one tree per component;
// node_count counts vertices touched by forest edges plus isolated vertices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>
#include <vector>

#include "src/targets/impls.h"

namespace gdfuzz::impl {
namespace {

MstOut MakeOutput(const Graph& g, std::vector<Edge> forest) {
  MstOut out;
  std::vector<uint8_t> counted(g.num_vertices);
  for (Edge& e : forest) {
    if (e.u > e.v) std::swap(e.u, e.v);
    out.total_weight += e.w;
    counted[e.u] = counted[e.v] = 1;
  }
  const std::vector<int32_t> deg = Degrees(g);
  for (VertexId v = 0; v < g.num_vertices; ++v) {
    if (counted[v] || deg[v] == 0) ++out.node_count;
  }
  std::sort(forest.begin(), forest.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  out.edges = std::move(forest);
  return out;
}

}  // namespace

TargetOutput Prim(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kPrim);
  const Graph& g = in.graph;
  const Csr adj = BuildCsr(g);
  std::vector<uint8_t> in_tree(g.num_vertices);
  std::vector<Edge> forest;
  using Item = std::tuple<Weight, VertexId, VertexId>;  // (w, to, from)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  for (VertexId root = 0; root < g.num_vertices; ++root) {
    if (in_tree[root]) continue;
    ctx.Probe(p | 0);
    in_tree[root] = 1;
    for (int32_t i = adj.begin(root); i < adj.end(root); ++i) {
      heap.emplace(adj.weights[i], adj.targets[i], root);
    }
    while (!heap.empty()) {
      ctx.Probe(p | 1);
      auto [w, v, from] = heap.top();
      heap.pop();
      if (in_tree[v]) {
        ctx.Probe(p | 2);
        continue;
      }
      in_tree[v] = 1;
      forest.push_back({from, v, w});
      for (int32_t i = adj.begin(v); i < adj.end(v); ++i) {
        ctx.Tick();
        if (!in_tree[adj.targets[i]]) {
          ctx.Probe(p | 3);
          heap.emplace(adj.weights[i], adj.targets[i], v);
        }
      }
    }
  }
  return MakeOutput(g, std::move(forest));
}

TargetOutput Kruskal(const TargetInput& in, ExecContext& ctx, bool fault) {
  const ProbeId p = ProbeBase(ImplId::kKruskal);
  const Graph& g = in.graph;
  std::vector<int32_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    return g.edges[a].w < g.edges[b].w;
  });

  std::vector<VertexId> parent(g.num_vertices);
  std::vector<int32_t> rank(g.num_vertices, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    VertexId root = x;
    while (parent[root] != root) {
      ctx.Probe(p | 0);
      root = parent[root];
    }
    while (parent[x] != root) {
      VertexId next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  };

  std::vector<Edge> forest;
  for (int32_t idx : order) {
    ctx.Probe(p | 1);
    const Edge& e = g.edges[idx];
    const VertexId ru = find(e.u);
    const VertexId rv = find(e.v);
    if (ru == rv) {
      ctx.Probe(p | 2);
      continue;
    }
    forest.push_back(e);
    if (rank[ru] < rank[rv]) {
      ctx.Probe(p | 3);
      parent[ru] = rv;
    } else if (rank[ru] > rank[rv]) {
      ctx.Probe(p | 4);
      parent[rv] = ru;
    } else {
      ctx.Probe(p | 5);
      // MST_UF_OFF_BY_ONE: on a rank tie at rank >= 2 the mutant links the
      // edge endpoint instead of its root, splitting the rest of the tree off.
      if (fault && rank[ru] >= 2) {
        parent[e.v] = ru;
      } else {
        parent[rv] = ru;
      }
      ++rank[ru];
    }
  }
  return MakeOutput(g, std::move(forest));
}

TargetOutput Boruvka(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kBoruvka);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  std::vector<VertexId> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::vector<Edge> forest;
  // Edge index breaks weight ties, which keeps the chosen edges acyclic.
  auto lighter = [&](int32_t a, int32_t b) {
    return std::make_pair(g.edges[a].w, a) < std::make_pair(g.edges[b].w, b);
  };

  while (true) {
    ctx.Probe(p | 0);
    std::vector<int32_t> cheapest(n, -1);
    for (int32_t i = 0; i < static_cast<int32_t>(g.edges.size()); ++i) {
      ctx.Tick();
      const Edge& e = g.edges[i];
      const VertexId cu = comp[e.u], cv = comp[e.v];
      if (cu == cv) continue;
      if (cheapest[cu] < 0 || lighter(i, cheapest[cu])) cheapest[cu] = i;
      if (cheapest[cv] < 0 || lighter(i, cheapest[cv])) cheapest[cv] = i;
    }
    bool merged = false;
    for (VertexId c = 0; c < n; ++c) {
      if (cheapest[c] < 0) continue;
      const Edge& e = g.edges[cheapest[c]];
      const VertexId cu = comp[e.u], cv = comp[e.v];
      if (cu == cv) {
        ctx.Probe(p | 1);  // already merged through the other side
        continue;
      }
      ctx.Probe(p | 2);
      forest.push_back(e);
      merged = true;
      const VertexId keep = std::min(cu, cv), drop = std::max(cu, cv);
      for (VertexId& x : comp) {
        if (x == drop) x = keep;
      }
    }
    if (!merged) break;
  }
  return MakeOutput(g, std::move(forest));
}

}  // namespace gdfuzz::impl
