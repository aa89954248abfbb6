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

// Strongly connected components and biconnected components (blocks).

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "src/targets/impls.h"

namespace gdfuzz::impl {

TargetOutput TarjanIterative(const TargetInput& in, ExecContext& ctx, bool fault) {
  const ProbeId p = ProbeBase(ImplId::kTarjanIterative);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const Csr adj = BuildCsr(g);
  std::vector<int32_t> index(n, -1), low(n, 0), dfs_parent(n, -1);
  std::vector<uint8_t> on_stack(n);
  std::vector<VertexId> scc_stack;
  std::vector<std::pair<VertexId, int32_t>> call_stack;
  SccOut out;
  int32_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    ctx.Probe(p | 0);
    call_stack.emplace_back(root, adj.begin(root));
    index[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!call_stack.empty()) {
      auto& [v, next] = call_stack.back();
      ctx.Probe(p | 1);
      if (next < adj.end(v)) {
        const VertexId w = adj.targets[next++];
        if (index[w] < 0) {
          ctx.Probe(p | 2);
          dfs_parent[w] = v;
          index[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call_stack.emplace_back(w, adj.begin(w));
        } else if (on_stack[w]) {
          ctx.Probe(p | 3);
          // SCC_STACK_SKIP: the mutant drops this update for a back edge to
          // the DFS parent once DFS numbering has passed 7.
          if (!(fault && w == dfs_parent[v] && index[v] > 7)) {
            low[v] = std::min(low[v], index[w]);
          }
        } else {
          ctx.Probe(p | 4);
        }
        continue;
      }
      const VertexId done = v;
      call_stack.pop_back();
      if (low[done] == index[done]) {
        ctx.Probe(p | 5);
        std::vector<VertexId> comp;
        VertexId w;
        do {
          ctx.Probe(p | 6);
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        out.components.push_back(std::move(comp));
      }
      if (!call_stack.empty()) {
        const VertexId up = call_stack.back().first;
        low[up] = std::min(low[up], low[done]);
      }
    }
  }
  return out;
}

TargetOutput Kosaraju(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kKosaraju);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const Csr fwd = BuildCsr(g);
  const Csr rev = BuildCsr(g, /*reverse=*/true);

  std::vector<uint8_t> seen(n);
  std::vector<VertexId> finish;
  finish.reserve(n);
  std::vector<std::pair<VertexId, int32_t>> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ctx.Probe(p | 0);
    seen[root] = 1;
    stack.emplace_back(root, fwd.begin(root));
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      ctx.Probe(p | 1);
      if (next < fwd.end(v)) {
        const VertexId w = fwd.targets[next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, fwd.begin(w));
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }

  SccOut out;
  std::vector<int32_t> label(n, -1);
  std::vector<VertexId> todo;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (label[*it] >= 0) continue;
    ctx.Probe(p | 2);
    const int32_t id = static_cast<int32_t>(out.components.size());
    out.components.emplace_back();
    label[*it] = id;
    todo.assign(1, *it);
    while (!todo.empty()) {
      ctx.Probe(p | 3);
      const VertexId v = todo.back();
      todo.pop_back();
      out.components[id].push_back(v);
      for (int32_t i = rev.begin(v); i < rev.end(v); ++i) {
        const VertexId w = rev.targets[i];
        if (label[w] < 0) {
          label[w] = id;
          todo.push_back(w);
        }
      }
    }
  }
  return out;
}

TargetOutput HopcroftTarjan(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kHopcroftTarjan);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const Csr adj = BuildCsr(g);
  std::vector<int32_t> disc(n, -1), low(n, 0);
  std::vector<std::pair<VertexId, VertexId>> edge_stack;
  struct Frame {
    VertexId v;
    VertexId parent;
    int32_t next;
  };
  std::vector<Frame> stack;
  BccOut out;
  int32_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    ctx.Probe(p | 0);
    disc[root] = low[root] = counter++;
    stack.push_back({root, -1, adj.begin(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      ctx.Probe(p | 1);
      if (f.next < adj.end(f.v)) {
        const VertexId w = adj.targets[f.next++];
        if (w == f.v || w == f.parent) {
          ctx.Probe(p | 2);
          continue;
        }
        if (disc[w] < 0) {
          ctx.Probe(p | 3);
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = counter++;
          stack.push_back({w, f.v, adj.begin(w)});
        } else if (disc[w] < disc[f.v]) {
          ctx.Probe(p | 4);
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const VertexId child = f.v;
      const VertexId parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        ctx.Probe(p | 5);
        std::vector<VertexId> block;
        while (true) {
          ctx.Probe(p | 6);
          auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(a);
          block.push_back(b);
          if (a == parent && b == child) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.components.push_back(std::move(block));
      }
    }
  }
  return out;
}

// Two edges share a block iff no single vertex removal separates them. Each
// edge gets a signature: its component in G - x for every vertex x (an edge
// incident to x takes the component of its other endpoint). Blocks are the
// classes of equal signatures.
TargetOutput BruteBlocks(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kBruteBlocks);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const Csr adj = BuildCsr(g);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges) {
    if (e.u != e.v) edges.push_back(e);
  }
  const size_t m = edges.size();

  // labels[x][v]: component id of v in G - x; row n is G itself.
  std::vector<std::vector<int32_t>> labels(n + 1, std::vector<int32_t>(n, -1));
  std::vector<VertexId> todo;
  for (VertexId removed = 0; removed <= n; ++removed) {
    ctx.Probe(p | 0);
    std::vector<int32_t>& lab = labels[removed];
    int32_t next_id = 0;
    for (VertexId start = 0; start < n; ++start) {
      if (start == removed || lab[start] >= 0) continue;
      lab[start] = next_id;
      todo.assign(1, start);
      while (!todo.empty()) {
        ctx.Probe(p | 1);
        const VertexId v = todo.back();
        todo.pop_back();
        for (int32_t i = adj.begin(v); i < adj.end(v); ++i) {
          const VertexId w = adj.targets[i];
          if (w != removed && lab[w] < 0) {
            lab[w] = next_id;
            todo.push_back(w);
          }
        }
      }
      ++next_id;
    }
  }

  std::map<std::vector<int32_t>, std::vector<VertexId>> classes;
  std::vector<int32_t> sig(n + 1);
  for (size_t i = 0; i < m; ++i) {
    ctx.Probe(p | 2);
    const Edge& e = edges[i];
    for (VertexId x = 0; x <= n; ++x) {
      if (x == e.u) {
        sig[x] = labels[x][e.v];
      } else {
        sig[x] = labels[x][e.u];
      }
    }
    std::vector<VertexId>& block = classes[sig];
    block.push_back(e.u);
    block.push_back(e.v);
  }
  BccOut out;
  for (auto& [key, block] : classes) {
    ctx.Probe(p | 3);
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    out.components.push_back(std::move(block));
  }
  return out;
}

}  // namespace gdfuzz::impl
