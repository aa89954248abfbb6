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

// Vertex-pair similarity over every pair u < v.
//
// Conventions shared by all implementations and the oracle:
//   N(v) contains v itself iff the self-loop (v, v) exists.
//   Jaccard: |N(u) & N(v)| / |N(u) | N(v)|, with 0/0 = 0.
//   Adamic-Adar: sum over w in N(u) & N(v) of 1 / ln(deg(w)); deg counts a
//   self-loop twice and terms with deg(w) <= 1 are 0.

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "src/targets/impls.h"

namespace gdfuzz::impl {
namespace {

std::vector<std::vector<VertexId>> NeighborLists(const Graph& g, bool drop_self) {
  const Csr adj = BuildCsr(g);
  std::vector<std::vector<VertexId>> lists(g.num_vertices);
  for (VertexId v = 0; v < g.num_vertices; ++v) {
    for (int32_t i = adj.begin(v); i < adj.end(v); ++i) {
      if (drop_self && adj.targets[i] == v) continue;
      lists[v].push_back(adj.targets[i]);
    }
  }
  return lists;
}

}  // namespace

TargetOutput SortedMerge(const TargetInput& in, ExecContext& ctx, bool fault) {
  const ProbeId p = ProbeBase(ImplId::kSortedMerge);
  const Graph& g = in.graph;
  // JS_IGNORE_SELF_LOOP: the mutant builds neighborhoods without self-loops.
  const auto lists = NeighborLists(g, /*drop_self=*/fault);
  JsOut out;
  out.scores.reserve(static_cast<size_t>(g.num_vertices) * (g.num_vertices - 1) / 2);
  for (VertexId u = 0; u < g.num_vertices; ++u) {
    ctx.Probe(p | 0);
    for (VertexId v = u + 1; v < g.num_vertices; ++v) {
      ctx.Probe(p | 1);
      const auto& a = lists[u];
      const auto& b = lists[v];
      size_t i = 0, j = 0, common = 0;
      while (i < a.size() && j < b.size()) {
        ctx.Tick();
        if (a[i] < b[j]) {
          ++i;
        } else if (a[i] > b[j]) {
          ++j;
        } else {
          ++common;
          ++i;
          ++j;
        }
      }
      const size_t total = a.size() + b.size() - common;
      double score = 0.0;
      if (total == 0) {
        ctx.Probe(p | 2);
      } else {
        ctx.Probe(common == 0 ? (p | 3) : (p | 4));
        score = static_cast<double>(common) / static_cast<double>(total);
      }
      out.scores.push_back({u, v, score});
    }
  }
  return out;
}

TargetOutput BitsetIntersect(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kBitsetIntersect);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const size_t words = (static_cast<size_t>(n) + 63) / 64;
  std::vector<uint64_t> bits(words * n, 0);
  auto set = [&](VertexId row, VertexId col) {
    bits[row * words + col / 64] |= uint64_t{1} << (col % 64);
  };
  for (const Edge& e : g.edges) {
    set(e.u, e.v);
    set(e.v, e.u);
  }
  JsOut out;
  out.scores.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    ctx.Probe(p | 0);
    for (VertexId v = u + 1; v < n; ++v) {
      ctx.Probe(p | 1);
      int64_t inter = 0, uni = 0;
      for (size_t w = 0; w < words; ++w) {
        const uint64_t a = bits[u * words + w], b = bits[v * words + w];
        inter += std::popcount(a & b);
        uni += std::popcount(a | b);
      }
      if (uni == 0) {
        ctx.Probe(p | 2);
        out.scores.push_back({u, v, 0.0});
      } else {
        ctx.Probe(p | 3);
        out.scores.push_back(
            {u, v, static_cast<double>(inter) / static_cast<double>(uni)});
      }
    }
  }
  return out;
}

TargetOutput PerPairIntersect(const TargetInput& in, ExecContext& ctx, bool fault) {
  const ProbeId p = ProbeBase(ImplId::kPerPairIntersect);
  const Graph& g = in.graph;
  const auto lists = NeighborLists(g, /*drop_self=*/false);
  std::vector<int32_t> deg = Degrees(g);
  if (fault) {
    // AA_SELF_LOOP_WRONG: the mutant counts a self-loop once in the degree.
    for (const Edge& e : g.edges) {
      if (e.u == e.v) --deg[e.u];
    }
  }
  AaOut out;
  out.scores.reserve(static_cast<size_t>(g.num_vertices) * (g.num_vertices - 1) / 2);
  for (VertexId u = 0; u < g.num_vertices; ++u) {
    ctx.Probe(p | 0);
    for (VertexId v = u + 1; v < g.num_vertices; ++v) {
      ctx.Probe(p | 1);
      const auto& a = lists[u];
      const auto& b = lists[v];
      double score = 0.0;
      size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        ctx.Tick();
        if (a[i] < b[j]) {
          ++i;
        } else if (a[i] > b[j]) {
          ++j;
        } else {
          const VertexId w = a[i];
          if (deg[w] > 1) {
            ctx.Probe(p | 2);
            score += 1.0 / std::log(static_cast<double>(deg[w]));
          } else {
            ctx.Probe(p | 3);
          }
          ++i;
          ++j;
        }
      }
      out.scores.push_back({u, v, score});
    }
  }
  return out;
}

TargetOutput PrecomputedNeighborhoods(const TargetInput& in, ExecContext& ctx) {
  const ProbeId p = ProbeBase(ImplId::kPrecomputedNeighborhoods);
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  std::vector<std::vector<VertexId>> members(n);
  std::vector<int32_t> deg(n, 0);
  for (const Edge& e : g.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
    members[e.u].push_back(e.v);
    if (e.u != e.v) members[e.v].push_back(e.u);
  }
  // Every w adds its weight to each pair it is a common neighbor of.
  std::vector<double> score(static_cast<size_t>(n) * n, 0.0);
  for (VertexId w = 0; w < n; ++w) {
    ctx.Probe(p | 0);
    if (deg[w] <= 1) {
      ctx.Probe(p | 1);
      continue;
    }
    const double weight = 1.0 / std::log(static_cast<double>(deg[w]));
    std::vector<VertexId>& m = members[w];
    std::sort(m.begin(), m.end());
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = i + 1; j < m.size(); ++j) {
        ctx.Probe(p | 2);
        score[static_cast<size_t>(m[i]) * n + m[j]] += weight;
      }
    }
  }
  AaOut out;
  out.scores.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    ctx.Probe(p | 3);
    for (VertexId v = u + 1; v < n; ++v) {
      out.scores.push_back({u, v, score[static_cast<size_t>(u) * n + v]});
    }
  }
  return out;
}

}  // namespace gdfuzz::impl
