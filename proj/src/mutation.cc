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

#include "gdfuzz/mutation.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gdfuzz {
namespace {

// Start of each vertex's block in the canonical edge list. For undirected
// graphs row u holds the edges (u, v) with v >= u.
std::vector<int32_t> RowStarts(const Graph& g) {
  std::vector<int32_t> start(g.num_vertices + 1, 0);
  for (const Edge& e : g.edges) ++start[e.u + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  return start;
}

struct RowRange {
  VertexId row;
  VertexId lo;  // candidate columns [lo, hi)
  VertexId hi;
};

// Uniformly picks an absent, profile-allowed edge (row, col) with col in the
// row's range. Returns false when there is none.
bool PickNonEdge(const Graph& g, const GraphProfile& p,
                 const std::vector<RowRange>& ranges, Rng& rng, Edge& out) {
  const std::vector<int32_t> start = RowStarts(g);
  auto allowed_in_range = [&](const RowRange& r) -> int64_t {
    if (r.hi <= r.lo) return 0;
    int64_t count = r.hi - r.lo;
    if (p.require_bipartite) {
      // Columns whose parity differs from the row's.
      const int want = (r.row & 1) ^ 1;
      const int first = (r.lo & 1) == want ? r.lo : r.lo + 1;
      count = first >= r.hi ? 0 : (r.hi - 1 - first) / 2 + 1;
    } else if (!p.allow_self_loops && r.row >= r.lo && r.row < r.hi) {
      --count;
    }
    return count;
  };
  auto present_in_range = [&](const RowRange& r) -> int64_t {
    int64_t count = 0;
    for (int32_t i = start[r.row]; i < start[r.row + 1]; ++i) {
      if (g.edges[i].v >= r.lo && g.edges[i].v < r.hi) ++count;
    }
    return count;
  };

  std::vector<int64_t> free(ranges.size());
  int64_t total = 0;
  for (size_t i = 0; i < ranges.size(); ++i) {
    free[i] = allowed_in_range(ranges[i]) - present_in_range(ranges[i]);
    total += free[i];
  }
  if (total <= 0) return false;
  int64_t k = static_cast<int64_t>(rng.Below(static_cast<uint64_t>(total)));
  size_t which = 0;
  while (k >= free[which]) k -= free[which++];
  const RowRange& r = ranges[which];
  int32_t i = start[r.row];
  for (VertexId col = r.lo; col < r.hi; ++col) {
    while (i < start[r.row + 1] && g.edges[i].v < col) ++i;
    const bool present = i < start[r.row + 1] && g.edges[i].v == col;
    if (present || !p.EdgeAllowed(r.row, col)) continue;
    if (k-- == 0) {
      out = {r.row, col, 1};
      return true;
    }
  }
  return false;  // unreachable: counts and scan agree
}

Weight DrawWeight(const GraphProfile& p, Rng& rng) {
  return p.weighted ? rng.Uniform(p.weight_min, p.weight_max) : 1;
}

void InsertSorted(Graph& g, Edge e) {
  if (!g.directed && e.u > e.v) std::swap(e.u, e.v);
  auto pos = std::lower_bound(g.edges.begin(), g.edges.end(), e,
                              [](const Edge& a, const Edge& b) {
                                return a.u != b.u ? a.u < b.u : a.v < b.v;
                              });
  g.edges.insert(pos, e);
}

// Removes the vertices flagged in `drop` and renumbers the rest densely,
// preserving relative order (so the edge list stays canonical). Renumbering
// shifts parity, so edges the profile no longer allows are dropped.
void RemoveVertices(Graph& g, const std::vector<uint8_t>& drop,
                    const GraphProfile& p) {
  std::vector<VertexId> new_id(g.num_vertices, -1);
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices; ++v) {
    if (!drop[v]) new_id[v] = next++;
  }
  size_t out = 0;
  for (const Edge& e : g.edges) {
    if (drop[e.u] || drop[e.v]) continue;
    if (!p.EdgeAllowed(new_id[e.u], new_id[e.v])) continue;
    g.edges[out++] = {new_id[e.u], new_id[e.v], e.w};
  }
  g.edges.resize(out);
  g.num_vertices = next;
}

void AddEdge(Graph& g, const GraphProfile& p, Rng& rng) {
  if (static_cast<int32_t>(g.edges.size()) >= p.max_edges) return;
  std::vector<RowRange> ranges;
  ranges.reserve(g.num_vertices);
  for (VertexId u = 0; u < g.num_vertices; ++u) {
    ranges.push_back({u, g.directed ? 0 : u, g.num_vertices});
  }
  Edge e;
  if (!PickNonEdge(g, p, ranges, rng, e)) return;
  e.w = DrawWeight(p, rng);
  InsertSorted(g, e);
}

void Combine(Graph& g, const Graph& donor, const GraphProfile& p, Rng& rng) {
  // Bipartite profiles pad to an even offset so donor parities survive.
  if (p.require_bipartite && g.num_vertices % 2 == 1 &&
      g.num_vertices < p.max_vertices) {
    ++g.num_vertices;
  }
  const VertexId base = g.num_vertices;
  VertexId keep = std::min(base + donor.num_vertices, p.max_vertices);
  for (const Edge& e : donor.edges) {
    if (p.EdgeAllowed(e.u + base, e.v + base)) {
      g.edges.push_back({e.u + base, e.v + base, e.w});
    }
  }
  g.num_vertices = base + donor.num_vertices;
  // Drop donor vertices from the top until both caps hold.
  auto edges_within = [&](VertexId limit) {
    return std::count_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
      return e.u < limit && e.v < limit;
    });
  };
  while (keep > base && edges_within(keep) > p.max_edges) --keep;
  if (keep < g.num_vertices) {
    std::vector<uint8_t> drop(g.num_vertices, 0);
    std::fill(drop.begin() + keep, drop.end(), 1);
    RemoveVertices(g, drop, p);
  }

  const int64_t bridges = rng.Uniform(0, 3);
  for (int64_t b = 0; b < bridges; ++b) {
    if (static_cast<int32_t>(g.edges.size()) >= p.max_edges) break;
    std::vector<RowRange> ranges;
    for (VertexId a = 0; a < base; ++a) ranges.push_back({a, base, g.num_vertices});
    if (g.directed) {
      for (VertexId d = base; d < g.num_vertices; ++d) ranges.push_back({d, 0, base});
    }
    Edge e;
    if (!PickNonEdge(g, p, ranges, rng, e)) break;
    e.w = DrawWeight(p, rng);
    InsertSorted(g, e);
  }
}

}  // namespace

std::string_view MutationKindName(MutationKind kind) {
  switch (kind) {
    case MutationKind::kAddVertex: return "AddVertex";
    case MutationKind::kRemoveVertex: return "RemoveVertex";
    case MutationKind::kAddEdge: return "AddEdge";
    case MutationKind::kRemoveEdge: return "RemoveEdge";
    case MutationKind::kUpdateWeight: return "UpdateWeight";
    case MutationKind::kTrim: return "Trim";
    case MutationKind::kCombine: return "Combine";
  }
  return "Unknown";
}

void MutateInPlace(MutationKind kind, Graph& g, const Graph* donor,
                   const GraphProfile& p, Rng& rng) {
  switch (kind) {
    case MutationKind::kAddVertex:
      if (g.num_vertices < p.max_vertices) ++g.num_vertices;
      return;
    case MutationKind::kRemoveVertex: {
      if (g.num_vertices <= 1) return;
      std::vector<uint8_t> drop(g.num_vertices, 0);
      drop[rng.Below(g.num_vertices)] = 1;
      RemoveVertices(g, drop, p);
      return;
    }
    case MutationKind::kAddEdge:
      AddEdge(g, p, rng);
      return;
    case MutationKind::kRemoveEdge:
      if (g.edges.empty()) return;
      g.edges.erase(g.edges.begin() +
                    static_cast<int64_t>(rng.Below(g.edges.size())));
      return;
    case MutationKind::kUpdateWeight:
      if (g.edges.empty() || !p.weighted) return;
      {
        Edge& e = g.edges[rng.Below(g.edges.size())];
        e.w = DrawWeight(p, rng);
      }
      return;
    case MutationKind::kTrim: {
      if (g.num_vertices <= 1) return;
      const int64_t max_k = std::max<int64_t>(1, g.num_vertices / 4);
      const int64_t k = std::min<int64_t>(rng.Uniform(1, max_k), g.num_vertices - 1);
      std::vector<VertexId> ids(g.num_vertices);
      std::iota(ids.begin(), ids.end(), 0);
      std::vector<uint8_t> drop(g.num_vertices, 0);
      for (int64_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<int64_t>(rng.Below(ids.size() - i));
        std::swap(ids[i], ids[j]);
        drop[ids[i]] = 1;
      }
      RemoveVertices(g, drop, p);
      return;
    }
    case MutationKind::kCombine:
      if (donor == nullptr) throw DonorMissing();
      Combine(g, *donor, p, rng);
      return;
  }
}

Graph ApplyMutation(MutationKind kind, const Graph& g, const Graph* donor,
                    const GraphProfile& profile, Rng& rng) {
  Graph out = g;
  MutateInPlace(kind, out, donor, profile, rng);
  return out;
}

int DrawStackSize(Rng& rng, int max_stack) {
  const int n = 1 << (1 + rng.Below(7));
  return std::min(n, max_stack);
}

Graph StackedMutate(const Graph& g, const DonorSampler& sampler,
                    const GraphProfile& profile, Rng& rng, int max_stack) {
  Graph out = g;
  const int n = DrawStackSize(rng, max_stack);
  for (int i = 0; i < n; ++i) {
    const MutationKind kind = kAllMutationKinds[rng.Below(kAllMutationKinds.size())];
    const Graph* donor = nullptr;
    if (kind == MutationKind::kCombine) donor = &sampler(rng);
    MutateInPlace(kind, out, donor, profile, rng);
  }
  return out;
}

}  // namespace gdfuzz
