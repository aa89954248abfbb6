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

#include "gdfuzz/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gdfuzz {
namespace {

// Dense weight lookup; small graphs only.
struct Matrix {
  int32_t n;
  std::vector<std::optional<Weight>> w;

  explicit Matrix(const Graph& g) : n(g.num_vertices), w(n * n) {
    for (const Edge& e : g.edges) {
      w[e.u * n + e.v] = e.w;
      if (!g.directed) w[e.v * n + e.u] = e.w;
    }
  }
  bool has(VertexId a, VertexId b) const { return w[a * n + b].has_value(); }
  Weight at(VertexId a, VertexId b) const { return *w[a * n + b]; }
};

// reach[u][v]: v reachable from u (u reaches itself).
std::vector<std::vector<bool>> Reachability(const Graph& g) {
  const Matrix m(g);
  const int32_t n = g.num_vertices;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexId u = 0; u < n; ++u) {
    reach[u][u] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexId a = 0; a < n; ++a) {
        if (!reach[u][a]) continue;
        for (VertexId b = 0; b < n; ++b) {
          if (m.has(a, b) && !reach[u][b]) {
            reach[u][b] = true;
            grew = true;
          }
        }
      }
    }
  }
  return reach;
}

SpfOut SpfOracle(const TargetInput& in) {
  const Graph& g = in.graph;
  const Matrix m(g);
  const auto reach = Reachability(g);
  const VertexId s = in.endpoints.s, t = in.endpoints.t;
  for (const auto& cycle : EnumerateSimpleCycles(g)) {
    if (CycleWeight(g, cycle) >= 0) continue;
    for (VertexId v : cycle) {
      if (reach[s][v]) return SpfOut::NegativeCycle();
    }
  }
  if (s == t) return SpfOut::Length(0);
  // Without negative cycles some shortest walk is a simple path.
  std::optional<Weight> best;
  std::vector<bool> on_path(g.num_vertices, false);
  std::function<void(VertexId, Weight)> walk = [&](VertexId u, Weight len) {
    if (u == t) {
      if (!best || len < *best) best = len;
      return;
    }
    on_path[u] = true;
    for (VertexId v = 0; v < g.num_vertices; ++v) {
      if (m.has(u, v) && !on_path[v]) walk(v, len + m.at(u, v));
    }
    on_path[u] = false;
  };
  walk(s, 0);
  return best ? SpfOut::Length(*best) : SpfOut::Unreachable();
}

MstOut MstOracle(const TargetInput& in) {
  const Graph& g = in.graph;
  const int32_t n = g.num_vertices;
  const int32_t m = static_cast<int32_t>(g.edges.size());
  const auto reach = Reachability(g);
  int32_t components = 0;
  for (VertexId v = 0; v < n; ++v) {
    bool first = true;
    for (VertexId u = 0; u < v; ++u) {
      if (reach[v][u]) first = false;
    }
    if (first) ++components;
  }
  const int32_t k = n - components;

  auto acyclic = [&](uint32_t mask) {
    std::vector<int32_t> label(n);
    for (int32_t i = 0; i < n; ++i) label[i] = i;
    for (int32_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const int32_t a = label[g.edges[i].u], b = label[g.edges[i].v];
      if (a == b) return false;
      for (int32_t& l : label) {
        if (l == b) l = a;
      }
    }
    return true;
  };

  std::optional<Weight> best;
  uint32_t best_mask = 0;
  // All k-edge subsets (Gosper's hack); maximal forests have exactly k edges.
  auto consider = [&](uint32_t mask) {
    if (!acyclic(mask)) return;
    Weight w = 0;
    for (int32_t i = 0; i < m; ++i) {
      if (mask >> i & 1) w += g.edges[i].w;
    }
    if (!best || w < *best) {
      best = w;
      best_mask = mask;
    }
  };
  if (k == 0) {
    consider(0);
  } else {
    for (uint32_t mask = (1u << k) - 1; mask < (1u << m);) {
      consider(mask);
      const uint32_t c = mask & (0u - mask);
      const uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  MstOut out;
  out.total_weight = best.value_or(0);
  std::vector<bool> touched(n, false);
  for (int32_t i = 0; i < m; ++i) {
    if (best_mask >> i & 1) {
      out.edges.push_back(g.edges[i]);
      touched[g.edges[i].u] = touched[g.edges[i].v] = true;
    }
  }
  const auto deg = Degrees(g);
  for (VertexId v = 0; v < n; ++v) {
    if (touched[v] || deg[v] == 0) ++out.node_count;
  }
  return out;
}

SccOut SccOracle(const TargetInput& in) {
  const auto reach = Reachability(in.graph);
  const int32_t n = in.graph.num_vertices;
  SccOut out;
  std::vector<bool> placed(n, false);
  for (VertexId u = 0; u < n; ++u) {
    if (placed[u]) continue;
    std::vector<VertexId> comp;
    for (VertexId v = 0; v < n; ++v) {
      if (reach[u][v] && reach[v][u]) {
        comp.push_back(v);
        placed[v] = true;
      }
    }
    out.components.push_back(comp);
  }
  return out;
}

BccOut BccOracle(const TargetInput& in) {
  const Graph& g = in.graph;
  std::map<std::pair<VertexId, VertexId>, int32_t> edge_id;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    edge_id.emplace(std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v)),
                    static_cast<int32_t>(edge_id.size()));
  }
  std::vector<int32_t> cls(edge_id.size());
  for (size_t i = 0; i < cls.size(); ++i) cls[i] = static_cast<int32_t>(i);
  auto merge = [&](int32_t a, int32_t b) {
    const int32_t ca = cls[a], cb = cls[b];
    if (ca == cb) return;
    for (int32_t& c : cls) {
      if (c == cb) c = ca;
    }
  };
  // Edges on a common simple cycle share a block; bridges stay alone.
  for (const auto& cycle : EnumerateSimpleCycles(g)) {
    int32_t first = -1;
    for (size_t i = 0; i < cycle.size(); ++i) {
      const VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
      const int32_t id = edge_id.at({std::min(a, b), std::max(a, b)});
      if (first < 0) {
        first = id;
      } else {
        merge(first, id);
      }
    }
  }
  std::map<int32_t, std::set<VertexId>> blocks;
  for (const auto& [uv, id] : edge_id) {
    blocks[cls[id]].insert(uv.first);
    blocks[cls[id]].insert(uv.second);
  }
  BccOut out;
  for (const auto& [c, verts] : blocks) {
    out.components.emplace_back(verts.begin(), verts.end());
  }
  return out;
}

HcOut HcOracle(const TargetInput& in) {
  const Graph& g = in.graph;
  const Matrix m(g);
  const int32_t n = g.num_vertices;
  HcOut out;
  out.scores.assign(n, 0.0);
  for (VertexId u = 0; u < n; ++u) {
    // Ball of radius k grows one hop per step; newcomers sit at distance k.
    std::set<VertexId> ball = {u};
    for (int32_t k = 1; k < n; ++k) {
      std::set<VertexId> grown = ball;
      for (VertexId a : ball) {
        for (VertexId b = 0; b < n; ++b) {
          if (a != b && m.has(a, b)) grown.insert(b);
        }
      }
      for (VertexId v : grown) {
        if (!ball.count(v)) out.scores[u] += 1.0 / k;
      }
      ball = std::move(grown);
    }
  }
  return out;
}

std::vector<std::set<VertexId>> Neighborhoods(const Graph& g) {
  std::vector<std::set<VertexId>> nb(g.num_vertices);
  for (const Edge& e : g.edges) {
    nb[e.u].insert(e.v);
    nb[e.v].insert(e.u);
  }
  return nb;
}

JsOut JsOracle(const TargetInput& in) {
  const auto nb = Neighborhoods(in.graph);
  JsOut out;
  for (VertexId u = 0; u < in.graph.num_vertices; ++u) {
    for (VertexId v = u + 1; v < in.graph.num_vertices; ++v) {
      std::set<VertexId> inter, uni;
      std::set_intersection(nb[u].begin(), nb[u].end(), nb[v].begin(), nb[v].end(),
                            std::inserter(inter, inter.end()));
      std::set_union(nb[u].begin(), nb[u].end(), nb[v].begin(), nb[v].end(),
                     std::inserter(uni, uni.end()));
      const double score =
          uni.empty() ? 0.0 : static_cast<double>(inter.size()) / uni.size();
      out.scores.push_back({u, v, score});
    }
  }
  return out;
}

AaOut AaOracle(const TargetInput& in) {
  const auto nb = Neighborhoods(in.graph);
  std::vector<int32_t> deg(in.graph.num_vertices, 0);
  for (const Edge& e : in.graph.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  AaOut out;
  for (VertexId u = 0; u < in.graph.num_vertices; ++u) {
    for (VertexId v = u + 1; v < in.graph.num_vertices; ++v) {
      double score = 0.0;
      for (VertexId w : nb[u]) {
        if (nb[v].count(w) && deg[w] > 1) score += 1.0 / std::log(deg[w]);
      }
      out.scores.push_back({u, v, score});
    }
  }
  return out;
}

MmOut MmOracle(const TargetInput& in) {
  const Graph& g = in.graph;
  const int32_t m = static_cast<int32_t>(g.edges.size());
  uint32_t best_mask = 0;
  int32_t best_size = 0;
  std::function<void(int32_t, uint32_t, uint32_t, int32_t)> search =
      [&](int32_t i, uint32_t used_vertices, uint32_t chosen, int32_t size) {
        if (size + (m - i) <= best_size) return;
        if (i == m) {
          best_size = size;
          best_mask = chosen;
          return;
        }
        const Edge& e = g.edges[i];
        const uint32_t bits = (1u << e.u) | (1u << e.v);
        if (e.u != e.v && !(used_vertices & bits)) {
          search(i + 1, used_vertices | bits, chosen | (1u << i), size + 1);
        }
        search(i + 1, used_vertices, chosen, size);
      };
  search(0, 0, 0, 0);
  MmOut out;
  for (int32_t i = 0; i < m; ++i) {
    if (best_mask >> i & 1) {
      out.matching.emplace_back(std::min(g.edges[i].u, g.edges[i].v),
                                std::max(g.edges[i].u, g.edges[i].v));
    }
  }
  return out;
}

MfvOut MfvOracle(const TargetInput& in) {
  const Graph& g = in.graph;
  const VertexId s = in.endpoints.s, t = in.endpoints.t;
  if (s == t) return {0};
  std::optional<Weight> best;
  // Cut sides as bitmasks: s inside, t outside.
  for (uint32_t side = 0; side < (1u << g.num_vertices); ++side) {
    if (!(side >> s & 1) || (side >> t & 1)) continue;
    Weight cut = 0;
    for (const Edge& e : g.edges) {
      const bool u_in = side >> e.u & 1, v_in = side >> e.v & 1;
      if (u_in && !v_in) cut += e.w;
      if (!g.directed && v_in && !u_in) cut += e.w;
    }
    if (!best || cut < *best) best = cut;
  }
  return {*best};
}

}  // namespace

std::vector<std::vector<VertexId>> EnumerateSimpleCycles(const Graph& g) {
  const Matrix m(g);
  const int32_t n = g.num_vertices;
  std::vector<std::vector<VertexId>> cycles;
  std::vector<VertexId> path;
  std::vector<bool> on_path(n, false);
  // Each cycle is rooted at its smallest vertex.
  std::function<void(VertexId, VertexId)> extend = [&](VertexId root, VertexId u) {
    for (VertexId v = root; v < n; ++v) {
      if (!m.has(u, v)) continue;
      if (v == root) {
        if (g.directed) {
          cycles.push_back(path);
        } else if (path.size() >= 3 && path[1] < path.back()) {
          cycles.push_back(path);
        }
        continue;
      }
      if (on_path[v]) continue;
      on_path[v] = true;
      path.push_back(v);
      extend(root, v);
      path.pop_back();
      on_path[v] = false;
    }
  };
  for (VertexId root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = true;
    extend(root, root);
    on_path[root] = false;
  }
  return cycles;
}

Weight CycleWeight(const Graph& g, const std::vector<VertexId>& cycle) {
  const Matrix m(g);
  Weight total = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    total += m.at(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return total;
}

TargetOutput BruteForceOracle(ProblemId problem, const TargetInput& in) {
  if (in.graph.num_vertices > kOracleMaxVertices ||
      static_cast<int32_t>(in.graph.edges.size()) > kOracleMaxEdges) {
    throw OracleTooLarge("OracleTooLarge: N=" + std::to_string(in.graph.num_vertices) +
                         " M=" + std::to_string(in.graph.edges.size()));
  }
  switch (problem) {
    case ProblemId::kSpf: return SpfOracle(in);
    case ProblemId::kMst: return MstOracle(in);
    case ProblemId::kScc: return SccOracle(in);
    case ProblemId::kBcc: return BccOracle(in);
    case ProblemId::kHc: return HcOracle(in);
    case ProblemId::kJs: return JsOracle(in);
    case ProblemId::kMm: return MmOracle(in);
    case ProblemId::kAa: return AaOracle(in);
    case ProblemId::kMfv: return MfvOracle(in);
  }
  throw std::invalid_argument("unknown problem");
}

}  // namespace gdfuzz
