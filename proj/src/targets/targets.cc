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

#include "gdfuzz/targets.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "src/targets/impls.h"

namespace gdfuzz {
namespace impl {

Csr BuildCsr(const Graph& g, bool reverse) {
  Csr csr;
  const int32_t n = g.num_vertices;
  csr.offsets.assign(n + 1, 0);
  auto arcs = [&](auto&& emit) {
    for (const Edge& e : g.edges) {
      if (g.directed) {
        if (reverse) {
          emit(e.v, e.u, e.w);
        } else {
          emit(e.u, e.v, e.w);
        }
      } else {
        emit(e.u, e.v, e.w);
        if (e.u != e.v) emit(e.v, e.u, e.w);
      }
    }
  };
  arcs([&](VertexId a, VertexId, Weight) { ++csr.offsets[a + 1]; });
  std::partial_sum(csr.offsets.begin(), csr.offsets.end(), csr.offsets.begin());
  csr.targets.resize(csr.offsets[n]);
  csr.weights.resize(csr.offsets[n]);
  std::vector<int32_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
  arcs([&](VertexId a, VertexId b, Weight w) {
    csr.targets[fill[a]] = b;
    csr.weights[fill[a]] = w;
    ++fill[a];
  });
  // Sort each row by target so every implementation sees neighbors in
  // ascending order.
  std::vector<std::pair<VertexId, Weight>> row;
  for (VertexId v = 0; v < n; ++v) {
    row.clear();
    for (int32_t i = csr.begin(v); i < csr.end(v); ++i) {
      row.emplace_back(csr.targets[i], csr.weights[i]);
    }
    if (std::is_sorted(row.begin(), row.end())) continue;
    std::sort(row.begin(), row.end());
    for (int32_t i = csr.begin(v); i < csr.end(v); ++i) {
      csr.targets[i] = row[i - csr.begin(v)].first;
      csr.weights[i] = row[i - csr.begin(v)].second;
    }
  }
  return csr;
}

}  // namespace impl

namespace {

template <TargetOutput (*Fn)(const TargetInput&, ExecContext&, bool)>
TargetOutput Correct(const TargetInput& in, ExecContext& ctx) {
  return Fn(in, ctx, false);
}

std::string Join(const std::vector<VertexId>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string DescribeSpf(const SpfOut& o) {
  switch (o.kind) {
    case SpfOut::Kind::kLength: return "Length(" + std::to_string(o.length) + ")";
    case SpfOut::Kind::kUnreachable: return "Unreachable";
    case SpfOut::Kind::kNegativeCycle: return "NegativeCycle";
  }
  return "?";
}

Comparison Different(std::string why) { return {false, std::move(why)}; }

Comparison CompareComponents(Components a, Components b) {
  CanonicalizeComponents(a);
  CanonicalizeComponents(b);
  if (a == b) return {};
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) {
      return Different("component " + Join(a[i]) + " vs " + Join(b[i]));
    }
  }
  return Different(std::to_string(a.size()) + " components vs " +
                   std::to_string(b.size()));
}

Comparison CompareScores(const std::vector<PairScore>& a,
                         const std::vector<PairScore>& b) {
  if (a.size() != b.size()) {
    return Different(std::to_string(a.size()) + " pairs vs " +
                     std::to_string(b.size()));
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].u != b[i].u || a[i].v != b[i].v) {
      return Different("pair key mismatch at index " + std::to_string(i));
    }
    if (!(std::fabs(a[i].score - b[i].score) <= kScoreTolerance)) {
      return Different("pair (" + std::to_string(a[i].u) + "," +
                       std::to_string(a[i].v) + "): " + std::to_string(a[i].score) +
                       " vs " + std::to_string(b[i].score));
    }
  }
  return {};
}

// Connected components of the undirected view of `g`.
int32_t CountComponents(const Graph& g) {
  std::vector<VertexId> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int32_t count = g.num_vertices;
  for (const Edge& e : g.edges) {
    VertexId a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

std::string CheckForest(const MstOut& o, const Graph& g) {
  std::set<std::tuple<VertexId, VertexId, Weight>> present;
  for (const Edge& e : g.edges) {
    present.emplace(std::min(e.u, e.v), std::max(e.u, e.v), e.w);
  }
  std::vector<VertexId> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Weight total = 0;
  for (const Edge& e : o.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices ||
        !present.count({std::min(e.u, e.v), std::max(e.u, e.v), e.w})) {
      return "forest edge not in graph";
    }
    VertexId a = find(e.u), b = find(e.v);
    if (a == b) return "forest contains a cycle";
    parent[a] = b;
    total += e.w;
  }
  if (total != o.total_weight) return "total weight does not match forest edges";
  const int32_t components = CountComponents(g);
  if (static_cast<int32_t>(o.edges.size()) != g.num_vertices - components) {
    return "forest does not span every component";
  }
  return "";
}

std::string CheckMatching(const MmOut& o, const Graph& g) {
  std::set<std::pair<VertexId, VertexId>> present;
  for (const Edge& e : g.edges) present.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  std::vector<uint8_t> used(g.num_vertices);
  for (auto [a, b] : o.matching) {
    if (a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices) {
      return "matched vertex out of range";
    }
    if (!present.count({std::min(a, b), std::max(a, b)})) {
      return "matched pair is not an edge";
    }
    if (used[a] || used[b] || a == b) return "matching is not vertex-disjoint";
    used[a] = used[b] = 1;
  }
  return "";
}

std::string CheckPartition(const Components& c, int32_t n) {
  std::vector<uint8_t> seen(n);
  for (const auto& comp : c) {
    for (VertexId v : comp) {
      if (v < 0 || v >= n) return "component vertex out of range";
      if (seen[v]) return "components overlap";
      seen[v] = 1;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n) {
    return "components do not cover every vertex";
  }
  return "";
}

}  // namespace

ImplFn ImplementationFor(ImplId id) {
  switch (id) {
    case ImplId::kBellmanFord: return impl::BellmanFord;
    case ImplId::kGoldbergRadzik: return Correct<impl::GoldbergRadzik>;
    case ImplId::kDijkstra: return impl::Dijkstra;
    case ImplId::kPrim: return impl::Prim;
    case ImplId::kKruskal: return Correct<impl::Kruskal>;
    case ImplId::kBoruvka: return impl::Boruvka;
    case ImplId::kTarjanIterative: return Correct<impl::TarjanIterative>;
    case ImplId::kKosaraju: return impl::Kosaraju;
    case ImplId::kHopcroftTarjan: return impl::HopcroftTarjan;
    case ImplId::kBruteBlocks: return impl::BruteBlocks;
    case ImplId::kBfsPerSource: return impl::BfsPerSource;
    case ImplId::kAllPairsFloyd: return impl::AllPairsFloyd;
    case ImplId::kSortedMerge: return Correct<impl::SortedMerge>;
    case ImplId::kBitsetIntersect: return impl::BitsetIntersect;
    case ImplId::kHopcroftKarp: return impl::HopcroftKarp;
    case ImplId::kAugmentingPath: return impl::AugmentingPath;
    case ImplId::kPerPairIntersect: return Correct<impl::PerPairIntersect>;
    case ImplId::kPrecomputedNeighborhoods: return impl::PrecomputedNeighborhoods;
    case ImplId::kDinitz: return impl::Dinitz;
    case ImplId::kPushRelabel: return Correct<impl::PushRelabel>;
  }
  return nullptr;
}

ExecResult RunImpl(ImplFn fn, const TargetInput& in, ProbeMap* probes,
                   std::chrono::milliseconds budget) {
  ExecContext ctx(probes, ExecContext::Clock::now() + budget);
  try {
    return fn(in, ctx);
  } catch (const HangSignal&) {
    return Hang{};
  } catch (const std::exception& e) {
    return Crash{e.what()};
  } catch (...) {
    return Crash{"unknown exception"};
  }
}

ExecResult RunTarget(ProblemId problem, ImplId impl, const TargetInput& in,
                     ProbeMap* probes, std::chrono::milliseconds budget) {
  if (ProblemOf(impl) != problem) {
    throw std::invalid_argument(std::string(ImplName(impl)) + " does not solve " +
                                std::string(ProblemName(problem)));
  }
  return RunImpl(ImplementationFor(impl), in, probes, budget);
}

std::unique_ptr<Target> MakeBuiltinTarget(ImplId id) {
  return std::make_unique<InProcessTarget>(std::string(ImplName(id)), ProblemOf(id),
                                           ImplementationFor(id));
}

std::string CheckOutputValidity(ProblemId problem, const TargetOutput& out,
                                const TargetInput& in) {
  if (ProblemOf(out) != problem) return "output belongs to another problem";
  const Graph& g = in.graph;
  switch (problem) {
    case ProblemId::kMst: {
      const auto& o = std::get<MstOut>(out);
      return CheckForest(o, g);
    }
    case ProblemId::kMm:
      return CheckMatching(std::get<MmOut>(out), g);
    case ProblemId::kScc:
      return CheckPartition(std::get<SccOut>(out).components, g.num_vertices);
    case ProblemId::kHc:
      if (static_cast<int32_t>(std::get<HcOut>(out).scores.size()) != g.num_vertices) {
        return "score map does not cover every vertex";
      }
      return "";
    default:
      return "";
  }
}

Comparison CompareOutputs(ProblemId problem, const TargetOutput& a,
                          const TargetOutput& b, const TargetInput* in) {
  if (ProblemOf(a) != problem || ProblemOf(b) != problem) {
    throw std::invalid_argument("ProblemMismatch: outputs are not " +
                                std::string(ProblemName(problem)) + " outputs");
  }
  switch (problem) {
    case ProblemId::kSpf: {
      const auto& x = std::get<SpfOut>(a);
      const auto& y = std::get<SpfOut>(b);
      if (x == y) return {};
      return Different(DescribeSpf(x) + " vs " + DescribeSpf(y));
    }
    case ProblemId::kMfv: {
      const Weight x = std::get<MfvOut>(a).value, y = std::get<MfvOut>(b).value;
      if (x == y) return {};
      return Different("flow " + std::to_string(x) + " vs " + std::to_string(y));
    }
    case ProblemId::kMst: {
      const auto& x = std::get<MstOut>(a);
      const auto& y = std::get<MstOut>(b);
      if (x.total_weight != y.total_weight) {
        return Different("total weight " + std::to_string(x.total_weight) + " vs " +
                         std::to_string(y.total_weight));
      }
      if (x.node_count != y.node_count) {
        return Different("node count " + std::to_string(x.node_count) + " vs " +
                         std::to_string(y.node_count));
      }
      if (in != nullptr) {
        if (std::string why = CheckForest(x, in->graph); !why.empty()) {
          return Different("first: " + why);
        }
        if (std::string why = CheckForest(y, in->graph); !why.empty()) {
          return Different("second: " + why);
        }
      }
      return {};
    }
    case ProblemId::kScc:
      return CompareComponents(std::get<SccOut>(a).components,
                               std::get<SccOut>(b).components);
    case ProblemId::kBcc:
      return CompareComponents(std::get<BccOut>(a).components,
                               std::get<BccOut>(b).components);
    case ProblemId::kMm: {
      const auto& x = std::get<MmOut>(a);
      const auto& y = std::get<MmOut>(b);
      if (x.matching.size() != y.matching.size()) {
        return Different("matching size " + std::to_string(x.matching.size()) +
                         " vs " + std::to_string(y.matching.size()));
      }
      if (in != nullptr) {
        if (std::string why = CheckMatching(x, in->graph); !why.empty()) {
          return Different("first: " + why);
        }
        if (std::string why = CheckMatching(y, in->graph); !why.empty()) {
          return Different("second: " + why);
        }
      }
      return {};
    }
    case ProblemId::kHc: {
      const auto& x = std::get<HcOut>(a).scores;
      const auto& y = std::get<HcOut>(b).scores;
      if (x.size() != y.size()) {
        return Different(std::to_string(x.size()) + " scores vs " +
                         std::to_string(y.size()));
      }
      for (size_t i = 0; i < x.size(); ++i) {
        if (!(std::fabs(x[i] - y[i]) <= kScoreTolerance)) {
          return Different("vertex " + std::to_string(i) + ": " +
                           std::to_string(x[i]) + " vs " + std::to_string(y[i]));
        }
      }
      return {};
    }
    case ProblemId::kJs:
      return CompareScores(std::get<JsOut>(a).scores, std::get<JsOut>(b).scores);
    case ProblemId::kAa:
      return CompareScores(std::get<AaOut>(a).scores, std::get<AaOut>(b).scores);
  }
  return {};
}

}  // namespace gdfuzz
