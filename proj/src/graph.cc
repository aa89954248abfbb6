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

#include "gdfuzz/graph.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gdfuzz {
namespace {

bool EdgeLess(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

// Splits on single spaces; rejects empty fields so that the format stays
// bit-exact.
bool SplitFields(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  size_t pos = 0;
  while (true) {
    size_t next = line.find(' ', pos);
    std::string_view field = line.substr(pos, next - pos);
    if (field.empty()) return false;
    out.push_back(field);
    if (next == std::string_view::npos) return true;
    pos = next + 1;
  }
}

template <typename T>
bool ParseInt(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

std::string_view ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kDirectedness: return "Directedness";
    case Violation::Kind::kVertexCap: return "VertexCap";
    case Violation::Kind::kEdgeCap: return "EdgeCap";
    case Violation::Kind::kVertexRange: return "VertexRange";
    case Violation::Kind::kDuplicateEdge: return "DuplicateEdge";
    case Violation::Kind::kNonCanonical: return "NonCanonical";
    case Violation::Kind::kSelfLoop: return "SelfLoop";
    case Violation::Kind::kWeightRange: return "WeightRange";
    case Violation::Kind::kBipartite: return "Bipartite";
  }
  return "Unknown";
}

std::string Serialize(const Graph& g) {
  std::string out;
  out.reserve(16 + g.edges.size() * 12);
  out += g.directed ? 'D' : 'U';
  out += ' ';
  out += std::to_string(g.num_vertices);
  out += ' ';
  out += std::to_string(g.edges.size());
  out += '\n';
  for (const Edge& e : g.edges) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += std::to_string(e.w);
    out += '\n';
  }
  return out;
}

Graph Parse(std::string_view text) {
  using K = ParseError::Kind;
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(K::kMalformedHeader, 1, "empty input");

  std::vector<std::string_view> fields;
  if (!SplitFields(lines[0], fields) || fields.size() != 3 ||
      (fields[0] != "D" && fields[0] != "U")) {
    throw ParseError(K::kMalformedHeader, 1, "expected 'D|U N M'");
  }
  Graph g;
  g.directed = fields[0] == "D";
  int64_t n = 0, m = 0;
  if (!ParseInt(fields[1], n) || !ParseInt(fields[2], m) || n < 0 || m < 0 ||
      n > (int64_t{1} << 30)) {
    throw ParseError(K::kMalformedHeader, 1, "bad vertex or edge count");
  }
  g.num_vertices = static_cast<int32_t>(n);
  if (static_cast<int64_t>(lines.size()) - 1 != m) {
    throw ParseError(K::kCountMismatch, 1,
                     "header declares " + std::to_string(m) + " edges, body has " +
                         std::to_string(lines.size() - 1));
  }
  g.edges.reserve(m);
  for (size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    Edge e;
    if (!SplitFields(lines[i], fields) || fields.size() != 3 ||
        !ParseInt(fields[0], e.u) || !ParseInt(fields[1], e.v) ||
        !ParseInt(fields[2], e.w)) {
      throw ParseError(K::kMalformedEdge, line_no, "expected 'u v w'");
    }
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices) {
      throw ParseError(K::kVertexOutOfRange, line_no,
                       "vertex out of range for N=" + std::to_string(n));
    }
    g.edges.push_back(e);
  }
  // Locate duplicates by original line number before canonicalizing.
  std::vector<std::pair<Edge, int>> keyed;
  keyed.reserve(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    Edge e = g.edges[i];
    if (!g.directed && e.u > e.v) std::swap(e.u, e.v);
    keyed.emplace_back(e, static_cast<int>(i) + 2);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return EdgeLess(a.first, b.first);
  });
  for (size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first.u == keyed[i - 1].first.u &&
        keyed[i].first.v == keyed[i - 1].first.v) {
      throw ParseError(K::kDuplicateEdge,
                       std::max(keyed[i].second, keyed[i - 1].second),
                       "duplicate edge (" + std::to_string(keyed[i].first.u) +
                           "," + std::to_string(keyed[i].first.v) + ")");
    }
  }
  for (size_t i = 0; i < keyed.size(); ++i) g.edges[i] = keyed[i].first;
  return g;
}

void Canonicalize(Graph& g) {
  if (!g.directed) {
    for (Edge& e : g.edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
  }
  std::stable_sort(g.edges.begin(), g.edges.end(), EdgeLess);
}

std::vector<Violation> Validate(const Graph& g, const GraphProfile& p) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  auto edge_str = [](const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
           std::to_string(e.w) + ")";
  };
  if (g.directed != p.directed) {
    out.push_back({K::kDirectedness, p.directed ? "profile requires a directed graph"
                                                : "profile requires an undirected graph"});
  }
  if (g.num_vertices > p.max_vertices) {
    out.push_back({K::kVertexCap, std::to_string(g.num_vertices) + " > " +
                                      std::to_string(p.max_vertices)});
  }
  if (static_cast<int64_t>(g.edges.size()) > p.max_edges) {
    out.push_back({K::kEdgeCap, std::to_string(g.edges.size()) + " > " +
                                    std::to_string(p.max_edges)});
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices) {
      out.push_back({K::kVertexRange, edge_str(e)});
      continue;
    }
    if (!g.directed && e.u > e.v) out.push_back({K::kNonCanonical, edge_str(e)});
    if (i > 0) {
      const Edge& prev = g.edges[i - 1];
      if (prev.u == e.u && prev.v == e.v) {
        out.push_back({K::kDuplicateEdge, edge_str(e)});
      } else if (!EdgeLess(prev, e)) {
        out.push_back({K::kNonCanonical, edge_str(e)});
      }
    }
    if (e.u == e.v && !p.allow_self_loops) out.push_back({K::kSelfLoop, edge_str(e)});
    const Weight lo = p.weighted ? p.weight_min : 1;
    const Weight hi = p.weighted ? p.weight_max : 1;
    if (e.w < lo || e.w > hi) out.push_back({K::kWeightRange, edge_str(e)});
    if (p.require_bipartite && ((e.u ^ e.v) & 1) == 0) {
      out.push_back({K::kBipartite, edge_str(e)});
    }
  }
  return out;
}

std::vector<int32_t> Degrees(const Graph& g) {
  std::vector<int32_t> deg(g.num_vertices, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

EndpointPair DeriveEndpoints(const Graph& g) {
  if (g.num_vertices <= 0) throw std::invalid_argument("EmptyGraph: N == 0");
  if (g.num_vertices == 1) return {0, 0};
  const std::vector<int32_t> deg = Degrees(g);
  VertexId s = 0;
  for (VertexId v = 1; v < g.num_vertices; ++v) {
    if (deg[v] > deg[s]) s = v;
  }
  VertexId t = s == 0 ? 1 : 0;
  for (VertexId v = 0; v < g.num_vertices; ++v) {
    if (v != s && deg[v] > deg[t]) t = v;
  }
  return {s, t};
}

uint64_t Fnv1a(std::string_view bytes, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gdfuzz
