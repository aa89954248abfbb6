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

// The graph data model shared by every component: the corpus stores nothing
// but Graph values, mutators transform them, and targets consume them.
//
// Text format (one graph per `.graph` file, also the adapter wire format):
//
//   D|U N M\n
//   u v w\n      (M lines, canonical edge order)
//
// Canonical order: edges sorted by (u, v); undirected edges are stored with
// u <= v.

#ifndef GDFUZZ_GRAPH_H_
#define GDFUZZ_GRAPH_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gdfuzz {

using VertexId = int32_t;
using Weight = int64_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Graph {
  bool directed = false;
  int32_t num_vertices = 0;
  std::vector<Edge> edges;

  size_t num_edges() const { return edges.size(); }

  // Single vertex, no edges: the default initial corpus.
  static Graph SingleVertex(bool directed) { return Graph{directed, 1, {}}; }

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Validity constraints a problem imposes on its inputs. Bipartiteness uses the
// vertex-id parity partition.
struct GraphProfile {
  bool directed = false;
  bool weighted = false;
  Weight weight_min = 1;
  Weight weight_max = 1;
  bool allow_self_loops = false;
  bool require_bipartite = false;
  int32_t max_vertices = 64;
  int32_t max_edges = 512;

  bool EdgeAllowed(VertexId u, VertexId v) const {
    if (u == v && !allow_self_loops) return false;
    if (require_bipartite && ((u ^ v) & 1) == 0) return false;
    return true;
  }
};

struct EndpointPair {
  VertexId s = 0;
  VertexId t = 0;

  friend bool operator==(const EndpointPair&, const EndpointPair&) = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kMalformedHeader, kMalformedEdge, kVertexOutOfRange,
                    kDuplicateEdge, kCountMismatch };

  ParseError(Kind kind, int line, const std::string& what);

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

struct Violation {
  enum class Kind {
    kDirectedness,
    kVertexCap,
    kEdgeCap,
    kVertexRange,
    kDuplicateEdge,
    kNonCanonical,
    kSelfLoop,
    kWeightRange,
    kBipartite,
  };
  Kind kind;
  std::string detail;
};

std::string_view ViolationKindName(Violation::Kind kind);

std::string Serialize(const Graph& g);
Graph Parse(std::string_view text);

// Sorts edges into canonical order (and orients undirected edges u <= v).
// Does not remove duplicates.
void Canonicalize(Graph& g);

// Empty result iff `g` satisfies every constraint of `profile` and the Graph
// invariants.
std::vector<Violation> Validate(const Graph& g, const GraphProfile& profile);
inline bool IsValid(const Graph& g, const GraphProfile& profile) {
  return Validate(g, profile).empty();
}

// s = max-degree vertex, t = max-degree vertex among the rest; ties go to the
// lowest id. Directed graphs use in+out degree; self-loops count twice.
// Throws std::invalid_argument on an empty graph.
EndpointPair DeriveEndpoints(const Graph& g);

std::vector<int32_t> Degrees(const Graph& g);

// 64-bit FNV-1a; stable across platforms, used for report hashes.
uint64_t Fnv1a(std::string_view bytes, uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace gdfuzz

#endif  // GDFUZZ_GRAPH_H_
