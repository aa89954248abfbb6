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


#include "gdfuzz/seedgen.h"

#include <stdexcept>

#include "gdfuzz/rng.h"

namespace gdfuzz {

std::vector<Graph> GenerateSeeds(const SeedGenSpec& spec) {
  const GraphProfile p = ProfileFor(spec.problem);
  if (spec.count < 1 || spec.min_vertices < 1 ||
      spec.min_vertices > spec.max_vertices || spec.max_vertices > p.max_vertices) {
    throw std::invalid_argument("invalid seed generation spec");
  }
  Rng rng(spec.rng_seed);
  std::vector<Graph> out;
  for (int i = 0; i < spec.count; ++i) {
    Graph g;
    g.directed = p.directed;
    g.num_vertices = static_cast<VertexId>(rng.Uniform(spec.min_vertices, spec.max_vertices));
    const double prob = 0.1 + 0.4 * rng.Unit();
    for (VertexId u = 0; u < g.num_vertices; ++u) {
      for (VertexId v = p.directed ? 0 : u + 1; v < g.num_vertices; ++v) {
        if (u == v || !p.EdgeAllowed(u, v)) continue;
        if (rng.Unit() >= prob) continue;
        const Weight w = p.weighted ? rng.Uniform(p.weight_min, p.weight_max) : 1;
        g.edges.push_back({u, v, w});
      }
    }
    while (static_cast<int32_t>(g.edges.size()) > p.max_edges) {
      g.edges.erase(g.edges.begin() + static_cast<int64_t>(rng.Below(g.edges.size())));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gdfuzz
