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

// Internal entry points of the reference implementations. The functions that
// take a `fault` flag are the parents of the mutant catalog: with fault=false
// they are the correct implementation; fault=true enables exactly one
// localized defect, documented where the flag is read.

#ifndef GDFUZZ_SRC_TARGETS_IMPLS_H_
#define GDFUZZ_SRC_TARGETS_IMPLS_H_

#include <vector>

#include "gdfuzz/targets.h"

namespace gdfuzz::impl {

TargetOutput BellmanFord(const TargetInput& in, ExecContext& ctx);
TargetOutput GoldbergRadzik(const TargetInput& in, ExecContext& ctx, bool fault);
TargetOutput Dijkstra(const TargetInput& in, ExecContext& ctx);

TargetOutput Prim(const TargetInput& in, ExecContext& ctx);
TargetOutput Kruskal(const TargetInput& in, ExecContext& ctx, bool fault);
TargetOutput Boruvka(const TargetInput& in, ExecContext& ctx);

TargetOutput TarjanIterative(const TargetInput& in, ExecContext& ctx, bool fault);
TargetOutput Kosaraju(const TargetInput& in, ExecContext& ctx);

TargetOutput HopcroftTarjan(const TargetInput& in, ExecContext& ctx);
TargetOutput BruteBlocks(const TargetInput& in, ExecContext& ctx);

TargetOutput BfsPerSource(const TargetInput& in, ExecContext& ctx);
TargetOutput AllPairsFloyd(const TargetInput& in, ExecContext& ctx);

TargetOutput SortedMerge(const TargetInput& in, ExecContext& ctx, bool fault);
TargetOutput BitsetIntersect(const TargetInput& in, ExecContext& ctx);

TargetOutput HopcroftKarp(const TargetInput& in, ExecContext& ctx);
TargetOutput AugmentingPath(const TargetInput& in, ExecContext& ctx);

TargetOutput PerPairIntersect(const TargetInput& in, ExecContext& ctx, bool fault);
TargetOutput PrecomputedNeighborhoods(const TargetInput& in, ExecContext& ctx);

TargetOutput Dinitz(const TargetInput& in, ExecContext& ctx);
TargetOutput PushRelabel(const TargetInput& in, ExecContext& ctx, bool fault);

// Compressed out-adjacency (both directions for undirected graphs), neighbors
// in ascending order.
struct Csr {
  std::vector<int32_t> offsets;  // size N + 1
  std::vector<VertexId> targets;
  std::vector<Weight> weights;

  int32_t begin(VertexId v) const { return offsets[v]; }
  int32_t end(VertexId v) const { return offsets[v + 1]; }
};

Csr BuildCsr(const Graph& g, bool reverse = false);

}  // namespace gdfuzz::impl

#endif  // GDFUZZ_SRC_TARGETS_IMPLS_H_
