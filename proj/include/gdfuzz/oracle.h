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

// Exhaustive ground truth for small graphs. Shares no code with the reference
// implementations: every answer comes from enumeration (paths, cycles, edge
// subsets, cuts) or from a definition applied literally.

#ifndef GDFUZZ_ORACLE_H_
#define GDFUZZ_ORACLE_H_

#include <stdexcept>
#include <vector>

#include "gdfuzz/problem.h"
#include "gdfuzz/targets.h"

namespace gdfuzz {

inline constexpr int32_t kOracleMaxVertices = 8;
inline constexpr int32_t kOracleMaxEdges = 16;

class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Throws OracleTooLarge when N > 8 or M > 16.
TargetOutput BruteForceOracle(ProblemId problem, const TargetInput& in);

// Every simple cycle of `g` as a vertex sequence (directed cycles for directed
// graphs; undirected cycles of length >= 3 otherwise, each reported once).
std::vector<std::vector<VertexId>> EnumerateSimpleCycles(const Graph& g);

// Sum of edge weights along a closed vertex sequence.
Weight CycleWeight(const Graph& g, const std::vector<VertexId>& cycle);

}  // namespace gdfuzz

#endif  // GDFUZZ_ORACLE_H_
