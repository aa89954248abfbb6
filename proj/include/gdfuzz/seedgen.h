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


// Initial seed corpora: Erdos-Renyi graphs repaired to a problem profile.

#ifndef GDFUZZ_SEEDGEN_H_
#define GDFUZZ_SEEDGEN_H_

#include <cstdint>
#include <vector>

#include "gdfuzz/graph.h"
#include "gdfuzz/problem.h"

namespace gdfuzz {

struct SeedGenSpec {
  ProblemId problem = ProblemId::kSpf;
  int count = 10;
  uint64_t rng_seed = 1;
  int32_t min_vertices = 2;
  int32_t max_vertices = 6;
};

// Each graph draws N uniformly from the size range and an edge probability
// p uniformly from [0.1, 0.5], then keeps each profile-allowed pair (no
// self-loops) with probability p. Edges beyond the profile cap are dropped at
// random. Throws std::invalid_argument on an empty or out-of-profile range.
std::vector<Graph> GenerateSeeds(const SeedGenSpec& spec);

}  // namespace gdfuzz

#endif  // GDFUZZ_SEEDGEN_H_
