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

// Structure-preserving graph mutators. Every operator maps a profile-valid
// graph to a profile-valid graph; degenerate inputs are returned unchanged.

#ifndef GDFUZZ_MUTATION_H_
#define GDFUZZ_MUTATION_H_

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "gdfuzz/graph.h"
#include "gdfuzz/rng.h"

namespace gdfuzz {

enum class MutationKind {
  kAddVertex,
  kRemoveVertex,
  kAddEdge,
  kRemoveEdge,
  kUpdateWeight,
  kTrim,
  kCombine,
};

inline constexpr std::array<MutationKind, 7> kAllMutationKinds = {
    MutationKind::kAddVertex,  MutationKind::kRemoveVertex, MutationKind::kAddEdge,
    MutationKind::kRemoveEdge, MutationKind::kUpdateWeight, MutationKind::kTrim,
    MutationKind::kCombine};

std::string_view MutationKindName(MutationKind kind);

class DonorMissing : public std::invalid_argument {
 public:
  DonorMissing() : std::invalid_argument("DonorMissing: Combine needs a donor") {}
};

// Applies one operator. `donor` is required for kCombine only.
Graph ApplyMutation(MutationKind kind, const Graph& g, const Graph* donor,
                    const GraphProfile& profile, Rng& rng);

// In-place variant used by the stacked mutator.
void MutateInPlace(MutationKind kind, Graph& g, const Graph* donor,
                   const GraphProfile& profile, Rng& rng);

// Yields a donor graph for Combine, typically a corpus draw.
using DonorSampler = std::function<const Graph&(Rng&)>;

inline constexpr int kDefaultMaxStack = 128;

// AFL-style stacked mutation: n = 2^(1 + u), u uniform in 0..6, clamped to
// max_stack, then n uniformly chosen operators applied in sequence.
Graph StackedMutate(const Graph& g, const DonorSampler& sampler,
                    const GraphProfile& profile, Rng& rng,
                    int max_stack = kDefaultMaxStack);

// Number of operators the next StackedMutate call on `rng` would apply.
int DrawStackSize(Rng& rng, int max_stack);

}  // namespace gdfuzz

#endif  // GDFUZZ_MUTATION_H_
