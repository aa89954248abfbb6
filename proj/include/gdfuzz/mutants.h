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


// Fault-injection catalog. Each mutant is its parent implementation with one
// localized defect switched on (see the `fault` flag in the parent's source).

#ifndef GDFUZZ_MUTANTS_H_
#define GDFUZZ_MUTANTS_H_

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "gdfuzz/problem.h"
#include "gdfuzz/targets.h"

namespace gdfuzz {

enum class MutantId {
  kGrZeroCycle,       // Goldberg-Radzik treats zero-weight cycles as negative
  kSccStackSkip,      // Tarjan skips one low-link update on deep back edges
  kMstUfOffByOne,     // Kruskal union-find links a non-root on rank ties
  kJsIgnoreSelfLoop,  // Jaccard drops self-loops from neighborhoods
  kAaSelfLoopWrong,   // Adamic-Adar counts a self-loop once in the degree
  kMfvHang,           // push-relabel livelocks without current-arc resets
};

inline constexpr std::array<MutantId, 6> kAllMutants = {
    MutantId::kGrZeroCycle,      MutantId::kSccStackSkip,
    MutantId::kMstUfOffByOne,    MutantId::kJsIgnoreSelfLoop,
    MutantId::kAaSelfLoopWrong,  MutantId::kMfvHang};

std::string_view MutantName(MutantId m);  // e.g. "GR_ZERO_CYCLE"
std::optional<MutantId> ParseMutant(std::string_view name);

ImplId ParentOf(MutantId m);
ProblemId ProblemOf(MutantId m);

// The implementation a mutant is fuzzed against by default.
ImplId DefaultPartner(MutantId m);

ImplFn MutantImplementation(MutantId m);

class MutantProblemMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MutantProblemMismatch when `m` does not belong to `problem`.
std::unique_ptr<Target> Instantiate(ProblemId problem, MutantId m);

}  // namespace gdfuzz

#endif  // GDFUZZ_MUTANTS_H_
