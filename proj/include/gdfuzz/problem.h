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

// Problem and implementation identifiers, per-problem input profiles, and the
// output domains targets produce.

#ifndef GDFUZZ_PROBLEM_H_
#define GDFUZZ_PROBLEM_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gdfuzz/graph.h"

namespace gdfuzz {

// The order matches the TargetOutput variant alternatives.
enum class ProblemId { kSpf, kMst, kScc, kBcc, kHc, kJs, kMm, kAa, kMfv };

inline constexpr std::array<ProblemId, 9> kAllProblems = {
    ProblemId::kSpf, ProblemId::kMst, ProblemId::kScc,
    ProblemId::kBcc, ProblemId::kHc,  ProblemId::kJs,
    ProblemId::kMm,  ProblemId::kAa,  ProblemId::kMfv};

enum class ImplId {
  kBellmanFord,
  kGoldbergRadzik,
  kDijkstra,
  kPrim,
  kKruskal,
  kBoruvka,
  kTarjanIterative,
  kKosaraju,
  kHopcroftTarjan,
  kBruteBlocks,
  kBfsPerSource,
  kAllPairsFloyd,
  kSortedMerge,
  kBitsetIntersect,
  kHopcroftKarp,
  kAugmentingPath,
  kPerPairIntersect,
  kPrecomputedNeighborhoods,
  kDinitz,
  kPushRelabel,
};

inline constexpr int kNumImpls = 20;

// Upper-case protocol names ("SPF", "MST", ...).
std::string_view ProblemName(ProblemId p);
// Case-insensitive.
std::optional<ProblemId> ParseProblem(std::string_view name);

std::string_view ImplName(ImplId id);
// Case-insensitive.
std::optional<ImplId> ParseImpl(std::string_view name);

ProblemId ProblemOf(ImplId id);
std::span<const ImplId> ImplsOf(ProblemId p);
std::pair<ImplId, ImplId> DefaultPair(ProblemId p);

GraphProfile ProfileFor(ProblemId p);
// Profile of a campaign running `impls`: SPF narrows to non-negative weights
// when Dijkstra takes part.
GraphProfile ProfileFor(ProblemId p, std::span<const ImplId> impls);

// ---------------------------------------------------------------------------
// Output domains.

struct SpfOut {
  enum class Kind { kLength, kUnreachable, kNegativeCycle };
  Kind kind = Kind::kLength;
  Weight length = 0;  // meaningful for kLength only

  static SpfOut Length(Weight l) { return {Kind::kLength, l}; }
  static SpfOut Unreachable() { return {Kind::kUnreachable, 0}; }
  static SpfOut NegativeCycle() { return {Kind::kNegativeCycle, 0}; }

  friend bool operator==(const SpfOut&, const SpfOut&) = default;
};

struct MstOut {
  std::vector<Edge> edges;  // the spanning forest
  Weight total_weight = 0;
  int32_t node_count = 0;

  friend bool operator==(const MstOut&, const MstOut&) = default;
};

using Components = std::vector<std::vector<VertexId>>;

struct SccOut {
  Components components;
  friend bool operator==(const SccOut&, const SccOut&) = default;
};

// Blocks as edge-induced vertex sets; isolated vertices belong to none.
struct BccOut {
  Components components;
  friend bool operator==(const BccOut&, const BccOut&) = default;
};

struct HcOut {
  std::vector<double> scores;  // indexed by vertex id
  friend bool operator==(const HcOut&, const HcOut&) = default;
};

struct PairScore {
  VertexId u = 0;
  VertexId v = 0;  // u < v
  double score = 0.0;
  friend bool operator==(const PairScore&, const PairScore&) = default;
};

struct JsOut {
  std::vector<PairScore> scores;
  friend bool operator==(const JsOut&, const JsOut&) = default;
};

struct MmOut {
  std::vector<std::pair<VertexId, VertexId>> matching;
  friend bool operator==(const MmOut&, const MmOut&) = default;
};

struct AaOut {
  std::vector<PairScore> scores;
  friend bool operator==(const AaOut&, const AaOut&) = default;
};

struct MfvOut {
  Weight value = 0;
  friend bool operator==(const MfvOut&, const MfvOut&) = default;
};

using TargetOutput = std::variant<SpfOut, MstOut, SccOut, BccOut, HcOut, JsOut,
                                  MmOut, AaOut, MfvOut>;

inline ProblemId ProblemOf(const TargetOutput& out) {
  return static_cast<ProblemId>(out.index());
}

// Sorts each component and then the list of components.
void CanonicalizeComponents(Components& c);

}  // namespace gdfuzz

#endif  // GDFUZZ_PROBLEM_H_
