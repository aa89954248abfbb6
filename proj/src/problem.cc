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

#include "gdfuzz/problem.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <span>
#include <string_view>

namespace gdfuzz {
namespace {

constexpr std::array<std::string_view, 9> kProblemNames = {
    "SPF", "MST", "SCC", "BCC", "HC", "JS", "MM", "AA", "MFV"};

constexpr std::array<std::string_view, kNumImpls> kImplNames = {
    "BellmanFord",    "GoldbergRadzik",  "Dijkstra",
    "Prim",           "Kruskal",         "Boruvka",
    "TarjanIterative", "Kosaraju",       "HopcroftTarjan",
    "BruteBlocks",    "BfsPerSource",    "AllPairsFloyd",
    "SortedMerge",    "BitsetIntersect", "HopcroftKarp",
    "AugmentingPath", "PerPairIntersect", "PrecomputedNeighborhoods",
    "Dinitz",         "PushRelabel"};

constexpr ImplId kSpfImpls[] = {ImplId::kBellmanFord, ImplId::kGoldbergRadzik,
                                ImplId::kDijkstra};
constexpr ImplId kMstImpls[] = {ImplId::kPrim, ImplId::kKruskal, ImplId::kBoruvka};
constexpr ImplId kSccImpls[] = {ImplId::kTarjanIterative, ImplId::kKosaraju};
constexpr ImplId kBccImpls[] = {ImplId::kHopcroftTarjan, ImplId::kBruteBlocks};
constexpr ImplId kHcImpls[] = {ImplId::kBfsPerSource, ImplId::kAllPairsFloyd};
constexpr ImplId kJsImpls[] = {ImplId::kSortedMerge, ImplId::kBitsetIntersect};
constexpr ImplId kMmImpls[] = {ImplId::kHopcroftKarp, ImplId::kAugmentingPath};
constexpr ImplId kAaImpls[] = {ImplId::kPerPairIntersect,
                               ImplId::kPrecomputedNeighborhoods};
constexpr ImplId kMfvImpls[] = {ImplId::kDinitz, ImplId::kPushRelabel};

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

}  // namespace

std::string_view ProblemName(ProblemId p) {
  return kProblemNames[static_cast<size_t>(p)];
}

std::optional<ProblemId> ParseProblem(std::string_view name) {
  for (size_t i = 0; i < kProblemNames.size(); ++i) {
    if (EqualsIgnoreCase(name, kProblemNames[i])) return static_cast<ProblemId>(i);
  }
  return std::nullopt;
}

std::string_view ImplName(ImplId id) { return kImplNames[static_cast<size_t>(id)]; }

std::optional<ImplId> ParseImpl(std::string_view name) {
  for (size_t i = 0; i < kImplNames.size(); ++i) {
    if (EqualsIgnoreCase(name, kImplNames[i])) return static_cast<ImplId>(i);
  }
  return std::nullopt;
}

std::span<const ImplId> ImplsOf(ProblemId p) {
  switch (p) {
    case ProblemId::kSpf: return kSpfImpls;
    case ProblemId::kMst: return kMstImpls;
    case ProblemId::kScc: return kSccImpls;
    case ProblemId::kBcc: return kBccImpls;
    case ProblemId::kHc: return kHcImpls;
    case ProblemId::kJs: return kJsImpls;
    case ProblemId::kMm: return kMmImpls;
    case ProblemId::kAa: return kAaImpls;
    case ProblemId::kMfv: return kMfvImpls;
  }
  return {};
}

ProblemId ProblemOf(ImplId id) {
  for (ProblemId p : kAllProblems) {
    for (ImplId i : ImplsOf(p)) {
      if (i == id) return p;
    }
  }
  return ProblemId::kSpf;  // unreachable for valid ids
}

std::pair<ImplId, ImplId> DefaultPair(ProblemId p) {
  std::span<const ImplId> impls = ImplsOf(p);
  return {impls[0], impls[1]};
}

GraphProfile ProfileFor(ProblemId p) {
  GraphProfile prof;
  switch (p) {
    case ProblemId::kSpf:
      prof.directed = true;
      prof.weighted = true;
      prof.weight_min = -8;
      prof.weight_max = 64;
      break;
    case ProblemId::kMst:
      prof.weighted = true;
      prof.weight_min = 1;
      prof.weight_max = 64;
      break;
    case ProblemId::kScc:
      prof.directed = true;
      break;
    case ProblemId::kBcc:
    case ProblemId::kHc:
      break;
    case ProblemId::kJs:
    case ProblemId::kAa:
      prof.allow_self_loops = true;
      break;
    case ProblemId::kMm:
      prof.require_bipartite = true;
      break;
    case ProblemId::kMfv:
      prof.directed = true;
      prof.weighted = true;
      prof.weight_min = 1;
      prof.weight_max = 64;
      break;
  }
  return prof;
}

GraphProfile ProfileFor(ProblemId p, std::span<const ImplId> impls) {
  GraphProfile prof = ProfileFor(p);
  if (p == ProblemId::kSpf &&
      std::find(impls.begin(), impls.end(), ImplId::kDijkstra) != impls.end()) {
    prof.weight_min = 0;
  }
  return prof;
}

void CanonicalizeComponents(Components& c) {
  for (auto& comp : c) std::sort(comp.begin(), comp.end());
  std::sort(c.begin(), c.end());
}

}  // namespace gdfuzz
