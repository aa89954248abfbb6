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


// The fuzzing loop: select a seed, assign energy, mutate, run both sides,
// classify, grow the corpus. Also single-graph replay.

#ifndef GDFUZZ_ENGINE_H_
#define GDFUZZ_ENGINE_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gdfuzz/corpus.h"
#include "gdfuzz/feedback.h"
#include "gdfuzz/graph.h"
#include "gdfuzz/mutants.h"
#include "gdfuzz/mutation.h"
#include "gdfuzz/problem.h"
#include "gdfuzz/targets.h"

namespace gdfuzz {

using ImplOrMutant = std::variant<ImplId, MutantId>;

std::string ImplOrMutantName(const ImplOrMutant& x);

struct CampaignConfig {
  ProblemId problem = ProblemId::kSpf;
  ImplOrMutant impl_a = ImplId::kBellmanFord;
  ImplId impl_b = ImplId::kGoldbergRadzik;
  // When set, side B is this adapter command instead of impl_b.
  std::vector<std::string> adapter_b;
  FeedbackMode mode = FeedbackMode::kAlgo;
  int energy = 100;
  int max_stack = kDefaultMaxStack;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<int64_t> exec_limit;
  uint64_t rng_seed = 1;
  std::chrono::milliseconds exec_budget = kDefaultExecBudget;
  std::filesystem::path seed_corpus_path;  // empty: one single-vertex graph
  std::filesystem::path out_path;          // empty: nothing written
  bool stop_on_bug = false;
  int64_t sample_every = 1000;
};

// Throws ConfigInvalid when the config cannot run.
class ConfigInvalid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
void ValidateConfig(const CampaignConfig& cfg);

enum class BugKind { kCrash, kHang, kDiscrepancy };
std::string_view BugKindName(BugKind k);  // "crash", "hang", "discrepancy"

struct BugRecord {
  BugKind kind = BugKind::kDiscrepancy;
  Graph graph;
  EndpointPair endpoints;
  ExecResult result_a;
  ExecResult result_b;
  std::string explanation;
  int64_t found_at_exec = 0;  // 1-based
  int64_t found_at_ms = 0;
  std::string graph_file;  // relative to out_path, empty when not written
};

enum class EndedBy { kTimeLimit, kExecLimit, kAbort, kBugFound };
std::string_view EndedByName(EndedBy e);

struct CampaignReport {
  CampaignConfig config;
  int64_t total_execs = 0;
  double execs_per_second = 0.0;
  int64_t elapsed_ms = 0;
  std::vector<std::pair<int64_t, int64_t>> corpus_sizes;  // (t_ms, size)
  std::vector<BugRecord> bugs;
  EndedBy ended_by = EndedBy::kExecLimit;
  int64_t initial_corpus_size = 0;
  int64_t final_corpus_size = 0;
  // Chained hash of every generated graph, in order.
  uint64_t graph_sequence_hash = 0;
  // Hash of the final corpus contents, in entry order.
  uint64_t corpus_hash = 0;
};

// Steps of the loop, reported in order to a trace observer.
enum class TraceStep {
  kChooseNext,
  kAssignEnergy,
  kMutate,
  kRunA,
  kRunB,
  kBug,
  kCompare,
  kIsInteresting,
  kAddIfNovel,
};
using TraceFn = std::function<void(TraceStep)>;

struct CampaignHooks {
  TraceFn trace;
  const std::atomic<bool>* abort = nullptr;
  // Replaces the targets built from the config (test doubles).
  Target* target_a = nullptr;
  Target* target_b = nullptr;
  // Replaces the seed corpus loaded from the config.
  std::vector<Graph> seeds;
};

// Runs a campaign. Throws ConfigInvalid or SeedLoadError.
CampaignReport Fuzz(const CampaignConfig& cfg, const CampaignHooks& hooks = {});

// Digest of everything in a report that does not depend on the wall clock.
uint64_t DeterministicDigest(const CampaignReport& report);

enum class Classification { kNoBug, kCrash, kHang, kDiscrepancy };
std::string_view ClassificationName(Classification c);

struct ReplayResult {
  Classification classification = Classification::kNoBug;
  ExecResult result_a;
  ExecResult result_b;
  std::string explanation;
};

ReplayResult Replay(ProblemId problem, Target& a, Target& b, const Graph& g,
                    std::chrono::milliseconds budget = kDefaultExecBudget);
ReplayResult Replay(ProblemId problem, const ImplOrMutant& a, ImplId b,
                    const Graph& g,
                    std::chrono::milliseconds budget = kDefaultExecBudget);

std::unique_ptr<Target> MakeTarget(ProblemId problem, const ImplOrMutant& x);

// Profile the campaign's graphs are drawn from (SPF narrows to non-negative
// weights when Dijkstra takes part).
GraphProfile CampaignProfile(const CampaignConfig& cfg);

}  // namespace gdfuzz

#endif  // GDFUZZ_ENGINE_H_
