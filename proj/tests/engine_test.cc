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


#include "gdfuzz/engine.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "gdfuzz/report.h"
#include "gdfuzz/signal.h"
#include "json.hpp"

namespace gdfuzz {
namespace {

namespace fs = std::filesystem;

CampaignConfig Config(ProblemId p, FeedbackMode mode, int64_t execs, uint64_t seed = 1) {
  CampaignConfig cfg;
  cfg.problem = p;
  const auto [a, b] = DefaultPair(p);
  cfg.impl_a = a;
  cfg.impl_b = b;
  cfg.mode = mode;
  cfg.exec_limit = execs;
  cfg.rng_seed = seed;
  return cfg;
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gdfuzz_engine_" + name);
  fs::remove_all(dir);
  return dir;
}

// Wraps a built-in target; fails on chosen inputs and records signals.
class StubTarget : public Target {
 public:
  enum class Fault { kNone, kCrash, kHang };

  StubTarget(ImplId impl, Fault fault, VertexId trigger_n)
      : inner_(MakeBuiltinTarget(impl)), fault_(fault), trigger_n_(trigger_n) {}

  std::string Name() const override { return "stub"; }
  ProblemId problem() const override { return inner_->problem(); }
  ExecResult Execute(const TargetInput& in, ProbeMap* probes,
                     std::chrono::milliseconds budget) override {
    ++calls_;
    if (fault_ != Fault::kNone && in.graph.num_vertices == trigger_n_) {
      if (fault_ == Fault::kCrash) return Crash{"stub crash"};
      return Hang{};
    }
    ExecResult r = inner_->Execute(in, probes, budget);
    if (auto* out = std::get_if<TargetOutput>(&r)) {
      signals_.insert(ExtractSignal(problem(), *out));
    }
    return r;
  }

  int64_t calls() const { return calls_; }
  const std::set<SignalKey>& signals() const { return signals_; }

 private:
  std::unique_ptr<Target> inner_;
  Fault fault_;
  VertexId trigger_n_;
  int64_t calls_ = 0;
  std::set<SignalKey> signals_;
};

TEST(ConfigTest, Validation) {
  CampaignConfig cfg = Config(ProblemId::kSpf, FeedbackMode::kAlgo, 10);
  EXPECT_NO_THROW(ValidateConfig(cfg));
  CampaignConfig same = cfg;
  same.impl_b = ImplId::kBellmanFord;
  EXPECT_THROW(ValidateConfig(same), ConfigInvalid);
  CampaignConfig wrong = cfg;
  wrong.impl_b = ImplId::kKosaraju;
  EXPECT_THROW(ValidateConfig(wrong), ConfigInvalid);
  CampaignConfig mutant = cfg;
  mutant.impl_a = MutantId::kSccStackSkip;
  EXPECT_THROW(ValidateConfig(mutant), ConfigInvalid);
  CampaignConfig unlimited = cfg;
  unlimited.exec_limit.reset();
  EXPECT_THROW(ValidateConfig(unlimited), ConfigInvalid);
  CampaignConfig zero = cfg;
  zero.energy = 0;
  EXPECT_THROW(ValidateConfig(zero), ConfigInvalid);
}

TEST(FuzzTest, InvalidSeedIsRejected) {
  CampaignConfig cfg = Config(ProblemId::kMm, FeedbackMode::kAlgo, 10);
  CampaignHooks hooks;
  Graph odd = Graph::SingleVertex(false);
  odd.num_vertices = 2;
  odd.edges = {{0, 0, 1}};
  hooks.seeds = {odd};
  EXPECT_THROW(Fuzz(cfg, hooks), SeedLoadError);
}

TEST(FuzzTest, NoneModeKeepsCorpusAndFindsNothing) {
  for (ProblemId p : kAllProblems) {
    const CampaignReport r = Fuzz(Config(p, FeedbackMode::kNone, 10000));
    EXPECT_EQ(r.total_execs, 10000);
    EXPECT_TRUE(r.bugs.empty()) << ProblemName(p);
    EXPECT_EQ(r.final_corpus_size, r.initial_corpus_size);
    for (const auto& [t, size] : r.corpus_sizes) EXPECT_EQ(size, 1);
    EXPECT_EQ(r.ended_by, EndedBy::kExecLimit);
  }
}

TEST(FuzzTest, CorpusSizesAreSampledAndMonotone) {
  const CampaignReport r = Fuzz(Config(ProblemId::kScc, FeedbackMode::kAlgo, 5500));
  ASSERT_EQ(r.corpus_sizes.size(), 7u);  // start, 1k..5k, end
  for (size_t i = 1; i < r.corpus_sizes.size(); ++i) {
    EXPECT_LE(r.corpus_sizes[i - 1].second, r.corpus_sizes[i].second);
    EXPECT_LE(r.corpus_sizes[i - 1].first, r.corpus_sizes[i].first);
  }
  EXPECT_EQ(r.corpus_sizes.back().second, r.final_corpus_size);
}

TEST(FuzzTest, SameSeedSameCampaign) {
  for (FeedbackMode mode : {FeedbackMode::kCov, FeedbackMode::kAlgo, FeedbackMode::kCombo}) {
    CampaignConfig cfg = Config(ProblemId::kSpf, mode, 3000, 7);
    cfg.impl_a = MutantId::kGrZeroCycle;
    cfg.impl_b = ImplId::kBellmanFord;
    const CampaignReport a = Fuzz(cfg);
    const CampaignReport b = Fuzz(cfg);
    EXPECT_EQ(a.graph_sequence_hash, b.graph_sequence_hash);
    EXPECT_EQ(a.corpus_hash, b.corpus_hash);
    EXPECT_EQ(DeterministicDigest(a), DeterministicDigest(b));
    cfg.rng_seed = 8;
    EXPECT_NE(Fuzz(cfg).graph_sequence_hash, a.graph_sequence_hash);
  }
}

TEST(FuzzTest, AlgoCorpusGrowsOncePerSignal) {
  CampaignConfig cfg = Config(ProblemId::kMst, FeedbackMode::kAlgo, 4000);
  StubTarget a(ImplId::kPrim, StubTarget::Fault::kNone, 0);
  CampaignHooks hooks;
  hooks.target_a = &a;
  const CampaignReport r = Fuzz(cfg, hooks);
  ASSERT_TRUE(r.bugs.empty());
  EXPECT_EQ(a.calls(), 4000);
  EXPECT_EQ(r.final_corpus_size, 1 + static_cast<int64_t>(a.signals().size()));
}

TEST(FuzzTest, SurvivesCrashesAndHangsOnEitherSide) {
  for (StubTarget::Fault fault : {StubTarget::Fault::kCrash, StubTarget::Fault::kHang}) {
    for (bool side_a : {true, false}) {
      CampaignConfig cfg = Config(ProblemId::kScc, FeedbackMode::kAlgo, 2000);
      const auto [ia, ib] = DefaultPair(ProblemId::kScc);
      StubTarget stub(side_a ? ia : ib, fault, 3);
      CampaignHooks hooks;
      (side_a ? hooks.target_a : hooks.target_b) = &stub;
      const CampaignReport r = Fuzz(cfg, hooks);
      EXPECT_EQ(r.total_execs, 2000);
      ASSERT_FALSE(r.bugs.empty());
      for (const BugRecord& bug : r.bugs) {
        EXPECT_EQ(bug.kind, fault == StubTarget::Fault::kCrash ? BugKind::kCrash : BugKind::kHang);
        EXPECT_EQ(bug.graph.num_vertices, 3);
      }
    }
  }
}

TEST(FuzzTest, StopOnBug) {
  CampaignConfig cfg = Config(ProblemId::kScc, FeedbackMode::kAlgo, 5000);
  cfg.stop_on_bug = true;
  StubTarget stub(ImplId::kKosaraju, StubTarget::Fault::kCrash, 3);
  CampaignHooks hooks;
  hooks.target_b = &stub;
  const CampaignReport r = Fuzz(cfg, hooks);
  EXPECT_EQ(r.ended_by, EndedBy::kBugFound);
  ASSERT_EQ(r.bugs.size(), 1u);
  EXPECT_EQ(r.bugs[0].found_at_exec, r.total_execs);
}

TEST(FuzzTest, AbortFlag) {
  CampaignConfig cfg = Config(ProblemId::kScc, FeedbackMode::kAlgo, 100000);
  std::atomic<bool> abort{true};
  CampaignHooks hooks;
  hooks.abort = &abort;
  const CampaignReport r = Fuzz(cfg, hooks);
  EXPECT_EQ(r.ended_by, EndedBy::kAbort);
  EXPECT_EQ(r.total_execs, 0);
}

TEST(FuzzTest, TimeLimit) {
  CampaignConfig cfg = Config(ProblemId::kScc, FeedbackMode::kAlgo, 1);
  cfg.exec_limit.reset();
  cfg.time_limit = std::chrono::milliseconds(200);
  const CampaignReport r = Fuzz(cfg);
  EXPECT_EQ(r.ended_by, EndedBy::kTimeLimit);
  EXPECT_GE(r.elapsed_ms, 200);
  EXPECT_GT(r.total_execs, 0);
}

TEST(FuzzTest, TraceFollowsTheLoop) {
  CampaignConfig cfg = Config(ProblemId::kScc, FeedbackMode::kAlgo, 1000);
  cfg.energy = 7;
  StubTarget stub(ImplId::kKosaraju, StubTarget::Fault::kCrash, 2);
  std::vector<TraceStep> trace;
  CampaignHooks hooks;
  hooks.target_b = &stub;
  hooks.trace = [&](TraceStep s) { trace.push_back(s); };
  const CampaignReport r = Fuzz(cfg, hooks);
  ASSERT_FALSE(r.bugs.empty());

  // Walk the trace against the grammar:
  //   round := ChooseNext AssignEnergy exec{energy}
  //   exec  := Mutate RunA RunB (Compare (Bug | IsInteresting AddIfNovel?) | Bug)
  size_t i = 0;
  int64_t execs = 0;
  auto at = [&](TraceStep s) { return i < trace.size() && trace[i] == s; };
  while (i < trace.size()) {
    ASSERT_TRUE(at(TraceStep::kChooseNext)) << i;
    ++i;
    ASSERT_TRUE(at(TraceStep::kAssignEnergy)) << i;
    ++i;
    for (int k = 0; k < cfg.energy && i < trace.size(); ++k, ++execs) {
      for (TraceStep s : {TraceStep::kMutate, TraceStep::kRunA, TraceStep::kRunB}) {
        ASSERT_TRUE(at(s)) << i;
        ++i;
      }
      if (at(TraceStep::kBug)) {
        ++i;
        continue;
      }
      ASSERT_TRUE(at(TraceStep::kCompare)) << i;
      ++i;
      if (at(TraceStep::kBug)) {
        ++i;
        continue;
      }
      ASSERT_TRUE(at(TraceStep::kIsInteresting)) << i;
      ++i;
      if (at(TraceStep::kAddIfNovel)) ++i;
    }
  }
  EXPECT_EQ(execs, 1000);
}

TEST(FuzzTest, WritesOutputDirectory) {
  const fs::path dir = FreshDir("out");
  CampaignConfig cfg = Config(ProblemId::kSpf, FeedbackMode::kAlgo, 20000);
  cfg.impl_a = MutantId::kGrZeroCycle;
  cfg.impl_b = ImplId::kBellmanFord;
  cfg.out_path = dir;
  const CampaignReport r = Fuzz(cfg);
  ASSERT_FALSE(r.bugs.empty());
  EXPECT_TRUE(fs::exists(dir / "campaign.log"));
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  size_t corpus_files = 0;
  for (const auto& e : fs::directory_iterator(dir / "corpus")) {
    (void)e;
    ++corpus_files;
  }
  EXPECT_EQ(static_cast<int64_t>(corpus_files), r.final_corpus_size);
  for (size_t k = 0; k < r.bugs.size(); ++k) {
    const BugRecord& bug = r.bugs[k];
    ASSERT_FALSE(bug.graph_file.empty());
    std::ifstream f(dir / bug.graph_file);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(Parse(ss.str()), bug.graph);
    // Every recorded bug replays to its kind.
    const ReplayResult rep = Replay(cfg.problem, cfg.impl_a, cfg.impl_b, bug.graph);
    EXPECT_EQ(rep.classification, Classification::kDiscrepancy);
  }
  std::ifstream rf(dir / "report.json");
  const nlohmann::json j = nlohmann::json::parse(rf);
  for (const char* key : {"config", "total_execs", "execs_per_second", "corpus_sizes", "bugs",
                          "ended_by"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["total_execs"], r.total_execs);
  EXPECT_EQ(j["bugs"].size(), r.bugs.size());
  EXPECT_EQ(j["bugs"][0]["kind"], "discrepancy");
  fs::remove_all(dir);
}

TEST(FuzzTest, DiscrepanciesAreDeduplicatedBySignalPair) {
  CampaignConfig cfg = Config(ProblemId::kSpf, FeedbackMode::kAlgo, 20000);
  cfg.impl_a = MutantId::kGrZeroCycle;
  cfg.impl_b = ImplId::kBellmanFord;
  const CampaignReport r = Fuzz(cfg);
  std::set<std::pair<SignalKey, SignalKey>> keys;
  for (const BugRecord& bug : r.bugs) {
    ASSERT_EQ(bug.kind, BugKind::kDiscrepancy);
    const auto ka = ExtractSignal(cfg.problem, std::get<TargetOutput>(bug.result_a));
    const auto kb = ExtractSignal(cfg.problem, std::get<TargetOutput>(bug.result_b));
    EXPECT_TRUE(keys.insert({ka, kb}).second);
  }
}

TEST(ReplayTest, CorrectPairOnCorpusGraph) {
  const Graph g = Parse("D 3 3\n0 1 4\n1 2 -2\n0 2 5\n");
  const ReplayResult r = Replay(ProblemId::kSpf, ImplId::kBellmanFord,
                                ImplId::kGoldbergRadzik, g);
  EXPECT_EQ(r.classification, Classification::kNoBug);
}

TEST(ReplayTest, MfvHangWitness) {
  const Graph g = Parse("D 12 2\n5 6 1\n5 7 1\n");
  const ReplayResult r = Replay(ProblemId::kMfv, MutantId::kMfvHang, ImplId::kDinitz, g,
                                std::chrono::milliseconds(300));
  EXPECT_EQ(r.classification, Classification::kHang);
  EXPECT_TRUE(std::holds_alternative<Hang>(r.result_a));
}

TEST(ReplayTest, GoldbergRadzikWitness) {
  const Graph g = Parse("D 2 2\n0 1 1\n1 0 -1\n");
  const ReplayResult r = Replay(ProblemId::kSpf, MutantId::kGrZeroCycle,
                                ImplId::kBellmanFord, g);
  EXPECT_EQ(r.classification, Classification::kDiscrepancy);
  EXPECT_FALSE(r.explanation.empty());
}

}  // namespace
}  // namespace gdfuzz
