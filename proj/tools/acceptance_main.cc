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


// Acceptance suite. Prints one PASS/FAIL line per criterion on stdout and
// progress on stderr. Exit status 0 only when every selected criterion holds.
//
//   gdfuzz_acceptance [--criteria 1,2,...] [--campaign-seconds 300]
//                     [--known-red 4,...]
//
// Known-red criteria still print their honest verdict but do not affect the
// exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdfuzz/engine.h"
#include "gdfuzz/mutants.h"
#include "gdfuzz/oracle.h"
#include "gdfuzz/problem.h"
#include "gdfuzz/targets.h"
#include "tests/test_util.h"

namespace gdfuzz {
namespace {

namespace fs = std::filesystem;
using std::chrono::milliseconds;
using std::chrono::seconds;

// Pinned parameters.
constexpr int64_t kSoundnessExecs = 100000;
constexpr int kSoundnessSeeds = 3;
constexpr int kOracleGraphs = 2000;
constexpr int32_t kOracleN = 7;
constexpr int kMutantTrials = 5;
constexpr int kMutantKillsNeeded = 4;
constexpr seconds kMutantBudget{60};
constexpr int kAlgoBeatsCovNeeded = 4;
constexpr int kCorpusWinsNeeded = 7;
constexpr int kZeroCycleGraphs = 10000;
constexpr int64_t kDeterminismExecs = 20000;

struct Line {
  int id;
  bool pass;
  std::string name;
  std::string detail;
};

void Progress(const std::string& msg) { std::cerr << "  .. " << msg << std::endl; }

CampaignConfig CorrectPair(ProblemId p, FeedbackMode mode, uint64_t seed) {
  CampaignConfig cfg;
  cfg.problem = p;
  const auto [a, b] = DefaultPair(p);
  cfg.impl_a = a;
  cfg.impl_b = b;
  cfg.mode = mode;
  cfg.rng_seed = seed;
  return cfg;
}

// 1. Correct pairs never disagree.
Line Soundness() {
  int clean = 0, total = 0;
  std::string worst;
  for (ProblemId p : kAllProblems) {
    for (uint64_t seed = 1; seed <= kSoundnessSeeds; ++seed) {
      CampaignConfig cfg = CorrectPair(p, FeedbackMode::kAlgo, seed);
      cfg.exec_limit = kSoundnessExecs;
      const CampaignReport r = Fuzz(cfg);
      ++total;
      if (r.bugs.empty() && r.total_execs == kSoundnessExecs) {
        ++clean;
      } else if (worst.empty()) {
        worst = std::string(ProblemName(p)) + " seed " + std::to_string(seed) + ": " +
                std::to_string(r.bugs.size()) + " bugs";
      }
      Progress(std::string(ProblemName(p)) + " seed " + std::to_string(seed) + " " +
               std::to_string(r.bugs.size()) + " bugs, " + std::to_string(r.elapsed_ms) + " ms");
    }
  }
  return {1, clean == total, "differential soundness",
          std::to_string(clean) + "/" + std::to_string(total) + " campaigns of " +
              std::to_string(kSoundnessExecs) + " execs with 0 bugs" +
              (worst.empty() ? "" : "; first failure " + worst)};
}

// 2. Every implementation matches the exhaustive oracle.
Line OracleEquivalence() {
  int64_t checked = 0, mismatches = 0;
  std::string first;
  for (ProblemId p : kAllProblems) {
    for (ImplId impl : ImplsOf(p)) {
      const ImplId only[] = {impl};
      const GraphProfile prof = ProfileFor(p, only);
      Rng rng(1000 + static_cast<uint64_t>(impl));
      for (int i = 0; i < kOracleGraphs; ++i) {
        const Graph g = testing::RandomGraph(prof, rng, kOracleN,
                                             std::min(prof.max_edges, kOracleMaxEdges));
        const TargetInput in = TargetInput::From(g);
        const TargetOutput want = BruteForceOracle(p, in);
        const ExecResult got = RunTarget(p, impl, in, nullptr);
        ++checked;
        const auto* out = std::get_if<TargetOutput>(&got);
        const bool ok = out != nullptr && CompareOutputs(p, want, *out, &in).equal;
        if (!ok) {
          ++mismatches;
          if (first.empty()) first = std::string(ImplName(impl)) + " on " + Serialize(g);
        }
      }
      Progress(std::string(ImplName(impl)) + " checked");
    }
  }
  return {2, mismatches == 0, "oracle equivalence",
          std::to_string(checked) + " graphs (N <= 7), " + std::to_string(mismatches) +
              " mismatches" + (first.empty() ? "" : "; first " + first)};
}

// Milliseconds to the first bug of the expected kind, or nullopt.
struct Trial {
  std::optional<int64_t> detect_ms;
};

Trial MutantTrial(MutantId m, FeedbackMode mode, uint64_t seed) {
  CampaignConfig cfg;
  cfg.problem = ProblemOf(m);
  cfg.impl_a = m;
  cfg.impl_b = DefaultPartner(m);
  cfg.mode = mode;
  cfg.rng_seed = seed;
  cfg.time_limit = kMutantBudget;
  cfg.stop_on_bug = true;
  const BugKind want = m == MutantId::kMfvHang ? BugKind::kHang : BugKind::kDiscrepancy;
  const CampaignReport r = Fuzz(cfg);
  Trial t;
  for (const BugRecord& b : r.bugs) {
    if (b.kind == want) {
      t.detect_ms = b.found_at_ms;
      break;
    }
  }
  Progress(std::string(MutantName(m)) + " " + std::string(FeedbackModeName(mode)) + " seed " +
           std::to_string(seed) + ": " +
           (t.detect_ms ? std::to_string(*t.detect_ms) + " ms" : std::string("not detected")));
  return t;
}

// Undetected trials count as slower than any detection.
int64_t Median(std::vector<Trial> trials) {
  std::vector<int64_t> v;
  for (const Trial& t : trials) {
    v.push_back(t.detect_ms ? *t.detect_ms
                            : std::chrono::duration_cast<milliseconds>(kMutantBudget).count() + 1);
  }
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

using TrialTable = std::map<std::pair<MutantId, FeedbackMode>, std::vector<Trial>>;

const std::vector<Trial>& Trials(TrialTable& table, MutantId m, FeedbackMode mode) {
  auto& v = table[{m, mode}];
  if (v.empty()) {
    for (uint64_t seed = 1; seed <= kMutantTrials; ++seed) v.push_back(MutantTrial(m, mode, seed));
  }
  return v;
}

// 3. Algo feedback kills every mutant.
Line MutantKill(TrialTable& table) {
  int killed = 0;
  std::string detail;
  for (MutantId m : kAllMutants) {
    const auto& trials = Trials(table, m, FeedbackMode::kAlgo);
    const int hits = static_cast<int>(std::count_if(
        trials.begin(), trials.end(), [](const Trial& t) { return t.detect_ms.has_value(); }));
    if (hits >= kMutantKillsNeeded) ++killed;
    detail += (detail.empty() ? "" : ", ") + std::string(MutantName(m)) + " " +
              std::to_string(hits) + "/" + std::to_string(kMutantTrials);
  }
  return {3, killed == static_cast<int>(kAllMutants.size()), "mutant kill", detail};
}

// 4. Algo detects no later than the alternatives.
Line FeedbackDirection(TrialTable& table) {
  const MutantId gr = MutantId::kGrZeroCycle;
  const int64_t gr_algo = Median(Trials(table, gr, FeedbackMode::kAlgo));
  const int64_t gr_none = Median(Trials(table, gr, FeedbackMode::kNone));
  const int64_t gr_cov = Median(Trials(table, gr, FeedbackMode::kCov));
  int wins = 0;
  std::string detail = "GR_ZERO_CYCLE median ms algo " + std::to_string(gr_algo) + ", none " +
                       std::to_string(gr_none) + ", cov " + std::to_string(gr_cov) +
                       "; algo <= cov on";
  for (MutantId m : kAllMutants) {
    const int64_t a = Median(Trials(table, m, FeedbackMode::kAlgo));
    const int64_t c = Median(Trials(table, m, FeedbackMode::kCov));
    if (a <= c) ++wins;
    detail += " " + std::string(MutantName(m)) + "(" + std::to_string(a) + "/" +
              std::to_string(c) + ")";
  }
  detail += " = " + std::to_string(wins) + "/6";
  const bool pass = gr_algo <= gr_none && gr_algo <= gr_cov && wins >= kAlgoBeatsCovNeeded;
  return {4, pass, "feedback-effect direction", detail};
}

struct ModeRun {
  int64_t corpus_growth = 0;
  int64_t final_corpus = 0;
  double eps = 0;
  size_t bugs = 0;
};

using ModeTable = std::map<std::pair<ProblemId, FeedbackMode>, ModeRun>;

ModeRun& ModeCampaign(ModeTable& table, ProblemId p, FeedbackMode mode, seconds duration) {
  auto it = table.find({p, mode});
  if (it != table.end()) return it->second;
  CampaignConfig cfg = CorrectPair(p, mode, 1);
  cfg.time_limit = duration;
  const CampaignReport r = Fuzz(cfg);
  ModeRun run{r.final_corpus_size - r.initial_corpus_size, r.final_corpus_size,
              r.execs_per_second, r.bugs.size()};
  Progress(std::string(ProblemName(p)) + " " + std::string(FeedbackModeName(mode)) + ": corpus " +
           std::to_string(run.final_corpus) + ", " + std::to_string(static_cast<int64_t>(run.eps)) +
           " execs/s");
  return table.emplace(std::make_pair(p, mode), run).first->second;
}

// 5. Algo keeps more inputs than coverage; none keeps nothing.
Line CorpusDirection(ModeTable& table, seconds duration) {
  int wins = 0;
  bool none_flat = true;
  std::string detail;
  for (ProblemId p : kAllProblems) {
    const ModeRun& algo = ModeCampaign(table, p, FeedbackMode::kAlgo, duration);
    const ModeRun& cov = ModeCampaign(table, p, FeedbackMode::kCov, duration);
    const ModeRun& none = ModeCampaign(table, p, FeedbackMode::kNone, duration);
    if (algo.final_corpus > cov.final_corpus) ++wins;
    none_flat &= none.corpus_growth == 0;
    detail += std::string(ProblemName(p)) + " " + std::to_string(algo.final_corpus) + "/" +
              std::to_string(cov.final_corpus) + " ";
  }
  detail += "(algo/cov); algo > cov on " + std::to_string(wins) + "/9; none growth " +
            (none_flat ? "0 on all" : "nonzero") + "; " + std::to_string(duration.count()) +
            " s campaigns";
  return {5, wins >= kCorpusWinsNeeded && none_flat, "corpus-size direction", detail};
}

// 6. None is fastest; algo at least as fast as combo.
Line ThroughputDirection(ModeTable& table, seconds duration) {
  int ok = 0;
  std::string detail;
  for (ProblemId p : kAllProblems) {
    const double none = ModeCampaign(table, p, FeedbackMode::kNone, duration).eps;
    const double algo = ModeCampaign(table, p, FeedbackMode::kAlgo, duration).eps;
    const double combo = ModeCampaign(table, p, FeedbackMode::kCombo, duration).eps;
    const bool good = none > algo && algo >= combo;
    if (good) ++ok;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %.0f/%.0f/%.0f%s ", std::string(ProblemName(p)).c_str(),
                  none, algo, combo, good ? "" : "(x)");
    detail += buf;
  }
  detail += "(none/algo/combo execs/s); holds on " + std::to_string(ok) + "/9";
  return {6, ok == 9, "throughput direction", detail};
}

std::map<std::string, std::string> ReadTree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), dir).string();
    if (rel == "report.json" || rel == "campaign.log") continue;  // carry wall-clock fields
    std::ifstream f(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    files[rel] = ss.str();
  }
  return files;
}

// 7. Same config, same campaign.
Line Determinism() {
  int same = 0, total = 0;
  std::string first;
  const fs::path root = fs::temp_directory_path() / "gdfuzz_acceptance_det";
  for (FeedbackMode mode :
       {FeedbackMode::kNone, FeedbackMode::kCov, FeedbackMode::kAlgo, FeedbackMode::kCombo}) {
    for (MutantId m : {MutantId::kGrZeroCycle, MutantId::kSccStackSkip, MutantId::kJsIgnoreSelfLoop}) {
      CampaignConfig cfg;
      cfg.problem = ProblemOf(m);
      cfg.impl_a = m;
      cfg.impl_b = DefaultPartner(m);
      cfg.mode = mode;
      cfg.rng_seed = 42;
      cfg.exec_limit = kDeterminismExecs;
      CampaignReport r[2];
      std::map<std::string, std::string> tree[2];
      for (int k = 0; k < 2; ++k) {
        fs::remove_all(root);
        cfg.out_path = root;
        r[k] = Fuzz(cfg);
        tree[k] = ReadTree(root);
      }
      // The digest covers every field except wall-clock ones and the output path.
      const bool eq = r[0].graph_sequence_hash == r[1].graph_sequence_hash &&
                      r[0].corpus_hash == r[1].corpus_hash &&
                      DeterministicDigest(r[0]) == DeterministicDigest(r[1]) &&
                      tree[0] == tree[1];
      ++total;
      if (eq) {
        ++same;
      } else if (first.empty()) {
        first = std::string(MutantName(m)) + " " + std::string(FeedbackModeName(mode));
      }
      Progress(std::string(MutantName(m)) + " " + std::string(FeedbackModeName(mode)) + ": " +
               std::to_string(r[0].bugs.size()) + " bugs, " + std::to_string(tree[0].size()) +
               " files, " + (eq ? "identical" : "DIFFERENT"));
    }
  }
  fs::remove_all(root);
  return {7, same == total, "determinism",
          std::to_string(same) + "/" + std::to_string(total) +
              " repeated campaigns identical (bug lists, corpus files, graph sequences)" +
              (first.empty() ? "" : "; first difference " + first)};
}

// A small SPF graph; half of them get a planted zero-weight cycle.
Graph ZeroCycleCandidate(Rng& rng, bool& planted) {
  const GraphProfile prof = ProfileFor(ProblemId::kSpf);
  Graph g = testing::RandomGraph(prof, rng, kOracleN, kOracleMaxEdges);
  planted = false;
  if (g.num_vertices < 2 || rng.Below(2) == 0) return g;
  const int k = static_cast<int>(rng.Uniform(2, std::min<int32_t>(4, g.num_vertices)));
  std::vector<VertexId> ids(g.num_vertices);
  for (VertexId v = 0; v < g.num_vertices; ++v) ids[v] = v;
  for (int i = 0; i < k; ++i) {
    std::swap(ids[i], ids[i + static_cast<int>(rng.Below(ids.size() - i))]);
  }
  std::vector<Weight> w(k);
  Weight sum = 0;
  for (int i = 0; i + 1 < k; ++i) {
    w[i] = rng.Uniform(prof.weight_min, prof.weight_max);
    sum += w[i];
  }
  w[k - 1] = -sum;
  if (w[k - 1] < prof.weight_min || w[k - 1] > prof.weight_max) return g;
  for (int i = 0; i < k; ++i) {
    const VertexId u = ids[i], v = ids[(i + 1) % k];
    std::erase_if(g.edges, [&](const Edge& e) { return e.u == u && e.v == v; });
    g.edges.push_back({u, v, w[i]});
  }
  while (static_cast<int32_t>(g.edges.size()) > kOracleMaxEdges) {
    // Drop an edge that is not part of the planted cycle.
    const size_t j = rng.Below(g.edges.size() - k);
    g.edges.erase(g.edges.begin() + static_cast<int64_t>(j));
  }
  Canonicalize(g);
  planted = true;
  return g;
}

// 8. Zero-weight cycles are never reported as negative.
Line ZeroCycleLaw() {
  Rng rng(8);
  int64_t without_negative = 0, with_zero = 0, violations = 0, planted_count = 0;
  std::string first;
  for (int i = 0; i < kZeroCycleGraphs; ++i) {
    bool planted = false;
    const Graph g = ZeroCycleCandidate(rng, planted);
    planted_count += planted;
    bool negative = false, zero = false;
    for (const auto& c : EnumerateSimpleCycles(g)) {
      const Weight w = CycleWeight(g, c);
      negative |= w < 0;
      zero |= w == 0;
    }
    if (negative) continue;
    ++without_negative;
    with_zero += zero;
    const TargetInput in = TargetInput::From(g);
    for (ImplId impl : {ImplId::kBellmanFord, ImplId::kGoldbergRadzik}) {
      const ExecResult r = RunTarget(ProblemId::kSpf, impl, in, nullptr);
      const auto* out = std::get_if<TargetOutput>(&r);
      if (out == nullptr ||
          std::get<SpfOut>(*out).kind == SpfOut::Kind::kNegativeCycle) {
        ++violations;
        if (first.empty()) first = std::string(ImplName(impl)) + " on " + Serialize(g);
      }
    }
  }
  return {8, violations == 0 && with_zero > 0, "zero-weight-cycle law",
          std::to_string(kZeroCycleGraphs) + " graphs, " + std::to_string(without_negative) +
              " without a negative cycle, " + std::to_string(with_zero) +
              " of them with a zero-weight cycle; " + std::to_string(violations) +
              " NegativeCycle answers" + (first.empty() ? "" : "; first " + first)};
}

int Main(int argc, char** argv) {
  CLI::App app{"gdfuzz acceptance suite"};
  std::vector<int> criteria = {1, 2, 3, 4, 5, 6, 7, 8};
  int campaign_seconds = 300;
  app.add_option("--criteria", criteria, "criteria to run")->delimiter(',')->capture_default_str();
  std::vector<int> known_red;
  app.add_option("--known-red", known_red, "criteria excluded from the exit status")
      ->delimiter(',');
  app.add_option("--campaign-seconds", campaign_seconds,
                 "length of each criteria 5 and 6 campaign")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const seconds duration{campaign_seconds};
  TrialTable trials;
  ModeTable modes;
  bool all = true;
  for (int c : criteria) {
    std::cerr << "criterion " << c << std::endl;
    const auto start = std::chrono::steady_clock::now();
    Line line;
    switch (c) {
      case 1: line = Soundness(); break;
      case 2: line = OracleEquivalence(); break;
      case 3: line = MutantKill(trials); break;
      case 4: line = FeedbackDirection(trials); break;
      case 5: line = CorpusDirection(modes, duration); break;
      case 6: line = ThroughputDirection(modes, duration); break;
      case 7: line = Determinism(); break;
      case 8: line = ZeroCycleLaw(); break;
      default:
        std::cerr << "no criterion " << c << "\n";
        return 2;
    }
    const auto secs = std::chrono::duration_cast<seconds>(std::chrono::steady_clock::now() - start);
    std::cout << (line.pass ? "PASS" : "FAIL") << " " << line.id << " " << line.name << ": "
              << line.detail << " [" << secs.count() << " s]";
    if (std::find(known_red.begin(), known_red.end(), c) != known_red.end()) {
      std::cout << " (known red, not counted)";
    } else {
      all &= line.pass;
    }
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}

}  // namespace
}  // namespace gdfuzz

int main(int argc, char** argv) { return gdfuzz::Main(argc, argv); }
