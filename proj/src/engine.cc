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

#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <utility>

#include "gdfuzz/adapter.h"
#include "gdfuzz/report.h"
#include "gdfuzz/rng.h"
#include "gdfuzz/signal.h"

namespace gdfuzz {
namespace {

using Clock = std::chrono::steady_clock;

uint64_t MixGraph(uint64_t h, const Graph& g) {
  auto mix = [&h](int64_t x) {
    h ^= static_cast<uint64_t>(x);
    h *= 0x100000001b3ULL;
  };
  mix(g.directed ? 1 : 0);
  mix(g.num_vertices);
  for (const Edge& e : g.edges) {
    mix(e.u);
    mix(e.v);
    mix(e.w);
  }
  mix(-1);
  return h;
}

struct Verdict {
  Classification classification = Classification::kNoBug;
  std::string explanation;
};

Verdict Classify(ProblemId problem, const ExecResult& ra, const ExecResult& rb,
                 const TargetInput& in) {
  for (const ExecResult* r : {&ra, &rb}) {
    const char* side = r == &ra ? "A" : "B";
    if (const auto* c = std::get_if<Crash>(r)) {
      return {Classification::kCrash, std::string(side) + " crashed: " + c->message};
    }
    if (std::holds_alternative<Hang>(*r)) {
      return {Classification::kHang, std::string(side) + " exceeded its budget"};
    }
  }
  const auto& a = std::get<TargetOutput>(ra);
  const auto& b = std::get<TargetOutput>(rb);
  if (ProblemOf(a) != problem || ProblemOf(b) != problem) {
    return {Classification::kCrash, "output for the wrong problem"};
  }
  Comparison cmp = CompareOutputs(problem, a, b, &in);
  if (!cmp.equal) return {Classification::kDiscrepancy, cmp.explanation};
  return {};
}

BugKind ToBugKind(Classification c) {
  switch (c) {
    case Classification::kCrash: return BugKind::kCrash;
    case Classification::kHang: return BugKind::kHang;
    default: return BugKind::kDiscrepancy;
  }
}

// Best-effort signal of one side, used only to deduplicate discrepancies.
std::optional<SignalKey> SideSignal(ProblemId problem, const ExecResult& r) {
  const auto* out = std::get_if<TargetOutput>(&r);
  if (out == nullptr || ProblemOf(*out) != problem) return std::nullopt;
  return ExtractSignal(problem, *out);
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

class CampaignLog {
 public:
  explicit CampaignLog(const std::filesystem::path& out) {
    if (!out.empty()) file_.open(out / "campaign.log", std::ios::trunc);
  }
  void Line(int64_t t_ms, const std::string& text) {
    if (file_.is_open()) file_ << "[" << t_ms << " ms] " << text << "\n";
  }
  void Flush() {
    if (file_.is_open()) file_.flush();
  }

 private:
  std::ofstream file_;
};

}  // namespace

std::string ImplOrMutantName(const ImplOrMutant& x) {
  if (const auto* m = std::get_if<MutantId>(&x)) return std::string(MutantName(*m));
  return std::string(ImplName(std::get<ImplId>(x)));
}

std::string_view BugKindName(BugKind k) {
  switch (k) {
    case BugKind::kCrash: return "crash";
    case BugKind::kHang: return "hang";
    case BugKind::kDiscrepancy: return "discrepancy";
  }
  return "unknown";
}

std::string_view EndedByName(EndedBy e) {
  switch (e) {
    case EndedBy::kTimeLimit: return "TimeLimit";
    case EndedBy::kExecLimit: return "ExecLimit";
    case EndedBy::kAbort: return "Abort";
    case EndedBy::kBugFound: return "BugFound";
  }
  return "unknown";
}

std::string_view ClassificationName(Classification c) {
  switch (c) {
    case Classification::kNoBug: return "NoBug";
    case Classification::kCrash: return "Crash";
    case Classification::kHang: return "Hang";
    case Classification::kDiscrepancy: return "Discrepancy";
  }
  return "unknown";
}

std::unique_ptr<Target> MakeTarget(ProblemId problem, const ImplOrMutant& x) {
  if (const auto* m = std::get_if<MutantId>(&x)) return Instantiate(problem, *m);
  return MakeBuiltinTarget(std::get<ImplId>(x));
}

GraphProfile CampaignProfile(const CampaignConfig& cfg) {
  std::vector<ImplId> impls = {cfg.impl_b};
  if (const auto* m = std::get_if<MutantId>(&cfg.impl_a)) {
    impls.push_back(ParentOf(*m));
  } else {
    impls.push_back(std::get<ImplId>(cfg.impl_a));
  }
  return ProfileFor(cfg.problem, impls);
}

void ValidateConfig(const CampaignConfig& cfg) {
  auto fail = [](const std::string& what) { throw ConfigInvalid("ConfigInvalid: " + what); };
  if (cfg.energy < 1) fail("energy must be positive");
  if (cfg.max_stack < 1) fail("max_stack must be positive");
  if (cfg.exec_budget.count() < 1) fail("exec budget must be positive");
  if (cfg.sample_every < 1) fail("sample interval must be positive");
  if (cfg.time_limit && cfg.time_limit->count() < 0) fail("negative time limit");
  if (cfg.exec_limit && *cfg.exec_limit < 0) fail("negative exec limit");
  if (!cfg.time_limit && !cfg.exec_limit) fail("a time limit or an exec limit is required");
  if (const auto* m = std::get_if<MutantId>(&cfg.impl_a)) {
    if (ProblemOf(*m) != cfg.problem) {
      fail(std::string(MutantName(*m)) + " does not belong to " +
           std::string(ProblemName(cfg.problem)));
    }
  } else {
    const ImplId a = std::get<ImplId>(cfg.impl_a);
    if (ProblemOf(a) != cfg.problem) {
      fail(std::string(ImplName(a)) + " does not solve " +
           std::string(ProblemName(cfg.problem)));
    }
    if (cfg.adapter_b.empty() && a == cfg.impl_b) fail("impl_a and impl_b must differ");
  }
  if (cfg.adapter_b.empty() && ProblemOf(cfg.impl_b) != cfg.problem) {
    fail(std::string(ImplName(cfg.impl_b)) + " does not solve " +
         std::string(ProblemName(cfg.problem)));
  }
}

CampaignReport Fuzz(const CampaignConfig& cfg, const CampaignHooks& hooks) {
  ValidateConfig(cfg);
  const GraphProfile profile = CampaignProfile(cfg);

  std::vector<Graph> seeds = hooks.seeds;
  if (seeds.empty()) {
    if (cfg.seed_corpus_path.empty()) {
      seeds.push_back(Graph::SingleVertex(profile.directed));
    } else {
      seeds = LoadGraphDir(cfg.seed_corpus_path, profile);
    }
  }
  for (const Graph& g : seeds) {
    if (!IsValid(g, profile)) throw SeedLoadError("SeedLoadError: seed violates the profile");
  }

  std::unique_ptr<Target> owned_a;
  std::unique_ptr<Target> owned_b;
  Target* a = hooks.target_a;
  Target* b = hooks.target_b;
  if (a == nullptr) {
    owned_a = MakeTarget(cfg.problem, cfg.impl_a);
    a = owned_a.get();
  }
  if (b == nullptr) {
    if (cfg.adapter_b.empty()) {
      owned_b = MakeBuiltinTarget(cfg.impl_b);
    } else {
      try {
        owned_b = std::make_unique<RemoteTarget>(cfg.adapter_b, cfg.problem);
      } catch (const ProtocolError& e) {
        throw ConfigInvalid(std::string("ConfigInvalid: adapter: ") + e.what());
      }
    }
    b = owned_b.get();
  }

  namespace fs = std::filesystem;
  const bool write = !cfg.out_path.empty();
  if (write) {
    fs::create_directories(cfg.out_path / "bugs");
    fs::create_directories(cfg.out_path / "corpus");
  }
  CampaignLog log(cfg.out_path);

  Corpus corpus;
  for (Graph& g : seeds) {
    if (write) WriteFile(cfg.out_path / "corpus" / CorpusFileName(corpus.size()), Serialize(g));
    corpus.AddSeed(std::move(g));
  }

  CampaignReport report;
  report.config = cfg;
  report.initial_corpus_size = static_cast<int64_t>(corpus.size());

  const auto start = Clock::now();
  auto now_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  };
  auto trace = [&](TraceStep s) {
    if (hooks.trace) hooks.trace(s);
  };
  log.Line(0, "start problem=" + std::string(ProblemName(cfg.problem)) +
                  " a=" + a->Name() + " b=" + b->Name() +
                  " mode=" + std::string(FeedbackModeName(cfg.mode)) +
                  " seed=" + std::to_string(cfg.rng_seed) +
                  " corpus=" + std::to_string(corpus.size()));
  report.corpus_sizes.emplace_back(0, static_cast<int64_t>(corpus.size()));

  Rng rng(cfg.rng_seed);
  ProbeMap probes;
  const bool want_probes = NeedsProbes(cfg.mode);
  const bool want_signal = NeedsSignal(cfg.mode);
  std::set<std::pair<std::optional<SignalKey>, std::optional<SignalKey>>> seen_discrepancies;
  const DonorSampler sampler = [&corpus](Rng& r) -> const Graph& {
    return corpus.ChooseNext(r);
  };
  uint64_t seq_hash = 0xcbf29ce484222325ULL;
  int64_t execs = 0;
  std::optional<EndedBy> ended;

  auto limit_reached = [&]() -> std::optional<EndedBy> {
    if (hooks.abort != nullptr && hooks.abort->load(std::memory_order_relaxed)) {
      return EndedBy::kAbort;
    }
    if (cfg.exec_limit && execs >= *cfg.exec_limit) return EndedBy::kExecLimit;
    if (cfg.time_limit && Clock::now() - start >= *cfg.time_limit) return EndedBy::kTimeLimit;
    return std::nullopt;
  };

  while (!ended) {
    if ((ended = limit_reached())) break;
    trace(TraceStep::kChooseNext);
    const Graph seed = corpus.ChooseNext(rng);
    trace(TraceStep::kAssignEnergy);
    const int energy = AssignEnergy(seed, cfg.energy);
    for (int i = 0; i < energy; ++i) {
      if ((ended = limit_reached())) break;
      trace(TraceStep::kMutate);
      Graph mutated = StackedMutate(seed, sampler, profile, rng, cfg.max_stack);
      seq_hash = MixGraph(seq_hash, mutated);
      const TargetInput in = TargetInput::From(std::move(mutated));
      ++execs;

      if (want_probes) probes.Clear();
      trace(TraceStep::kRunA);
      ExecResult ra = a->Execute(in, want_probes ? &probes : nullptr, cfg.exec_budget);
      trace(TraceStep::kRunB);
      ExecResult rb = b->Execute(in, nullptr, cfg.exec_budget);

      const bool failed = !std::holds_alternative<TargetOutput>(ra) ||
                          !std::holds_alternative<TargetOutput>(rb);
      Verdict verdict;
      if (!failed) trace(TraceStep::kCompare);
      verdict = Classify(cfg.problem, ra, rb, in);

      if (verdict.classification != Classification::kNoBug) {
        trace(TraceStep::kBug);
        bool fresh = true;
        if (verdict.classification == Classification::kDiscrepancy) {
          auto key = std::make_pair(SideSignal(cfg.problem, ra), SideSignal(cfg.problem, rb));
          fresh = seen_discrepancies.insert(key).second;
        }
        if (fresh) {
          BugRecord bug;
          bug.kind = ToBugKind(verdict.classification);
          bug.graph = in.graph;
          bug.endpoints = in.endpoints;
          bug.result_a = std::move(ra);
          bug.result_b = std::move(rb);
          bug.explanation = verdict.explanation;
          bug.found_at_exec = execs;
          bug.found_at_ms = now_ms();
          if (write) {
            char name[48];
            std::snprintf(name, sizeof(name), "%s-%03zu.graph",
                          std::string(BugKindName(bug.kind)).c_str(), report.bugs.size());
            bug.graph_file = std::string("bugs/") + name;
            WriteFile(cfg.out_path / bug.graph_file, Serialize(bug.graph));
          }
          log.Line(bug.found_at_ms, std::string(BugKindName(bug.kind)) + " at exec " +
                                        std::to_string(execs) + ": " + bug.explanation);
          log.Flush();
          report.bugs.push_back(std::move(bug));
          if (cfg.stop_on_bug) {
            ended = EndedBy::kBugFound;
            break;
          }
        }
      } else if (cfg.mode != FeedbackMode::kNone) {
        std::optional<SignalKey> sig;
        if (want_signal) sig = ExtractSignal(cfg.problem, std::get<TargetOutput>(ra));
        trace(TraceStep::kIsInteresting);
        std::optional<NoveltyKey> key = IsInteresting(
            cfg.mode, sig ? &*sig : nullptr, want_probes ? &probes : nullptr, corpus);
        if (key) {
          trace(TraceStep::kAddIfNovel);
          const size_t index = corpus.size();
          if (corpus.AddIfNovel(in.graph, std::move(*key), execs) && write) {
            WriteFile(cfg.out_path / "corpus" / CorpusFileName(index), Serialize(in.graph));
          }
        }
      } else {
        trace(TraceStep::kIsInteresting);
      }

      if (execs % cfg.sample_every == 0) {
        report.corpus_sizes.emplace_back(now_ms(), static_cast<int64_t>(corpus.size()));
      }
    }
  }

  report.total_execs = execs;
  report.elapsed_ms = now_ms();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report.execs_per_second = secs > 0 ? static_cast<double>(execs) / secs : 0.0;
  report.ended_by = *ended;
  report.final_corpus_size = static_cast<int64_t>(corpus.size());
  if (report.corpus_sizes.back().second != report.final_corpus_size ||
      execs % cfg.sample_every != 0) {
    report.corpus_sizes.emplace_back(report.elapsed_ms, report.final_corpus_size);
  }
  report.graph_sequence_hash = seq_hash;
  uint64_t corpus_hash = 0xcbf29ce484222325ULL;
  for (const CorpusEntry& e : corpus.entries()) corpus_hash = MixGraph(corpus_hash, e.graph);
  report.corpus_hash = corpus_hash;

  log.Line(report.elapsed_ms, "end " + std::string(EndedByName(report.ended_by)) +
                                  " execs=" + std::to_string(execs) +
                                  " corpus=" + std::to_string(corpus.size()) +
                                  " bugs=" + std::to_string(report.bugs.size()));
  if (write) WriteReportJson(report, cfg.out_path / "report.json");
  return report;
}

uint64_t DeterministicDigest(const CampaignReport& report) {
  return Fnv1a(DeterministicJson(report).dump());
}

ReplayResult Replay(ProblemId problem, Target& a, Target& b, const Graph& g,
                    std::chrono::milliseconds budget) {
  const TargetInput in = TargetInput::From(g);
  ReplayResult r;
  r.result_a = a.Execute(in, nullptr, budget);
  r.result_b = b.Execute(in, nullptr, budget);
  Verdict v = Classify(problem, r.result_a, r.result_b, in);
  r.classification = v.classification;
  r.explanation = v.explanation;
  return r;
}

ReplayResult Replay(ProblemId problem, const ImplOrMutant& a, ImplId b,
                    const Graph& g, std::chrono::milliseconds budget) {
  auto ta = MakeTarget(problem, a);
  auto tb = MakeBuiltinTarget(b);
  return Replay(problem, *ta, *tb, g, budget);
}

}  // namespace gdfuzz
