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


// gdfuzz: run, replay and summarize differential fuzzing campaigns.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdfuzz/codec.h"
#include "gdfuzz/corpus.h"
#include "gdfuzz/engine.h"
#include "gdfuzz/report.h"
#include "gdfuzz/seedgen.h"
#include "json.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBugs = 10;

std::atomic<bool> g_abort{false};

void OnSignal(int) { g_abort.store(true); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "250ms", "60s", "5m", "2h"; a bare number means seconds.
std::chrono::milliseconds ParseDuration(const std::string& text) {
  size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad duration '" + text + "'");
  }
  const std::string unit = text.substr(pos);
  double scale = 1000;
  if (unit == "ms") {
    scale = 1;
  } else if (unit == "s" || unit.empty()) {
    scale = 1000;
  } else if (unit == "m") {
    scale = 60'000;
  } else if (unit == "h") {
    scale = 3'600'000;
  } else {
    throw UsageError("bad duration unit in '" + text + "'");
  }
  if (value < 0) throw UsageError("negative duration '" + text + "'");
  return std::chrono::milliseconds(static_cast<int64_t>(value * scale));
}

gdfuzz::ProblemId RequireProblem(const std::string& name) {
  auto p = gdfuzz::ParseProblem(name);
  if (!p) throw UsageError("unknown problem '" + name + "'");
  return *p;
}

gdfuzz::ImplId RequireImpl(const std::string& name) {
  auto id = gdfuzz::ParseImpl(name);
  if (!id) throw UsageError("unknown implementation '" + name + "'");
  return *id;
}

gdfuzz::MutantId RequireMutant(const std::string& name) {
  auto m = gdfuzz::ParseMutant(name);
  if (!m) throw UsageError("unknown mutant '" + name + "'");
  return *m;
}

std::vector<std::string> SplitCommand(const std::string& cmd) {
  std::istringstream in(cmd);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Shared --problem/--impl-a/--impl-b/--mutant resolution.
struct PairFlags {
  std::string problem;
  std::string impl_a;
  std::string impl_b;
  std::string mutant;

  void Resolve(gdfuzz::ProblemId& problem_out, gdfuzz::ImplOrMutant& a,
               gdfuzz::ImplId& b) const {
    problem_out = RequireProblem(problem);
    const auto [def_a, def_b] = gdfuzz::DefaultPair(problem_out);
    a = def_a;
    b = def_b;
    if (!mutant.empty()) {
      const gdfuzz::MutantId m = RequireMutant(mutant);
      if (gdfuzz::ProblemOf(m) != problem_out) {
        throw UsageError(std::string(gdfuzz::MutantName(m)) + " is not a " +
                         std::string(gdfuzz::ProblemName(problem_out)) + " mutant");
      }
      a = m;
      b = gdfuzz::DefaultPartner(m);
    } else if (!impl_a.empty()) {
      a = RequireImpl(impl_a);
    }
    if (!impl_b.empty()) b = RequireImpl(impl_b);
  }
};

void AddPairFlags(CLI::App* cmd, PairFlags& f) {
  cmd->add_option("--problem", f.problem, "SPF MST SCC BCC HC JS MM AA MFV")->required();
  cmd->add_option("--impl-a", f.impl_a, "side A (default: first of the default pair)");
  cmd->add_option("--impl-b", f.impl_b, "side B (default: second of the default pair)");
  cmd->add_option("--mutant", f.mutant, "replace side A with a catalog mutant");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gdfuzz: feedback-guided differential fuzzing of graph algorithms"};
  app.require_subcommand(1);

  PairFlags fuzz_pair;
  std::string mode = "algo";
  int energy = 100;
  int max_stack = gdfuzz::kDefaultMaxStack;
  std::string time_limit = "60s";
  int64_t exec_limit = -1;
  uint64_t rng_seed = 1;
  std::string seeds;
  std::string out = "gdfuzz-out";
  int64_t exec_budget_ms = gdfuzz::kDefaultExecBudget.count();
  std::string adapter_b;
  bool stop_on_bug = false;
  auto* fuzz = app.add_subcommand("fuzz", "run a campaign");
  AddPairFlags(fuzz, fuzz_pair);
  fuzz->add_option("--mode", mode, "none, cov, algo or combo")->capture_default_str();
  fuzz->add_option("--energy", energy, "mutations per selected seed")->capture_default_str();
  fuzz->add_option("--max-stack", max_stack, "stacked mutation ceiling")->capture_default_str();
  fuzz->add_option("--time-limit", time_limit, "e.g. 500ms, 60s, 5m")->capture_default_str();
  fuzz->add_option("--exec-limit", exec_limit, "stop after this many execs (-1: none)")
      ->capture_default_str();
  fuzz->add_option("--rng-seed", rng_seed, "campaign seed")->capture_default_str();
  fuzz->add_option("--seeds", seeds, "seed corpus directory (default: one single-vertex graph)");
  fuzz->add_option("--out", out, "output directory")->capture_default_str();
  fuzz->add_option("--exec-budget-ms", exec_budget_ms, "per-execution time budget")
      ->capture_default_str();
  fuzz->add_option("--adapter-b", adapter_b, "run side B through this adapter command");
  fuzz->add_flag("--stop-on-bug", stop_on_bug, "end the campaign at the first bug");

  PairFlags replay_pair;
  std::string replay_graph;
  int64_t replay_budget_ms = gdfuzz::kDefaultExecBudget.count();
  auto* replay = app.add_subcommand("replay", "re-run both sides on one graph");
  AddPairFlags(replay, replay_pair);
  replay->add_option("--exec-budget-ms", replay_budget_ms, "per-execution time budget")
      ->capture_default_str();
  replay->add_option("graph", replay_graph, "graph file")->required();

  std::string gen_problem;
  int gen_count = 10;
  uint64_t gen_seed = 1;
  int gen_min_n = 2;
  int gen_max_n = 6;
  std::string gen_out = "seeds";
  auto* gen = app.add_subcommand("gen-seeds", "write an initial seed corpus");
  gen->add_option("--problem", gen_problem, "problem whose profile the graphs follow")->required();
  gen->add_option("--count", gen_count, "number of graphs")->capture_default_str();
  gen->add_option("--rng-seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--min-n", gen_min_n, "smallest vertex count")->capture_default_str();
  gen->add_option("--max-n", gen_max_n, "largest vertex count")->capture_default_str();
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();

  std::string report_out;
  auto* report = app.add_subcommand("report", "summarize a campaign's report.json");
  report->add_option("--out", report_out, "campaign output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitConfig;
  }

  try {
    if (fuzz->parsed()) {
      gdfuzz::CampaignConfig cfg;
      fuzz_pair.Resolve(cfg.problem, cfg.impl_a, cfg.impl_b);
      auto m = gdfuzz::ParseFeedbackMode(mode);
      if (!m) throw UsageError("unknown mode '" + mode + "'");
      cfg.mode = *m;
      cfg.energy = energy;
      cfg.max_stack = max_stack;
      cfg.time_limit = ParseDuration(time_limit);
      if (exec_limit >= 0) cfg.exec_limit = exec_limit;
      cfg.rng_seed = rng_seed;
      cfg.seed_corpus_path = seeds;
      cfg.out_path = out;
      cfg.exec_budget = std::chrono::milliseconds(exec_budget_ms);
      cfg.adapter_b = SplitCommand(adapter_b);
      cfg.stop_on_bug = stop_on_bug;
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      gdfuzz::CampaignHooks hooks;
      hooks.abort = &g_abort;
      const gdfuzz::CampaignReport r = gdfuzz::Fuzz(cfg, hooks);
      std::cout << gdfuzz::SummarizeReport(gdfuzz::ReportToJson(r));
      return r.bugs.empty() ? kExitClean : kExitBugs;
    }
    if (replay->parsed()) {
      gdfuzz::ProblemId problem;
      gdfuzz::ImplOrMutant a;
      gdfuzz::ImplId b;
      replay_pair.Resolve(problem, a, b);
      std::ifstream in(replay_graph, std::ios::binary);
      if (!in) throw UsageError("cannot read " + replay_graph);
      std::stringstream buf;
      buf << in.rdbuf();
      const gdfuzz::Graph g = gdfuzz::Parse(buf.str());
      const auto r = gdfuzz::Replay(problem, a, b, g,
                                    std::chrono::milliseconds(replay_budget_ms));
      std::cout << gdfuzz::ClassificationName(r.classification) << "\n"
                << "A: " << gdfuzz::DescribeResult(r.result_a) << "\n"
                << "B: " << gdfuzz::DescribeResult(r.result_b) << "\n";
      if (!r.explanation.empty()) std::cout << r.explanation << "\n";
      return r.classification == gdfuzz::Classification::kNoBug ? kExitClean : kExitBugs;
    }
    if (gen->parsed()) {
      gdfuzz::SeedGenSpec spec;
      spec.problem = RequireProblem(gen_problem);
      spec.count = gen_count;
      spec.rng_seed = gen_seed;
      spec.min_vertices = gen_min_n;
      spec.max_vertices = gen_max_n;
      const auto graphs = gdfuzz::GenerateSeeds(spec);
      std::filesystem::create_directories(gen_out);
      for (size_t i = 0; i < graphs.size(); ++i) {
        std::ofstream f(std::filesystem::path(gen_out) / gdfuzz::CorpusFileName(i),
                        std::ios::binary | std::ios::trunc);
        f << gdfuzz::Serialize(graphs[i]);
      }
      std::cout << "wrote " << graphs.size() << " graphs to " << gen_out << "\n";
      return kExitClean;
    }
    if (report->parsed()) {
      std::ifstream in(std::filesystem::path(report_out) / "report.json");
      if (!in) throw UsageError("no report.json in " + report_out);
      const nlohmann::json j = nlohmann::json::parse(in);
      std::cout << gdfuzz::SummarizeReport(j);
      return kExitClean;
    }
  } catch (const UsageError& e) {
    std::cerr << "gdfuzz: " << e.what() << "\n";
    return kExitConfig;
  } catch (const gdfuzz::ConfigInvalid& e) {
    std::cerr << "gdfuzz: " << e.what() << "\n";
    return kExitConfig;
  } catch (const gdfuzz::SeedLoadError& e) {
    std::cerr << "gdfuzz: " << e.what() << "\n";
    return kExitConfig;
  } catch (const gdfuzz::ParseError& e) {
    std::cerr << "gdfuzz: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gdfuzz: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gdfuzz: malformed report.json: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
