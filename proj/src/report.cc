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


#include "gdfuzz/report.h"

#include <cstdio>
#include <fstream>
#include <map>

#include "gdfuzz/codec.h"

namespace gdfuzz {
namespace {

using nlohmann::json;

std::string Hex(uint64_t x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

json BugToJson(const BugRecord& bug, bool with_clock) {
  json j = {
      {"kind", std::string(BugKindName(bug.kind))},
      {"graph_file", bug.graph_file},
      {"exec", bug.found_at_exec},
      {"output_a", DescribeResult(bug.result_a)},
      {"output_b", DescribeResult(bug.result_b)},
      {"explanation", bug.explanation},
      {"endpoints", {bug.endpoints.s, bug.endpoints.t}},
      {"graph", Serialize(bug.graph)},
  };
  if (with_clock) j["t_ms"] = bug.found_at_ms;
  return j;
}

}  // namespace

json ConfigToJson(const CampaignConfig& cfg) {
  json j = {
      {"problem", std::string(ProblemName(cfg.problem))},
      {"impl_a", ImplOrMutantName(cfg.impl_a)},
      {"impl_b", cfg.adapter_b.empty() ? std::string(ImplName(cfg.impl_b)) : "adapter"},
      {"mode", std::string(FeedbackModeName(cfg.mode))},
      {"energy", cfg.energy},
      {"max_stack", cfg.max_stack},
      {"time_limit_ms", cfg.time_limit ? json(cfg.time_limit->count()) : json(nullptr)},
      {"exec_limit", cfg.exec_limit ? json(*cfg.exec_limit) : json(nullptr)},
      {"rng_seed", cfg.rng_seed},
      {"exec_budget_ms", cfg.exec_budget.count()},
      {"seeds", cfg.seed_corpus_path.string()},
      {"out", cfg.out_path.string()},
      {"stop_on_bug", cfg.stop_on_bug},
  };
  if (!cfg.adapter_b.empty()) j["adapter_b"] = cfg.adapter_b;
  return j;
}

json DeterministicJson(const CampaignReport& report) {
  json bugs = json::array();
  for (const BugRecord& b : report.bugs) bugs.push_back(BugToJson(b, false));
  json cfg = ConfigToJson(report.config);
  cfg.erase("out");
  return {
      {"config", cfg},
      {"bugs", bugs},
      {"initial_corpus_size", report.initial_corpus_size},
      {"final_corpus_size", report.final_corpus_size},
      {"graph_sequence_hash", Hex(report.graph_sequence_hash)},
      {"corpus_hash", Hex(report.corpus_hash)},
  };
}

json ReportToJson(const CampaignReport& report) {
  json bugs = json::array();
  for (const BugRecord& b : report.bugs) bugs.push_back(BugToJson(b, true));
  json sizes = json::array();
  for (const auto& [t, n] : report.corpus_sizes) sizes.push_back({t, n});
  return {
      {"config", ConfigToJson(report.config)},
      {"total_execs", report.total_execs},
      {"execs_per_second", report.execs_per_second},
      {"corpus_sizes", sizes},
      {"bugs", bugs},
      {"ended_by", std::string(EndedByName(report.ended_by))},
      {"elapsed_ms", report.elapsed_ms},
      {"initial_corpus_size", report.initial_corpus_size},
      {"final_corpus_size", report.final_corpus_size},
      {"graph_sequence_hash", Hex(report.graph_sequence_hash)},
      {"corpus_hash", Hex(report.corpus_hash)},
      {"deterministic_digest", Hex(DeterministicDigest(report))},
  };
}

void WriteReportJson(const CampaignReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  out << ReportToJson(report).dump(2) << "\n";
}

std::string SummarizeReport(const json& report) {
  const json& cfg = report.at("config");
  const auto& sizes = report.at("corpus_sizes");
  const int64_t first = sizes.empty() ? 0 : sizes.front().at(1).get<int64_t>();
  const int64_t last = sizes.empty() ? 0 : sizes.back().at(1).get<int64_t>();
  std::map<std::string, int> by_kind;
  int64_t first_bug_ms = -1;
  for (const json& b : report.at("bugs")) {
    ++by_kind[b.at("kind").get<std::string>()];
    if (first_bug_ms < 0) first_bug_ms = b.at("t_ms").get<int64_t>();
  }

  char line[256];
  std::string out;
  auto row = [&](const char* key, const std::string& value) {
    std::snprintf(line, sizeof(line), "%-18s %s\n", key, value.c_str());
    out += line;
  };
  row("problem", cfg.at("problem").get<std::string>());
  row("pair", cfg.at("impl_a").get<std::string>() + " vs " +
                  cfg.at("impl_b").get<std::string>());
  row("mode", cfg.at("mode").get<std::string>());
  row("ended_by", report.at("ended_by").get<std::string>());
  row("total_execs", std::to_string(report.at("total_execs").get<int64_t>()));
  std::snprintf(line, sizeof(line), "%.1f", report.at("execs_per_second").get<double>());
  row("execs_per_second", line);
  row("corpus", std::to_string(first) + " -> " + std::to_string(last));
  row("bugs", std::to_string(report.at("bugs").size()));
  for (const auto& [kind, n] : by_kind) row(("  " + kind).c_str(), std::to_string(n));
  if (first_bug_ms >= 0) row("first_bug_ms", std::to_string(first_bug_ms));

  json summary = {
      {"problem", cfg.at("problem")},
      {"mode", cfg.at("mode")},
      {"total_execs", report.at("total_execs")},
      {"execs_per_second", report.at("execs_per_second")},
      {"corpus_initial", first},
      {"corpus_final", last},
      {"bugs", report.at("bugs").size()},
      {"bugs_by_kind", by_kind},
      {"first_bug_ms", first_bug_ms},
      {"ended_by", report.at("ended_by")},
  };
  out += "summary " + summary.dump() + "\n";
  return out;
}

}  // namespace gdfuzz
