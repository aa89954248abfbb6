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


// report.json: the stable, machine-readable record of a campaign.
//
//   config           echo of the campaign configuration
//   total_execs      generated graphs executed on both sides
//   execs_per_second throughput
//   corpus_sizes     [[t_ms, size], ...] sampled every 1000 execs
//   bugs             [{kind, graph_file, exec, t_ms, output_a, output_b}, ...]
//   ended_by         TimeLimit | ExecLimit | Abort | BugFound
//
// Extra keys: elapsed_ms, initial_corpus_size, final_corpus_size,
// graph_sequence_hash, corpus_hash, deterministic_digest (hex strings).

#ifndef GDFUZZ_REPORT_H_
#define GDFUZZ_REPORT_H_

#include <filesystem>
#include <string>

#include "gdfuzz/engine.h"
#include "json.hpp"

namespace gdfuzz {

nlohmann::json ConfigToJson(const CampaignConfig& cfg);
nlohmann::json ReportToJson(const CampaignReport& report);

// The report with every wall-clock-dependent field removed.
nlohmann::json DeterministicJson(const CampaignReport& report);

void WriteReportJson(const CampaignReport& report, const std::filesystem::path& path);

// Human-readable summary table plus one machine-readable `summary {...}` line,
// computed from a parsed report.json alone. Throws nlohmann::json::exception
// on missing keys.
std::string SummarizeReport(const nlohmann::json& report);

}  // namespace gdfuzz

#endif  // GDFUZZ_REPORT_H_
