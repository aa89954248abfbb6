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


#include "gdfuzz/corpus.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gdfuzz/signal.h"

namespace gdfuzz {

ProbeCoverage MakeProbeCoverage(ProbePairs pairs) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& [id, bucket] : pairs) {
    for (uint64_t byte : {uint64_t{id} & 0xff, uint64_t{id} >> 8, uint64_t{bucket}}) {
      h ^= byte;
      h *= 0x100000001b3ULL;
    }
  }
  return {h, std::move(pairs)};
}

Corpus::Corpus() : seen_buckets_(1 << 16, 0) {}

void Corpus::AddSeed(Graph g) {
  const auto index = static_cast<int64_t>(entries_.size());
  seen_keys_.insert(SeedOrigin{index});
  entries_.push_back({std::move(g), SeedOrigin{index}, -1});
}

const Graph& Corpus::ChooseNext(Rng& rng) const {
  if (entries_.empty()) throw EmptyCorpus();
  return entries_[rng.Below(entries_.size())].graph;
}

bool Corpus::AddIfNovel(Graph g, NoveltyKey key, int64_t exec) {
  if (!seen_keys_.insert(key).second) return false;
  auto mark_pairs = [&](const ProbePairs& pairs) {
    for (const auto& [id, bucket] : pairs) seen_buckets_[id] |= 1u << bucket;
  };
  if (const auto* k = std::get_if<AlgoSignal>(&key)) {
    seen_signals_.insert(k->signal);
  } else if (const auto* k = std::get_if<ProbeCoverage>(&key)) {
    mark_pairs(k->pairs);
  } else if (const auto* k = std::get_if<ComboKey>(&key)) {
    seen_signals_.insert(k->algo.signal);
    mark_pairs(k->coverage.pairs);
  }
  entries_.push_back({std::move(g), std::move(key), exec});
  return true;
}

ProbePairs Corpus::UnseenProbePairs(const ProbeMap& probes) const {
  ProbePairs out;
  for (const auto& [id, count] : probes.Entries()) {
    const auto bucket = static_cast<uint8_t>(Bucket(count));
    if ((seen_buckets_[id] & (1u << bucket)) == 0) out.emplace_back(id, bucket);
  }
  return out;
}

std::vector<Graph> LoadGraphDir(const std::filesystem::path& dir,
                                const GraphProfile& profile) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw SeedLoadError("SeedLoadError: not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".graph") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  std::vector<Graph> graphs;
  for (const fs::path& file : files) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
      throw SeedLoadError("SeedLoadError: cannot read " + file.string());
    }
    Graph g;
    try {
      g = Parse(buf.str());
    } catch (const ParseError& e) {
      throw SeedLoadError("SeedLoadError: " + file.string() + ": " + e.what());
    }
    const auto violations = Validate(g, profile);
    if (!violations.empty()) {
      throw SeedLoadError("SeedLoadError: " + file.string() +
                          " violates the profile: " + violations.front().detail);
    }
    graphs.push_back(std::move(g));
  }
  if (graphs.empty()) {
    throw SeedLoadError("SeedLoadError: no .graph files in " + dir.string());
  }
  return graphs;
}

std::string CorpusFileName(size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu.graph", index);
  return buf;
}

}  // namespace gdfuzz
