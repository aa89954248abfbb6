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


// The campaign corpus: append-only graph entries keyed by novelty, with the
// seen-signal and seen-probe state that novelty is judged against.

#ifndef GDFUZZ_CORPUS_H_
#define GDFUZZ_CORPUS_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gdfuzz/graph.h"
#include "gdfuzz/probe_map.h"
#include "gdfuzz/rng.h"
#include "gdfuzz/signal.h"

namespace gdfuzz {

struct SeedOrigin {
  int64_t index = 0;
  friend auto operator<=>(const SeedOrigin&, const SeedOrigin&) = default;
};

struct AlgoSignal {
  SignalKey signal;
  friend auto operator<=>(const AlgoSignal&, const AlgoSignal&) = default;
};

// (probe, bucketed count) pairs not seen before this execution.
using ProbePairs = std::vector<std::pair<ProbeId, uint8_t>>;

struct ProbeCoverage {
  uint64_t hash = 0;
  ProbePairs pairs;
  friend auto operator<=>(const ProbeCoverage&, const ProbeCoverage&) = default;
};

struct ComboKey {
  AlgoSignal algo;
  ProbeCoverage coverage;  // pairs empty when only the signal was new
  friend auto operator<=>(const ComboKey&, const ComboKey&) = default;
};

using NoveltyKey = std::variant<SeedOrigin, AlgoSignal, ProbeCoverage, ComboKey>;

ProbeCoverage MakeProbeCoverage(ProbePairs pairs);

struct CorpusEntry {
  Graph graph;
  NoveltyKey key;
  int64_t discovered_at = 0;  // execution index; -1 for initial seeds
};

class EmptyCorpus : public std::logic_error {
 public:
  EmptyCorpus() : std::logic_error("EmptyCorpus: no entries to choose from") {}
};

class Corpus {
 public:
  Corpus();

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<CorpusEntry>& entries() const { return entries_; }

  // Appends an initial seed under a fresh SeedOrigin key; always retained.
  void AddSeed(Graph g);

  // Uniform draw over the entries. Throws EmptyCorpus.
  const Graph& ChooseNext(Rng& rng) const;

  // Appends when `key` is unseen and marks its signal and probe pairs seen.
  bool AddIfNovel(Graph g, NoveltyKey key, int64_t exec = 0);

  bool SignalSeen(const SignalKey& s) const { return seen_signals_.count(s) != 0; }

  // The (probe, bucketed count) pairs of `probes` not yet seen.
  ProbePairs UnseenProbePairs(const ProbeMap& probes) const;

 private:
  std::vector<CorpusEntry> entries_;
  std::set<NoveltyKey> seen_keys_;
  std::set<SignalKey> seen_signals_;
  std::vector<uint16_t> seen_buckets_;  // per probe, bit b = bucket b seen
};

// Constant energy: every selected seed gets `config_energy` mutations.
inline int AssignEnergy(const Graph& /*g*/, int config_energy) {
  return config_energy;
}

class SeedLoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads every `*.graph` file of `dir` in lexicographic filename order. Throws
// SeedLoadError on unreadable, unparsable, or profile-invalid files, or when
// no graph is found.
std::vector<Graph> LoadGraphDir(const std::filesystem::path& dir,
                                const GraphProfile& profile);

// `corpus/000042.graph` style name for entry `index`.
std::string CorpusFileName(size_t index);

}  // namespace gdfuzz

#endif  // GDFUZZ_CORPUS_H_
