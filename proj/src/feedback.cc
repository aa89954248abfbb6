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


#include "gdfuzz/feedback.h"

#include <cctype>
#include <string>

namespace gdfuzz {

std::string_view FeedbackModeName(FeedbackMode mode) {
  switch (mode) {
    case FeedbackMode::kNone: return "none";
    case FeedbackMode::kCov: return "cov";
    case FeedbackMode::kAlgo: return "algo";
    case FeedbackMode::kCombo: return "combo";
  }
  return "unknown";
}

std::optional<FeedbackMode> ParseFeedbackMode(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (FeedbackMode m : {FeedbackMode::kNone, FeedbackMode::kCov,
                         FeedbackMode::kAlgo, FeedbackMode::kCombo}) {
    if (lower == FeedbackModeName(m)) return m;
  }
  return std::nullopt;
}

std::optional<NoveltyKey> IsInteresting(FeedbackMode mode, const SignalKey* sig,
                                        const ProbeMap* probes,
                                        const Corpus& corpus) {
  if (mode == FeedbackMode::kNone) return std::nullopt;
  if (NeedsSignal(mode) && sig == nullptr) {
    throw MissingFeedbackInput("MissingFeedbackInput: mode needs a signal");
  }
  if (NeedsProbes(mode) && probes == nullptr) {
    throw MissingFeedbackInput("MissingFeedbackInput: mode needs a probe map");
  }
  switch (mode) {
    case FeedbackMode::kCov: {
      ProbePairs fresh = corpus.UnseenProbePairs(*probes);
      if (fresh.empty()) return std::nullopt;
      return MakeProbeCoverage(std::move(fresh));
    }
    case FeedbackMode::kAlgo:
      if (corpus.SignalSeen(*sig)) return std::nullopt;
      return AlgoSignal{*sig};
    case FeedbackMode::kCombo: {
      ProbePairs fresh = corpus.UnseenProbePairs(*probes);
      if (fresh.empty() && corpus.SignalSeen(*sig)) return std::nullopt;
      return ComboKey{AlgoSignal{*sig}, MakeProbeCoverage(std::move(fresh))};
    }
    case FeedbackMode::kNone:
      break;
  }
  return std::nullopt;
}

}  // namespace gdfuzz
