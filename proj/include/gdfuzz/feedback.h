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


// IS_INTERESTING for the four feedback modes.

#ifndef GDFUZZ_FEEDBACK_H_
#define GDFUZZ_FEEDBACK_H_

#include <optional>
#include <stdexcept>
#include <string_view>

#include "gdfuzz/corpus.h"
#include "gdfuzz/probe_map.h"
#include "gdfuzz/signal.h"

namespace gdfuzz {

enum class FeedbackMode { kNone, kCov, kAlgo, kCombo };

std::string_view FeedbackModeName(FeedbackMode mode);  // "none", "cov", ...
std::optional<FeedbackMode> ParseFeedbackMode(std::string_view name);

inline bool NeedsSignal(FeedbackMode m) {
  return m == FeedbackMode::kAlgo || m == FeedbackMode::kCombo;
}
inline bool NeedsProbes(FeedbackMode m) {
  return m == FeedbackMode::kCov || m == FeedbackMode::kCombo;
}

class MissingFeedbackInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// None: never. Cov: when some (probe, bucketed count) pair of `probes` is
// unseen. Algo: when `sig` is unseen. Combo: when either is, carrying both.
// `probes` must come from implementation A. Throws MissingFeedbackInput when
// the mode needs an input that is null.
std::optional<NoveltyKey> IsInteresting(FeedbackMode mode, const SignalKey* sig,
                                        const ProbeMap* probes,
                                        const Corpus& corpus);

}  // namespace gdfuzz

#endif  // GDFUZZ_FEEDBACK_H_
