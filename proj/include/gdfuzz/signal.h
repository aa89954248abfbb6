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


// Table-style output signals: a small integer tuple per execution, computed
// from the output alone.

#ifndef GDFUZZ_SIGNAL_H_
#define GDFUZZ_SIGNAL_H_

#include <compare>
#include <cstdint>
#include <string>

#include "gdfuzz/problem.h"

namespace gdfuzz {

struct SignalKey {
  ProblemId problem = ProblemId::kSpf;
  int64_t a = 0;
  int64_t b = 0;  // 0 for one-component signals

  friend auto operator<=>(const SignalKey&, const SignalKey&) = default;
};

std::string ToString(const SignalKey& key);

// AFL hit-count ranges {0},{1},{2},{3},{4..7},{8..15},{16..31},{32..127},
// {128..} -> 0..8, mirrored for negative x.
int Bucket(int64_t x);

// floor(1000 x). A 1e-9 slack absorbs rounding in scores such as 0.29.
int64_t QuantizeScore(double x);

// SPF: l (-1 unreachable, -2 negative cycle). SCC: (components, largest).
// MFV: v. MST: (Bucket(total weight), node count). JS/AA: q(max score).
// MM: matching size. HC: q(second smallest - smallest), 0 when N < 2.
// BCC: largest block size.
SignalKey ExtractSignal(ProblemId problem, const TargetOutput& out);

}  // namespace gdfuzz

#endif  // GDFUZZ_SIGNAL_H_
