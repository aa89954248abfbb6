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


#include "gdfuzz/signal.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>

namespace gdfuzz {
namespace {

int64_t LargestComponent(const Components& c) {
  size_t best = 0;
  for (const auto& comp : c) best = std::max(best, comp.size());
  return static_cast<int64_t>(best);
}

int64_t MaxScore(const std::vector<PairScore>& scores) {
  if (scores.empty()) return 0;
  double best = scores.front().score;
  for (const PairScore& s : scores) best = std::max(best, s.score);
  return QuantizeScore(best);
}

}  // namespace

std::string ToString(const SignalKey& key) {
  return std::string(ProblemName(key.problem)) + "(" + std::to_string(key.a) +
         "," + std::to_string(key.b) + ")";
}

int Bucket(int64_t x) {
  if (x < 0) return -Bucket(-x);
  if (x <= 3) return static_cast<int>(x);
  if (x <= 7) return 4;
  if (x <= 15) return 5;
  if (x <= 31) return 6;
  if (x <= 127) return 7;
  return 8;
}

int64_t QuantizeScore(double x) {
  return static_cast<int64_t>(std::floor(x * 1000.0 + 1e-9));
}

SignalKey ExtractSignal(ProblemId problem, const TargetOutput& out) {
  if (ProblemOf(out) != problem) {
    throw std::invalid_argument("ProblemMismatch: output is not " +
                                std::string(ProblemName(problem)));
  }
  SignalKey key{problem, 0, 0};
  switch (problem) {
    case ProblemId::kSpf: {
      const auto& o = std::get<SpfOut>(out);
      switch (o.kind) {
        case SpfOut::Kind::kLength: key.a = o.length; break;
        case SpfOut::Kind::kUnreachable: key.a = -1; break;
        case SpfOut::Kind::kNegativeCycle: key.a = -2; break;
      }
      break;
    }
    case ProblemId::kMst: {
      const auto& o = std::get<MstOut>(out);
      key.a = Bucket(o.total_weight);
      key.b = o.node_count;
      break;
    }
    case ProblemId::kScc: {
      const auto& o = std::get<SccOut>(out);
      key.a = static_cast<int64_t>(o.components.size());
      key.b = LargestComponent(o.components);
      break;
    }
    case ProblemId::kBcc:
      key.a = LargestComponent(std::get<BccOut>(out).components);
      break;
    case ProblemId::kHc: {
      std::vector<double> s = std::get<HcOut>(out).scores;
      if (s.size() >= 2) {
        std::partial_sort(s.begin(), s.begin() + 2, s.end());
        key.a = QuantizeScore(s[1] - s[0]);
      }
      break;
    }
    case ProblemId::kJs:
      key.a = MaxScore(std::get<JsOut>(out).scores);
      break;
    case ProblemId::kMm:
      key.a = static_cast<int64_t>(std::get<MmOut>(out).matching.size());
      break;
    case ProblemId::kAa:
      key.a = MaxScore(std::get<AaOut>(out).scores);
      break;
    case ProblemId::kMfv:
      key.a = std::get<MfvOut>(out).value;
      break;
  }
  return key;
}

}  // namespace gdfuzz
