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


#include "gdfuzz/mutants.h"

#include <cctype>
#include <string>

#include "src/targets/impls.h"

namespace gdfuzz {
namespace {

template <TargetOutput (*Fn)(const TargetInput&, ExecContext&, bool)>
TargetOutput Faulty(const TargetInput& in, ExecContext& ctx) {
  return Fn(in, ctx, true);
}

}  // namespace

std::string_view MutantName(MutantId m) {
  switch (m) {
    case MutantId::kGrZeroCycle: return "GR_ZERO_CYCLE";
    case MutantId::kSccStackSkip: return "SCC_STACK_SKIP";
    case MutantId::kMstUfOffByOne: return "MST_UF_OFF_BY_ONE";
    case MutantId::kJsIgnoreSelfLoop: return "JS_IGNORE_SELF_LOOP";
    case MutantId::kAaSelfLoopWrong: return "AA_SELF_LOOP_WRONG";
    case MutantId::kMfvHang: return "MFV_HANG";
  }
  return "UNKNOWN";
}

std::optional<MutantId> ParseMutant(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) {
    c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (MutantId m : kAllMutants) {
    if (upper == MutantName(m)) return m;
  }
  return std::nullopt;
}

ImplId ParentOf(MutantId m) {
  switch (m) {
    case MutantId::kGrZeroCycle: return ImplId::kGoldbergRadzik;
    case MutantId::kSccStackSkip: return ImplId::kTarjanIterative;
    case MutantId::kMstUfOffByOne: return ImplId::kKruskal;
    case MutantId::kJsIgnoreSelfLoop: return ImplId::kSortedMerge;
    case MutantId::kAaSelfLoopWrong: return ImplId::kPerPairIntersect;
    case MutantId::kMfvHang: return ImplId::kPushRelabel;
  }
  return ImplId::kGoldbergRadzik;
}

ProblemId ProblemOf(MutantId m) { return ProblemOf(ParentOf(m)); }

ImplId DefaultPartner(MutantId m) {
  switch (m) {
    case MutantId::kGrZeroCycle: return ImplId::kBellmanFord;
    case MutantId::kSccStackSkip: return ImplId::kKosaraju;
    case MutantId::kMstUfOffByOne: return ImplId::kPrim;
    case MutantId::kJsIgnoreSelfLoop: return ImplId::kBitsetIntersect;
    case MutantId::kAaSelfLoopWrong: return ImplId::kPrecomputedNeighborhoods;
    case MutantId::kMfvHang: return ImplId::kDinitz;
  }
  return ImplId::kBellmanFord;
}

ImplFn MutantImplementation(MutantId m) {
  switch (m) {
    case MutantId::kGrZeroCycle: return Faulty<impl::GoldbergRadzik>;
    case MutantId::kSccStackSkip: return Faulty<impl::TarjanIterative>;
    case MutantId::kMstUfOffByOne: return Faulty<impl::Kruskal>;
    case MutantId::kJsIgnoreSelfLoop: return Faulty<impl::SortedMerge>;
    case MutantId::kAaSelfLoopWrong: return Faulty<impl::PerPairIntersect>;
    case MutantId::kMfvHang: return Faulty<impl::PushRelabel>;
  }
  return nullptr;
}

std::unique_ptr<Target> Instantiate(ProblemId problem, MutantId m) {
  if (ProblemOf(m) != problem) {
    throw MutantProblemMismatch("MutantProblemMismatch: " +
                                std::string(MutantName(m)) + " is not a " +
                                std::string(ProblemName(problem)) + " mutant");
  }
  return std::make_unique<InProcessTarget>(std::string(MutantName(m)), problem,
                                           MutantImplementation(m));
}

}  // namespace gdfuzz
