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

#include <chrono>

#include "gtest/gtest.h"
#include "gdfuzz/oracle.h"
#include "gdfuzz/seedgen.h"
#include "tests/test_util.h"

namespace gdfuzz {
namespace {

using testing::MakeGraph;
using testing::RandomGraph;

constexpr std::chrono::milliseconds kHangBudget{300};

ExecResult RunMutant(MutantId m, const TargetInput& in,
                     std::chrono::milliseconds budget = kDefaultExecBudget) {
  return Instantiate(ProblemOf(m), m)->Execute(in, nullptr, budget);
}

ExecResult RunParent(MutantId m, const TargetInput& in) {
  return RunTarget(ProblemOf(m), ParentOf(m), in, nullptr);
}

bool Agrees(MutantId m, const ExecResult& a, const ExecResult& b, const TargetInput& in) {
  if (!std::holds_alternative<TargetOutput>(a) || !std::holds_alternative<TargetOutput>(b)) {
    return a.index() == b.index();
  }
  return CompareOutputs(ProblemOf(m), std::get<TargetOutput>(a), std::get<TargetOutput>(b),
                        &in)
      .equal;
}

// Minimized graphs on which each mutant departs from its parent.
Graph Witness(MutantId m) {
  switch (m) {
    case MutantId::kGrZeroCycle:
      return Parse("D 2 2\n0 1 1\n1 0 -1\n");
    case MutantId::kSccStackSkip:
      return Parse("D 9 5\n3 7 1\n4 5 1\n5 4 1\n6 8 1\n7 6 1\n");
    case MutantId::kMstUfOffByOne:
      return Parse("U 8 8\n0 1 1\n0 6 21\n1 5 54\n2 7 1\n3 5 1\n4 6 1\n5 7 1\n6 7 40\n");
    case MutantId::kJsIgnoreSelfLoop:
      return Parse("U 2 2\n0 0 1\n0 1 1\n");
    case MutantId::kAaSelfLoopWrong:
      return Parse("U 2 2\n0 1 1\n1 1 1\n");
    case MutantId::kMfvHang:
      return Parse("D 12 2\n5 6 1\n5 7 1\n");
  }
  return Graph::SingleVertex(false);
}

TEST(MutantCatalogTest, NamesRoundTrip) {
  for (MutantId m : kAllMutants) {
    EXPECT_EQ(ParseMutant(MutantName(m)), m);
  }
  EXPECT_EQ(ParseMutant("gr-zero-cycle"), MutantId::kGrZeroCycle);
  EXPECT_EQ(ParseMutant("GR_ZERO"), std::nullopt);
}

TEST(MutantCatalogTest, ParentsAndPartners) {
  EXPECT_EQ(ParentOf(MutantId::kGrZeroCycle), ImplId::kGoldbergRadzik);
  EXPECT_EQ(ParentOf(MutantId::kSccStackSkip), ImplId::kTarjanIterative);
  EXPECT_EQ(ParentOf(MutantId::kMstUfOffByOne), ImplId::kKruskal);
  EXPECT_EQ(ParentOf(MutantId::kJsIgnoreSelfLoop), ImplId::kSortedMerge);
  EXPECT_EQ(ParentOf(MutantId::kAaSelfLoopWrong), ImplId::kPerPairIntersect);
  EXPECT_EQ(ParentOf(MutantId::kMfvHang), ImplId::kPushRelabel);
  EXPECT_EQ(DefaultPartner(MutantId::kGrZeroCycle), ImplId::kBellmanFord);
  for (MutantId m : kAllMutants) {
    EXPECT_EQ(ProblemOf(DefaultPartner(m)), ProblemOf(m));
    EXPECT_NE(DefaultPartner(m), ParentOf(m));
  }
}

TEST(MutantCatalogTest, InstantiateChecksProblem) {
  EXPECT_THROW(Instantiate(ProblemId::kMst, MutantId::kGrZeroCycle), MutantProblemMismatch);
  auto t = Instantiate(ProblemId::kSpf, MutantId::kGrZeroCycle);
  EXPECT_EQ(t->problem(), ProblemId::kSpf);
  EXPECT_EQ(t->Name(), "GR_ZERO_CYCLE");
}

TEST(MutantTest, GoldbergRadzikZeroCycle) {
  const TargetInput in{Parse("D 2 2\n0 1 1\n1 0 -1\n"), {0, 1}};
  EXPECT_EQ(std::get<TargetOutput>(RunMutant(MutantId::kGrZeroCycle, in)),
            TargetOutput(SpfOut::NegativeCycle()));
  EXPECT_EQ(std::get<TargetOutput>(RunParent(MutantId::kGrZeroCycle, in)),
            TargetOutput(SpfOut::Length(1)));
  EXPECT_EQ(BruteForceOracle(ProblemId::kSpf, in), TargetOutput(SpfOut::Length(1)));
}

TEST(MutantTest, JaccardSelfLoopPair) {
  const TargetInput in = TargetInput::From(MakeGraph(false, 2, {{0, 0, 1}, {0, 1, 1}}));
  const auto bad = std::get<JsOut>(std::get<TargetOutput>(RunMutant(MutantId::kJsIgnoreSelfLoop, in)));
  const auto good = std::get<JsOut>(std::get<TargetOutput>(RunParent(MutantId::kJsIgnoreSelfLoop, in)));
  const auto truth = std::get<JsOut>(BruteForceOracle(ProblemId::kJs, in));
  ASSERT_EQ(bad.scores.size(), 1u);
  EXPECT_DOUBLE_EQ(good.scores[0].score, truth.scores[0].score);
  EXPECT_NE(bad.scores[0].score, truth.scores[0].score);
}

TEST(MutantTest, EveryMutantHasAWitness) {
  for (MutantId m : kAllMutants) {
    const Graph g = Witness(m);
    ASSERT_TRUE(IsValid(g, ProfileFor(ProblemOf(m)))) << MutantName(m);
    const TargetInput in = TargetInput::From(g);
    const ExecResult bad = RunMutant(m, in, kHangBudget);
    const ExecResult good = RunParent(m, in);
    ASSERT_TRUE(std::holds_alternative<TargetOutput>(good)) << MutantName(m);
    if (m == MutantId::kMfvHang) {
      EXPECT_TRUE(std::holds_alternative<Hang>(bad));
    } else {
      EXPECT_FALSE(Agrees(m, bad, good, in)) << MutantName(m);
      // The parent is the right one.
      if (g.num_vertices <= kOracleMaxVertices &&
          static_cast<int32_t>(g.edges.size()) <= kOracleMaxEdges) {
        EXPECT_TRUE(CompareOutputs(ProblemOf(m), std::get<TargetOutput>(good),
                                   BruteForceOracle(ProblemOf(m), in), &in)
                        .equal)
            << MutantName(m);
      }
    }
  }
}

TEST(MutantTest, AgreesWithParentOnStandardSeeds) {
  for (MutantId m : kAllMutants) {
    SeedGenSpec spec;
    spec.problem = ProblemOf(m);
    for (const Graph& g : GenerateSeeds(spec)) {
      const TargetInput in = TargetInput::From(g);
      EXPECT_TRUE(Agrees(m, RunMutant(m, in, kHangBudget), RunParent(m, in), in))
          << MutantName(m) << "\n" << Serialize(g);
    }
  }
}

// Without a zero-or-negative cycle the comparison change is invisible.
TEST(MutantTest, GoldbergRadzikMatchesParentWithoutNonPositiveCycles) {
  const GraphProfile prof = ProfileFor(ProblemId::kSpf);
  Rng rng(99);
  int checked = 0;
  while (checked < 10000) {
    const Graph g = RandomGraph(prof, rng, kOracleMaxVertices, kOracleMaxEdges);
    bool clean = true;
    for (const auto& c : EnumerateSimpleCycles(g)) {
      if (CycleWeight(g, c) <= 0) clean = false;
    }
    if (!clean) continue;
    ++checked;
    const TargetInput in = TargetInput::From(g);
    ASSERT_EQ(std::get<TargetOutput>(RunMutant(MutantId::kGrZeroCycle, in)),
              std::get<TargetOutput>(RunParent(MutantId::kGrZeroCycle, in)))
        << Serialize(g);
  }
}

}  // namespace
}  // namespace gdfuzz
