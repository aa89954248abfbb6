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


#include "gdfuzz/oracle.h"

#include "gtest/gtest.h"
#include "gdfuzz/problem.h"
#include "tests/test_util.h"

namespace gdfuzz {
namespace {

using testing::MakeGraph;
using testing::RandomGraph;

TEST(OracleTest, JaccardTriangle) {
  const Graph k3 = MakeGraph(false, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  const auto o = std::get<JsOut>(BruteForceOracle(ProblemId::kJs, TargetInput::From(k3)));
  ASSERT_EQ(o.scores.size(), 3u);
  EXPECT_DOUBLE_EQ(o.scores[0].score, 1.0 / 3);
}

TEST(OracleTest, SccTwoCycle) {
  const Graph g = MakeGraph(true, 2, {{0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(std::get<SccOut>(BruteForceOracle(ProblemId::kScc, TargetInput::From(g))).components,
            (Components{{0, 1}}));
}

TEST(OracleTest, MaxFlowSingleArc) {
  const Graph g = MakeGraph(true, 2, {{0, 1, 5}});
  EXPECT_EQ(std::get<MfvOut>(BruteForceOracle(ProblemId::kMfv, TargetInput::From(g))).value, 5);
}

TEST(OracleTest, ZeroCycleIsNotNegative) {
  const Graph g = MakeGraph(true, 2, {{0, 1, 1}, {1, 0, -1}});
  EXPECT_EQ(std::get<SpfOut>(BruteForceOracle(ProblemId::kSpf, TargetInput::From(g))),
            SpfOut::Length(1));
}

TEST(OracleTest, SizeGuard) {
  Graph g = Graph::SingleVertex(true);
  g.num_vertices = 9;
  EXPECT_THROW(BruteForceOracle(ProblemId::kScc, TargetInput::From(g)), OracleTooLarge);
}

TEST(OracleTest, EnumeratesSimpleCycles) {
  const Graph k3 = MakeGraph(false, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  EXPECT_EQ(EnumerateSimpleCycles(k3).size(), 1u);
  const Graph dk3 = MakeGraph(true, 3, {{0, 1, 1}, {1, 0, 1}, {0, 2, 1}, {2, 0, 1},
                                        {1, 2, 1}, {2, 1, 1}});
  EXPECT_EQ(EnumerateSimpleCycles(dk3).size(), 5u);
  const Graph k4 = MakeGraph(false, 4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1},
                                        {1, 3, 1}, {2, 3, 1}});
  EXPECT_EQ(EnumerateSimpleCycles(k4).size(), 7u);  // 4 triangles, 3 squares
  const Graph two = MakeGraph(true, 2, {{0, 1, 3}, {1, 0, -3}});
  const auto cycles = EnumerateSimpleCycles(two);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(CycleWeight(two, cycles[0]), 0);
}

// Every implementation against the oracle on small random graphs. The
// acceptance suite runs the full 2,000-graph version.
TEST(OracleAgreementTest, AllImplementationsSmallGraphs) {
  Rng rng(12345);
  for (ProblemId p : kAllProblems) {
    for (ImplId impl : ImplsOf(p)) {
      const GraphProfile prof = ProfileFor(p, std::vector<ImplId>{impl});
      for (int i = 0; i < 300; ++i) {
        const TargetInput in = TargetInput::From(RandomGraph(prof, rng, 7, kOracleMaxEdges));
        const TargetOutput want = BruteForceOracle(p, in);
        const ExecResult got = RunTarget(p, impl, in, nullptr);
        ASSERT_TRUE(std::holds_alternative<TargetOutput>(got)) << ImplName(impl);
        const Comparison c = CompareOutputs(p, want, std::get<TargetOutput>(got), &in);
        ASSERT_TRUE(c.equal) << ImplName(impl) << ": " << c.explanation << "\n"
                             << Serialize(in.graph);
      }
    }
  }
}

}  // namespace
}  // namespace gdfuzz
