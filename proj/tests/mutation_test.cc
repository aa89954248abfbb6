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


#include "gdfuzz/mutation.h"

#include <map>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "gdfuzz/problem.h"
#include "tests/test_util.h"

namespace gdfuzz {
namespace {

using testing::MakeGraph;
using testing::RandomGraph;

TEST(MutationTest, AddVertexOnSingleVertex) {
  Rng rng(1);
  Graph g = ApplyMutation(MutationKind::kAddVertex, Graph::SingleVertex(false), nullptr,
                          ProfileFor(ProblemId::kBcc), rng);
  EXPECT_EQ(g.num_vertices, 2);
  EXPECT_TRUE(g.edges.empty());
}

TEST(MutationTest, AddVertexAtCapIsNoOp) {
  GraphProfile p = ProfileFor(ProblemId::kBcc);
  p.max_vertices = 3;
  Rng rng(1);
  Graph g = MakeGraph(false, 3, {{0, 1, 1}});
  EXPECT_EQ(ApplyMutation(MutationKind::kAddVertex, g, nullptr, p, rng), g);
}

TEST(MutationTest, RemoveVertexOnSingleVertexIsNoOp) {
  Rng rng(1);
  const Graph g = Graph::SingleVertex(true);
  EXPECT_EQ(ApplyMutation(MutationKind::kRemoveVertex, g, nullptr,
                          ProfileFor(ProblemId::kScc), rng),
            g);
}

TEST(MutationTest, RemoveVertexRelabelsDownward) {
  // Path 0-1-2-3; whichever vertex goes, ids stay dense and edges follow.
  const Graph g = MakeGraph(false, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  std::set<std::string> outcomes;
  for (uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng(seed);
    Graph out = ApplyMutation(MutationKind::kRemoveVertex, g, nullptr,
                              ProfileFor(ProblemId::kBcc), rng);
    EXPECT_EQ(out.num_vertices, 3);
    outcomes.insert(Serialize(out));
  }
  EXPECT_EQ(outcomes, (std::set<std::string>{"U 3 2\n0 1 1\n1 2 1\n",
                                             "U 3 1\n1 2 1\n", "U 3 1\n0 1 1\n"}));
}

TEST(MutationTest, CombinePathsWithoutBridges) {
  const GraphProfile p = ProfileFor(ProblemId::kMst);
  const Graph path = MakeGraph(false, 2, {{0, 1, 7}});
  // Combine's first draw is the bridge count; find a stream that draws 0.
  uint64_t seed = 0;
  while (Rng(seed).Uniform(0, 3) != 0) ++seed;
  Rng rng(seed);
  Graph out = ApplyMutation(MutationKind::kCombine, path, &path, p, rng);
  EXPECT_EQ(out, MakeGraph(false, 4, {{0, 1, 7}, {2, 3, 7}}));
}

TEST(MutationTest, CombineBridgesConnectHostAndDonor) {
  const GraphProfile p = ProfileFor(ProblemId::kScc);
  const Graph host = Graph::SingleVertex(true);
  uint64_t seed = 0;
  while (Rng(seed).Uniform(0, 3) != 2) ++seed;
  Rng rng(seed);
  Graph out = ApplyMutation(MutationKind::kCombine, host, &host, p, rng);
  EXPECT_EQ(out.num_vertices, 2);
  EXPECT_EQ(out.edges.size(), 2u);  // 0->1 and 1->0, the only bridges
}

TEST(MutationTest, CombineTruncatesToCaps) {
  GraphProfile p = ProfileFor(ProblemId::kBcc);
  p.max_vertices = 5;
  const Graph path = MakeGraph(false, 3, {{0, 1, 1}, {1, 2, 1}});
  Rng rng(5);
  Graph out = ApplyMutation(MutationKind::kCombine, path, &path, p, rng);
  EXPECT_EQ(out.num_vertices, 5);
  EXPECT_TRUE(IsValid(out, p));
}

TEST(MutationTest, CombineWithoutDonorThrows) {
  Rng rng(1);
  EXPECT_THROW(ApplyMutation(MutationKind::kCombine, Graph::SingleVertex(false), nullptr,
                             ProfileFor(ProblemId::kBcc), rng),
               DonorMissing);
}

TEST(MutationTest, AddEdgeOnCompleteGraphIsNoOp) {
  const Graph k3 = MakeGraph(false, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  Rng rng(1);
  EXPECT_EQ(ApplyMutation(MutationKind::kAddEdge, k3, nullptr, ProfileFor(ProblemId::kBcc), rng),
            k3);
}

TEST(MutationTest, AddEdgeIsUniformOverNonEdges) {
  // Directed, 3 vertices, no self-loops: six candidate edges.
  const Graph g = MakeGraph(true, 3, {});
  Rng rng(9);
  std::map<std::pair<VertexId, VertexId>, int> hits;
  const int kDraws = 60000;
  for (int i = 0; i < kDraws; ++i) {
    Graph out = ApplyMutation(MutationKind::kAddEdge, g, nullptr, ProfileFor(ProblemId::kScc), rng);
    ASSERT_EQ(out.edges.size(), 1u);
    ++hits[{out.edges[0].u, out.edges[0].v}];
  }
  ASSERT_EQ(hits.size(), 6u);
  for (const auto& [edge, n] : hits) {
    EXPECT_NEAR(static_cast<double>(n) / kDraws, 1.0 / 6, 0.01);
  }
}

TEST(MutationTest, AddEdgeRespectsParityAndSelfLoops) {
  Rng rng(4);
  Graph mm = MakeGraph(false, 4, {});
  Graph js = MakeGraph(false, 1, {});
  for (int i = 0; i < 10; ++i) {
    mm = ApplyMutation(MutationKind::kAddEdge, mm, nullptr, ProfileFor(ProblemId::kMm), rng);
    js = ApplyMutation(MutationKind::kAddEdge, js, nullptr, ProfileFor(ProblemId::kJs), rng);
  }
  EXPECT_EQ(mm.edges.size(), 4u);  // K2,2 on parity classes
  EXPECT_TRUE(IsValid(mm, ProfileFor(ProblemId::kMm)));
  EXPECT_EQ(Serialize(js), "U 1 1\n0 0 1\n");
}

TEST(MutationTest, UpdateWeightSkipsUnweightedProfiles) {
  const Graph g = MakeGraph(false, 2, {{0, 1, 1}});
  Rng rng(1);
  EXPECT_EQ(ApplyMutation(MutationKind::kUpdateWeight, g, nullptr, ProfileFor(ProblemId::kBcc), rng),
            g);
}

TEST(MutationTest, TrimKeepsAVertex) {
  Rng rng(2);
  for (int n = 1; n <= 12; ++n) {
    Graph g = MakeGraph(false, n, {});
    Graph out = ApplyMutation(MutationKind::kTrim, g, nullptr, ProfileFor(ProblemId::kBcc), rng);
    EXPECT_GE(out.num_vertices, 1);
    EXPECT_GE(out.num_vertices, n - std::max(1, n / 4));
    if (n > 1) EXPECT_LT(out.num_vertices, n);
  }
}

TEST(MutationTest, EveryKindPreservesEveryProfile) {
  Rng rng(2024);
  for (ProblemId problem : kAllProblems) {
    const GraphProfile p = ProfileFor(problem);
    for (int i = 0; i < 1200; ++i) {
      const Graph g = RandomGraph(p, rng, 30, 120);
      const Graph donor = RandomGraph(p, rng, 30, 120);
      const MutationKind kind = kAllMutationKinds[i % kAllMutationKinds.size()];
      const Graph out = ApplyMutation(kind, g, &donor, p, rng);
      const auto violations = Validate(out, p);
      ASSERT_TRUE(violations.empty())
          << ProblemName(problem) << " " << MutationKindName(kind) << ": "
          << violations.front().detail << "\n" << Serialize(g);
    }
  }
}

TEST(MutationTest, TightCapsHoldUnderStacking) {
  GraphProfile p = ProfileFor(ProblemId::kJs);
  p.max_vertices = 6;
  p.max_edges = 5;
  Rng rng(77);
  Graph g = Graph::SingleVertex(false);
  const DonorSampler sampler = [&g](Rng&) -> const Graph& { return g; };
  for (int i = 0; i < 2000; ++i) {
    g = StackedMutate(g, sampler, p, rng);
    ASSERT_TRUE(IsValid(g, p)) << Serialize(g);
  }
}

TEST(StackedMutateTest, TenThousandFromSingleVertexStayValid) {
  const GraphProfile p = ProfileFor(ProblemId::kSpf);
  std::vector<Graph> pool = {Graph::SingleVertex(true)};
  const DonorSampler sampler = [&pool](Rng& r) -> const Graph& {
    return pool[r.Below(pool.size())];
  };
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const Graph& seed = pool[rng.Below(pool.size())];
    Graph out = StackedMutate(seed, sampler, p, rng);
    ASSERT_TRUE(IsValid(out, p)) << Serialize(out);
    if (pool.size() < 64) pool.push_back(std::move(out));
  }
}

TEST(StackedMutateTest, StackSizesArePowersOfTwoClamped) {
  Rng rng(5);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(DrawStackSize(rng, 128));
  EXPECT_EQ(seen, (std::set<int>{2, 4, 8, 16, 32, 64, 128}));
  for (int i = 0; i < 200; ++i) EXPECT_EQ(DrawStackSize(rng, 2), 2);
  seen.clear();
  for (int i = 0; i < 2000; ++i) seen.insert(DrawStackSize(rng, 10));
  EXPECT_EQ(seen, (std::set<int>{2, 4, 8, 10}));
}

TEST(StackedMutateTest, MaxStackTwoAppliesTwoOperators) {
  const GraphProfile p = ProfileFor(ProblemId::kScc);
  const Graph seed = MakeGraph(true, 3, {{0, 1, 1}, {1, 2, 1}});
  const DonorSampler sampler = [&seed](Rng& r) -> const Graph& {
    r.Next();
    return seed;
  };
  for (uint64_t s = 0; s < 200; ++s) {
    Rng stacked(s);
    const Graph out = StackedMutate(seed, sampler, p, stacked, 2);
    // The same stream replayed by hand with exactly two operators.
    Rng manual(s);
    ASSERT_EQ(DrawStackSize(manual, 2), 2);
    Graph expected = seed;
    for (int i = 0; i < 2; ++i) {
      const MutationKind kind = kAllMutationKinds[manual.Below(kAllMutationKinds.size())];
      const Graph* donor = kind == MutationKind::kCombine ? &sampler(manual) : nullptr;
      MutateInPlace(kind, expected, donor, p, manual);
    }
    EXPECT_EQ(out, expected);
    EXPECT_EQ(stacked.Next(), manual.Next());
  }
}

TEST(StackedMutateTest, DeterministicForSameSeed) {
  const GraphProfile p = ProfileFor(ProblemId::kMst);
  const Graph seed = MakeGraph(false, 4, {{0, 1, 3}, {1, 2, 9}, {2, 3, 1}});
  const DonorSampler sampler = [&seed](Rng&) -> const Graph& { return seed; };
  for (uint64_t s = 0; s < 50; ++s) {
    Rng a(s), b(s);
    EXPECT_EQ(Serialize(StackedMutate(seed, sampler, p, a)),
              Serialize(StackedMutate(seed, sampler, p, b)));
  }
}

TEST(StackedMutateTest, ReachesSmallDirectedGraphs) {
  // Spot-check reachability: every directed, unweighted, loop-free graph on up
  // to three vertices is hit from the single-vertex seed.
  const GraphProfile p = ProfileFor(ProblemId::kScc);
  std::set<std::string> targets;
  Rng pick(3);
  for (int i = 0; i < 1000; ++i) {
    targets.insert(Serialize(RandomGraph(p, pick, 3, 6)));
  }
  const Graph seed = Graph::SingleVertex(true);
  const DonorSampler sampler = [&seed](Rng&) -> const Graph& { return seed; };
  Rng rng(8);
  std::set<std::string> hit;
  for (int attempt = 0; attempt < 400000 && hit.size() < targets.size(); ++attempt) {
    Graph g = StackedMutate(seed, sampler, p, rng, 8);
    std::string s = Serialize(g);
    if (targets.count(s)) hit.insert(std::move(s));
  }
  EXPECT_EQ(hit.size(), targets.size());
}

}  // namespace
}  // namespace gdfuzz
