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

#include <map>

#include "gtest/gtest.h"
#include "gdfuzz/corpus.h"
#include "gdfuzz/signal.h"

namespace gdfuzz {
namespace {

TEST(BucketTest, RangeTable) {
  EXPECT_EQ(Bucket(0), 0);
  EXPECT_EQ(Bucket(1), 1);
  EXPECT_EQ(Bucket(2), 2);
  EXPECT_EQ(Bucket(3), 3);
  EXPECT_EQ(Bucket(4), 4);
  EXPECT_EQ(Bucket(7), 4);
  EXPECT_EQ(Bucket(8), 5);
  EXPECT_EQ(Bucket(15), 5);
  EXPECT_EQ(Bucket(16), 6);
  EXPECT_EQ(Bucket(31), 6);
  EXPECT_EQ(Bucket(32), 7);
  EXPECT_EQ(Bucket(37), 7);
  EXPECT_EQ(Bucket(127), 7);
  EXPECT_EQ(Bucket(128), 8);
  EXPECT_EQ(Bucket(1 << 20), 8);
  EXPECT_EQ(Bucket(-9), -5);
}

TEST(BucketTest, OddAndMonotone) {
  for (int64_t x = 0; x < 5000; ++x) {
    ASSERT_EQ(Bucket(-x), -Bucket(x));
    ASSERT_LE(Bucket(x), Bucket(x + 1));
  }
}

TEST(SignalTest, TableExamples) {
  EXPECT_EQ(ExtractSignal(ProblemId::kScc, SccOut{{{0, 1}, {2}}}),
            (SignalKey{ProblemId::kScc, 2, 2}));
  EXPECT_EQ(ExtractSignal(ProblemId::kHc, HcOut{{1.5, 2.0, 2.0}}),
            (SignalKey{ProblemId::kHc, 500, 0}));
  EXPECT_EQ(ExtractSignal(ProblemId::kMst, MstOut{{}, 37, 5}),
            (SignalKey{ProblemId::kMst, 7, 5}));
}

TEST(SignalTest, ConventionsForDegenerateOutputs) {
  EXPECT_EQ(ExtractSignal(ProblemId::kSpf, SpfOut::Unreachable()).a, -1);
  EXPECT_EQ(ExtractSignal(ProblemId::kSpf, SpfOut::NegativeCycle()).a, -2);
  EXPECT_EQ(ExtractSignal(ProblemId::kSpf, SpfOut::Length(11)).a, 11);
  EXPECT_EQ(ExtractSignal(ProblemId::kHc, HcOut{{0.0}}).a, 0);
  EXPECT_EQ(ExtractSignal(ProblemId::kJs, JsOut{}).a, 0);
  EXPECT_EQ(ExtractSignal(ProblemId::kAa, AaOut{}).a, 0);
  EXPECT_EQ(ExtractSignal(ProblemId::kMm, MmOut{}).a, 0);
  EXPECT_EQ(ExtractSignal(ProblemId::kBcc, BccOut{}).a, 0);
  EXPECT_EQ(ExtractSignal(ProblemId::kScc, SccOut{}), (SignalKey{ProblemId::kScc, 0, 0}));
}

TEST(SignalTest, ScoresAndCounts) {
  EXPECT_EQ(ExtractSignal(ProblemId::kJs, JsOut{{{0, 1, 0.25}, {0, 2, 1.0 / 3}}}).a, 333);
  EXPECT_EQ(ExtractSignal(ProblemId::kAa, AaOut{{{0, 1, 0.29}}}).a, 290);
  EXPECT_EQ(ExtractSignal(ProblemId::kMm, MmOut{{{0, 1}, {2, 3}}}).a, 2);
  EXPECT_EQ(ExtractSignal(ProblemId::kMfv, MfvOut{42}).a, 42);
  EXPECT_EQ(ExtractSignal(ProblemId::kBcc, BccOut{{{0, 1, 2}, {2, 3}}}).a, 3);
  EXPECT_THROW(ExtractSignal(ProblemId::kMfv, MmOut{}), std::invalid_argument);
}

TEST(SignalTest, QuantizeFloors) {
  EXPECT_EQ(QuantizeScore(0.0), 0);
  EXPECT_EQ(QuantizeScore(0.9999), 999);
  EXPECT_EQ(QuantizeScore(1.0), 1000);
  EXPECT_EQ(QuantizeScore(0.29), 290);
}

TEST(FeedbackModeTest, Names) {
  for (FeedbackMode m : {FeedbackMode::kNone, FeedbackMode::kCov, FeedbackMode::kAlgo,
                         FeedbackMode::kCombo}) {
    EXPECT_EQ(ParseFeedbackMode(FeedbackModeName(m)), m);
  }
  EXPECT_EQ(ParseFeedbackMode("ALGO"), FeedbackMode::kAlgo);
  EXPECT_EQ(ParseFeedbackMode("fast"), std::nullopt);
}

TEST(IsInterestingTest, NoneNeverFires) {
  Corpus c;
  ProbeMap probes;
  probes.Record(1);
  const SignalKey sig{ProblemId::kScc, 2, 2};
  EXPECT_FALSE(IsInteresting(FeedbackMode::kNone, &sig, &probes, c));
  EXPECT_FALSE(IsInteresting(FeedbackMode::kNone, nullptr, nullptr, c));
}

TEST(IsInterestingTest, AlgoDedupsSignals) {
  Corpus c;
  const SignalKey sig{ProblemId::kScc, 2, 2};
  auto key = IsInteresting(FeedbackMode::kAlgo, &sig, nullptr, c);
  ASSERT_TRUE(key);
  EXPECT_TRUE(c.AddIfNovel(Graph::SingleVertex(true), *key));
  EXPECT_FALSE(IsInteresting(FeedbackMode::kAlgo, &sig, nullptr, c));
}

TEST(IsInterestingTest, CovJudgesProbeBuckets) {
  Corpus c;
  ProbeMap probes;
  probes.Record(300);
  auto key = IsInteresting(FeedbackMode::kCov, nullptr, &probes, c);
  ASSERT_TRUE(key);
  ASSERT_TRUE(c.AddIfNovel(Graph::SingleVertex(true), *key));
  EXPECT_FALSE(IsInteresting(FeedbackMode::kCov, nullptr, &probes, c));
  // Same probe, count 2: a new bucket.
  probes.Record(300);
  EXPECT_TRUE(IsInteresting(FeedbackMode::kCov, nullptr, &probes, c));
  // Counts 4..7 share a bucket.
  probes.Clear();
  for (int i = 0; i < 4; ++i) probes.Record(300);
  ASSERT_TRUE(c.AddIfNovel(Graph::SingleVertex(true),
                           *IsInteresting(FeedbackMode::kCov, nullptr, &probes, c)));
  probes.Record(300);
  probes.Record(300);
  EXPECT_FALSE(IsInteresting(FeedbackMode::kCov, nullptr, &probes, c));
}

TEST(IsInterestingTest, ComboIsADisjunction) {
  Corpus c;
  ProbeMap probes;
  probes.Record(5);
  const SignalKey sig{ProblemId::kMfv, 3, 0};
  auto key = IsInteresting(FeedbackMode::kCombo, &sig, &probes, c);
  ASSERT_TRUE(key);
  ASSERT_TRUE(c.AddIfNovel(Graph::SingleVertex(true), *key));
  EXPECT_FALSE(IsInteresting(FeedbackMode::kCombo, &sig, &probes, c));
  // Stale signal, new probe.
  probes.Record(6);
  auto probe_only = IsInteresting(FeedbackMode::kCombo, &sig, &probes, c);
  ASSERT_TRUE(probe_only);
  EXPECT_EQ(std::get<ComboKey>(*probe_only).algo.signal, sig);
  // New signal, stale probes.
  probes.Clear();
  probes.Record(5);
  const SignalKey fresh{ProblemId::kMfv, 4, 0};
  EXPECT_TRUE(IsInteresting(FeedbackMode::kCombo, &fresh, &probes, c));
}

TEST(IsInterestingTest, MissingInputsAreRejected) {
  Corpus c;
  ProbeMap probes;
  const SignalKey sig{ProblemId::kMm, 1, 0};
  EXPECT_THROW(IsInteresting(FeedbackMode::kAlgo, nullptr, &probes, c), MissingFeedbackInput);
  EXPECT_THROW(IsInteresting(FeedbackMode::kCov, &sig, nullptr, c), MissingFeedbackInput);
  EXPECT_THROW(IsInteresting(FeedbackMode::kCombo, &sig, nullptr, c), MissingFeedbackInput);
}

TEST(CorpusTest, ChooseNextSingleton) {
  Corpus c;
  c.AddSeed(Graph::SingleVertex(false));
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(c.ChooseNext(rng), Graph::SingleVertex(false));
}

TEST(CorpusTest, ChooseNextEmptyThrows) {
  Corpus c;
  Rng rng(1);
  EXPECT_THROW(c.ChooseNext(rng), EmptyCorpus);
}

TEST(CorpusTest, ChooseNextIsUniform) {
  Corpus c;
  for (VertexId n = 1; n <= 4; ++n) {
    Graph g = Graph::SingleVertex(false);
    g.num_vertices = n;
    c.AddSeed(g);
  }
  Rng rng(2);
  std::map<VertexId, int> hits;
  const int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) ++hits[c.ChooseNext(rng).num_vertices];
  for (const auto& [n, k] : hits) {
    const double f = static_cast<double>(k) / kDraws;
    EXPECT_GE(f, 0.24) << n;
    EXPECT_LE(f, 0.26) << n;
  }
}

TEST(CorpusTest, ChooseNextReplays) {
  Corpus c;
  for (int i = 0; i < 10; ++i) c.AddSeed(Graph::SingleVertex(false));
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(&c.ChooseNext(a), &c.ChooseNext(b));
}

TEST(CorpusTest, AssignEnergyIsConstant) {
  Graph g = Graph::SingleVertex(false);
  EXPECT_EQ(AssignEnergy(g, 100), 100);
  EXPECT_EQ(AssignEnergy(g, 1), 1);
  g.num_vertices = 30;
  EXPECT_EQ(AssignEnergy(g, 64), 64);
}

TEST(CorpusTest, AddIfNovelCounts) {
  Corpus c;
  c.AddSeed(Graph::SingleVertex(true));
  EXPECT_TRUE(c.AddIfNovel(Graph::SingleVertex(true), AlgoSignal{{ProblemId::kMfv, 1, 0}}));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_FALSE(c.AddIfNovel(Graph::SingleVertex(true), AlgoSignal{{ProblemId::kMfv, 1, 0}}));
  EXPECT_EQ(c.size(), 2u);
  for (int i = 0; i < 1000; ++i) {
    c.AddIfNovel(Graph::SingleVertex(true), AlgoSignal{{ProblemId::kMfv, 100 + i % 100, 0}}, i);
  }
  EXPECT_EQ(c.size(), 102u);
}

TEST(CorpusTest, DuplicateSeedsAreAllKept) {
  Corpus c;
  for (int i = 0; i < 3; ++i) c.AddSeed(Graph::SingleVertex(true));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(std::get<SeedOrigin>(c.entries()[2].key).index, 2);
}

TEST(CorpusTest, FileNames) {
  EXPECT_EQ(CorpusFileName(0), "000000.graph");
  EXPECT_EQ(CorpusFileName(42), "000042.graph");
}

}  // namespace
}  // namespace gdfuzz
