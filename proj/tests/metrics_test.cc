// Copyright 2026 The viewdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "viewdiv/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.h"
#include "viewdiv/errors.h"
#include "viewdiv/oracle.h"
#include "viewdiv/synth.h"

namespace viewdiv {
namespace {

using ::viewdiv::testing::Builder;
using V = std::vector<std::uint64_t>;

std::optional<double> H(V counts) {
  return NormalizedEntropy(CategoryHistogram(std::move(counts)));
}

TEST(NormalizedEntropy, Examples) {
  EXPECT_EQ(H({20, 20, 20, 20, 20}), 1.0);
  EXPECT_EQ(H({10, 0, 0, 0, 0}), 0.0);
  // -(2 * 0.25 ln 0.25 + 0.5 ln 0.5) / ln 3, evaluated by hand.
  EXPECT_NEAR(*H({10, 10, 20}), 0.9464, 1e-4);
  EXPECT_NEAR(*H({10, 10, 20}), 0.946394630357186, 1e-12);
}

TEST(NormalizedEntropy, UndefinedAndErrors) {
  EXPECT_FALSE(H({0, 0, 0}).has_value());
  EXPECT_THROW(H({5}), ContractError);
  EXPECT_THROW(H({}), ContractError);
}

TEST(NormalizedEntropy, UsesConfiguredCategoryCount) {
  // Two equal categories out of four: ln 2 / ln 4.
  EXPECT_NEAR(*H({3, 3, 0, 0}), 0.5, 1e-15);
}

TEST(NormalizedEntropy, PermutationAndScaleInvariant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    V counts(n);
    for (auto& c : counts) c = rng() % 50;
    counts[0] += 1;
    const double base = *H(counts);
    EXPECT_GE(base, 0.0);
    EXPECT_LE(base, 1.0);
    V shuffled = counts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(*H(shuffled), base);
    V scaled = counts;
    for (auto& c : scaled) c *= 7;
    EXPECT_NEAR(*H(scaled), base, 1e-12);
  }
}

// Seeds: L (left, 6 originals), R (right, 4 originals), M (centre, minority,
// 5 originals).
Builder ThreeCamps() {
  Builder b;
  b.Category("left", Wing::kLeft)
      .Category("centre", Wing::kUnaligned)
      .Category("right", Wing::kRight);
  b.Seed("L", "left").Seed("R", "right").Seed("M", "centre", true);
  b.Originals("l", "L", 6).Originals("r", "R", 4).Originals("m", "M", 5);
  return b;
}

TEST(SourceDiversity, SingleSeedAndUniform) {
  Builder b;
  b.Category("a", Wing::kLeft).Category("b", Wing::kRight);
  b.Seed("A", "a").Seed("B", "b").Originals("x", "A", 3).Originals("y", "B", 3);
  b.Regular("one", {"A"}).Regular("both", {"A", "B"}).Regular("none", {});
  const Dataset ds = b.Build();
  EXPECT_EQ(SourceDiversity(ds, "one", ExposureMode::kDirect), 0.0);
  EXPECT_EQ(SourceDiversity(ds, "both", ExposureMode::kDirect), 1.0);
  EXPECT_FALSE(SourceDiversity(ds, "none", ExposureMode::kIndirect).has_value());
  EXPECT_THROW(SourceDiversity(ds, "ghost", ExposureMode::kDirect), LookupError);
}

TEST(OutputDiversity, RetweetsAndReplies) {
  Builder b = ThreeCamps();
  b.Regular("u", {"L"}).Regular("v", {"L"});
  for (int i = 0; i < 3; ++i) b.Retweet("ul" + std::to_string(i), "u", "l" + std::to_string(i));
  for (int c = 0; c < 3; ++c) {
    const std::string seed = c == 0 ? "L" : c == 1 ? "M" : "R";
    const std::string prefix = c == 0 ? "l" : c == 1 ? "m" : "r";
    b.Retweet("v" + prefix, "v", prefix + "0");
    b.Reply("vr" + prefix, "v", seed);
  }
  const Dataset ds = b.Build();
  EXPECT_EQ(OutputDiversity(ds, "u", OutputKind::kRetweet), 0.0);
  EXPECT_FALSE(OutputDiversity(ds, "u", OutputKind::kReply).has_value());
  EXPECT_EQ(OutputDiversity(ds, "v", OutputKind::kRetweet), 1.0);
  EXPECT_EQ(OutputDiversity(ds, "v", OutputKind::kReply), 1.0);
}

TEST(MinorityReach, DirectIndirectAndNone) {
  Builder b = ThreeCamps();
  b.Retweet("fwd", "L", "m3");
  b.Regular("follower", {"M"}).Regular("via", {"L"}).Regular("far", {"R"});
  const Dataset ds = b.Build();
  EXPECT_EQ(MinorityReach(ds, "follower"), 1.0);
  EXPECT_DOUBLE_EQ(*MinorityReach(ds, "via"), 1.0 / 5.0);
  EXPECT_EQ(MinorityReach(ds, "far"), 0.0);
}

TEST(MinorityReach, PartialCoverage) {
  Builder b;
  b.Category("a", Wing::kLeft).Category("b", Wing::kRight);
  b.Seed("M1", "a", true).Seed("M2", "a", true).Seed("X", "b");
  b.Originals("p", "M1", 3).Originals("q", "M2", 7).Originals("x", "X", 1);
  b.Regular("u", {"M1", "X"});
  const Dataset ds = b.Build();
  EXPECT_DOUBLE_EQ(*MinorityReach(ds, "u"), 0.3);
}

TEST(MinorityReach, UndefinedWithoutMinorityTweets) {
  Builder b;
  b.Category("a", Wing::kLeft).Category("b", Wing::kRight);
  b.Seed("M", "a", true).Seed("X", "b").Originals("x", "X", 2);
  b.Regular("u", {"X"});
  const Dataset ds = b.Build();
  EXPECT_FALSE(MinorityReach(ds, "u").has_value());
}

TEST(MinorityExposure, ShareOfTimeline) {
  Builder b;
  b.Category("a", Wing::kLeft).Category("b", Wing::kRight);
  b.Seed("M", "a", true).Seed("X", "b");
  b.Originals("m", "M", 23).Originals("x", "X", 77);
  b.Regular("u", {"M", "X"}).Regular("v", {"X"}).Regular("w", {});
  const Dataset ds = b.Build();
  EXPECT_DOUBLE_EQ(*MinorityExposure(ds, "u"), 0.23);
  EXPECT_EQ(MinorityExposure(ds, "v"), 0.0);
  EXPECT_FALSE(MinorityExposure(ds, "w").has_value());
}

TEST(IoCorrelated, ArgmaxRules) {
  using H = CategoryHistogram;
  EXPECT_EQ(IoCorrelated(H(V{5, 1, 1}), H(V{3, 0, 1}), 0.0), true);
  EXPECT_EQ(IoCorrelated(H(V{5, 1, 1}), H(V{0, 0, 3}), 0.0), false);
  EXPECT_EQ(IoCorrelated(H(V{2, 2, 2}), H(V{3, 0, 0}), 0.0), false);
  EXPECT_EQ(IoCorrelated(H(V{5, 1, 1}), H(V{2, 2, 0}), 0.0), false);
  EXPECT_FALSE(IoCorrelated(H(V{0, 0, 0}), H(V{1, 0, 0}), 0.0).has_value());
  EXPECT_FALSE(IoCorrelated(H(V{1, 0, 0}), H(V{0, 0, 0}), 0.0).has_value());
}

TEST(IoCorrelated, MarginThreshold) {
  using H = CategoryHistogram;
  // n = 4: shares must reach 0.25 + 0.15 = 0.40 on both sides.
  EXPECT_EQ(IoCorrelated(H(V{4, 2, 2, 2}), H(V{1, 0, 0, 0}), 0.15), true);
  EXPECT_EQ(IoCorrelated(H(V{3, 2, 2, 2}), H(V{1, 0, 0, 0}), 0.15), false);
  EXPECT_EQ(IoCorrelated(H(V{1, 0, 0, 0}), H(V{2, 1, 1, 1}), 0.15), true);
  EXPECT_EQ(IoCorrelated(H(V{1, 0, 0, 0}), H(V{3, 2, 2, 1}), 0.15), false);
}

TEST(SeedInteractionMatrix, OnlyLeftToLeft) {
  Builder b;
  b.Category("l", Wing::kLeft).Category("r", Wing::kRight);
  b.Seed("L1", "l").Seed("L2", "l").Seed("R1", "r");
  b.Original("a", "L1").Original("b", "R1");
  b.Retweet("x", "L2", "a").Reply("y", "L1", "L2");
  const WingMatrix m = SeedInteractionMatrix(b.Build());
  EXPECT_EQ(m.share(Wing::kLeft, Wing::kLeft), 1.0);
  EXPECT_EQ(m.share(Wing::kLeft, Wing::kRight), 0.0);
  EXPECT_FALSE(m.share(Wing::kRight, Wing::kLeft).has_value());
  EXPECT_EQ(m.row_total(Wing::kLeft), 2u);
  EXPECT_THROW(m.share(Wing::kUnaligned, Wing::kLeft), ContractError);
}

TEST(SeedInteractionMatrix, RowShares) {
  WingMatrix m;
  m.counts[0] = {73, 27};
  EXPECT_DOUBLE_EQ(*m.share(Wing::kLeft, Wing::kLeft), 0.73);
  EXPECT_DOUBLE_EQ(*m.share(Wing::kLeft, Wing::kRight), 0.27);
}

TEST(SeedInteractionMatrix, RegularsDoNotCount) {
  Builder b;
  b.Category("l", Wing::kLeft).Category("r", Wing::kRight);
  b.Seed("L1", "l").Seed("R1", "r").Original("a", "L1");
  b.Regular("u", {"L1"}).Retweet("x", "u", "a").Reply("y", "u", "R1");
  EXPECT_EQ(SeedInteractionMatrix(b.Build()), WingMatrix{});
}

TEST(SeedInteractionMatrix, TracksGeneratorHomophily) {
  // Four aligned categories, two per wing. A seed keeps its interaction
  // in its own category with weight h and otherwise picks uniformly, so
  // the same-wing share is h + (1 - h) / 2.
  SynthParams params;
  params.n_categories = 4;
  params.n_seeds = 400;
  params.n_regulars = 0;
  params.minority_categories = {0};
  params.seed_retweets_per_seed = 20;
  params.seed_replies_per_seed = 10;
  for (double h : {0.0, 0.5, 0.9}) {
    params.homophily = h;
    const WingMatrix m = SeedInteractionMatrix(Generate(params));
    const double expected = h + (1 - h) / 2;
    EXPECT_NEAR(*m.share(Wing::kLeft, Wing::kLeft), expected, 0.03) << h;
    EXPECT_NEAR(*m.share(Wing::kRight, Wing::kRight), expected, 0.03) << h;
  }
}

TEST(ComputeAll, EmptyRegularSet) {
  Builder b;
  b.Category("l", Wing::kLeft).Category("r", Wing::kRight);
  b.Seed("L1", "l").Seed("R1", "r").Original("a", "L1").Retweet("x", "R1", "a");
  const MetricsReport report = ComputeAll(b.Build());
  EXPECT_TRUE(report.users.empty());
  EXPECT_EQ(report.seed_matrix.row_total(Wing::kRight), 1u);
}

TEST(ComputeAll, ComposesPerUserOperations) {
  const Dataset ds = testing::LoadToy().dataset;
  const MetricsReport report = ComputeAll(ds);
  ASSERT_EQ(report.users.size(), 3u);
  for (const UserMetrics& m : report.users) {
    const std::string& id = m.user_id;
    EXPECT_EQ(m.direct_source_diversity, SourceDiversity(ds, id, ExposureMode::kDirect));
    EXPECT_EQ(m.indirect_source_diversity, SourceDiversity(ds, id, ExposureMode::kIndirect));
    EXPECT_EQ(m.retweet_diversity, OutputDiversity(ds, id, OutputKind::kRetweet));
    EXPECT_EQ(m.reply_diversity, OutputDiversity(ds, id, OutputKind::kReply));
    EXPECT_EQ(m.minority_reach, MinorityReach(ds, id));
    EXPECT_EQ(m.minority_exposure, MinorityExposure(ds, id));
    EXPECT_EQ(m.io_correlated, IoCorrelation(ds, id, 0.0));
    EXPECT_EQ(m.io_correlated_margin, IoCorrelation(ds, id, 0.15));
  }
  EXPECT_EQ(report.seed_matrix, SeedInteractionMatrix(ds));
}

TEST(ComputeAll, ToyValues) {
  const MetricsReport report = ComputeAll(testing::LoadToy().dataset);
  const UserMetrics& u1 = report.users[0];
  const UserMetrics& u2 = report.users[1];
  const UserMetrics& u3 = report.users[2];
  EXPECT_NEAR(*u1.direct_source_diversity, 0.6216097450797566, 1e-12);
  EXPECT_NEAR(*u1.indirect_source_diversity, 0.965633607142825, 1e-12);
  EXPECT_NEAR(*u1.retweet_diversity, 0.8649735207179272, 1e-12);
  EXPECT_NEAR(*u1.reply_diversity, 0.6309297535714574, 1e-12);
  EXPECT_EQ(u1.minority_reach, 1.0);
  EXPECT_NEAR(*u1.minority_exposure, 3.0 / 9.0, 1e-15);
  EXPECT_EQ(u1.io_correlated, true);
  EXPECT_EQ(u1.io_correlated_margin, false);

  EXPECT_EQ(u2.direct_source_diversity, 0.0);
  EXPECT_NEAR(*u2.indirect_source_diversity, 0.4554859150035952, 1e-12);
  EXPECT_FALSE(u2.reply_diversity.has_value());
  EXPECT_EQ(u2.minority_reach, 0.0);
  EXPECT_EQ(u2.io_correlated_margin, true);

  EXPECT_NEAR(*u3.direct_source_diversity, 0.992215060722018, 1e-12);
  EXPECT_NEAR(*u3.retweet_diversity, 0.920619835714305, 1e-12);
  EXPECT_EQ(u3.reply_diversity, 0.0);
  EXPECT_NEAR(*u3.minority_exposure, 3.0 / 11.0, 1e-15);
  EXPECT_EQ(u3.io_correlated, false);
}

TEST(ComputeAll, ThreadCountDoesNotChangeResults) {
  SynthParams params = Preset("pluralist");
  params.n_regulars = 600;
  const Dataset ds = Generate(params);
  const MetricsReport one = ComputeAll(ds, {0.15, 1});
  const MetricsReport many = ComputeAll(ds, {0.15, 4});
  EXPECT_EQ(one.users, many.users);
  EXPECT_EQ(one.seed_matrix, many.seed_matrix);
}

TEST(Oracle, MatchesToyFixture) {
  const Dataset ds = testing::LoadToy().dataset;
  const MetricsReport fast = ComputeAll(ds);
  const MetricsReport slow = OracleMetrics(ds);
  ASSERT_EQ(fast.users.size(), slow.users.size());
  for (std::size_t i = 0; i < fast.users.size(); ++i) {
    const UserMetrics& a = fast.users[i];
    const UserMetrics& b = slow.users[i];
    EXPECT_EQ(a.user_id, b.user_id);
    auto near = [](std::optional<double> x, std::optional<double> y) {
      return x.has_value() == y.has_value() && (!x || std::abs(*x - *y) <= 1e-12);
    };
    EXPECT_TRUE(near(a.direct_source_diversity, b.direct_source_diversity));
    EXPECT_TRUE(near(a.indirect_source_diversity, b.indirect_source_diversity));
    EXPECT_TRUE(near(a.retweet_diversity, b.retweet_diversity));
    EXPECT_TRUE(near(a.reply_diversity, b.reply_diversity));
    EXPECT_TRUE(near(a.minority_reach, b.minority_reach));
    EXPECT_TRUE(near(a.minority_exposure, b.minority_exposure));
    EXPECT_EQ(a.io_correlated, b.io_correlated);
    EXPECT_EQ(a.io_correlated_margin, b.io_correlated_margin);
  }
  EXPECT_EQ(fast.seed_matrix, slow.seed_matrix);
}

TEST(Oracle, SingleUser) {
  Builder b;
  b.Category("l", Wing::kLeft).Category("r", Wing::kRight);
  b.Seed("A", "l", true).Seed("B", "r");
  b.Originals("a", "A", 1).Originals("b", "B", 3);
  b.Regular("u", {"A", "B"}).Retweet("x", "u", "b0");
  const MetricsReport report = OracleMetrics(b.Build());
  ASSERT_EQ(report.users.size(), 1u);
  const UserMetrics& m = report.users[0];
  // Shares 1/4 and 3/4: -(0.25 log2 0.25 + 0.75 log2 0.75).
  EXPECT_NEAR(*m.direct_source_diversity, 0.8112781244591328, 1e-12);
  EXPECT_EQ(m.retweet_diversity, 0.0);
  EXPECT_FALSE(m.reply_diversity.has_value());
  EXPECT_EQ(m.minority_reach, 1.0);
  EXPECT_EQ(m.minority_exposure, 0.25);
  EXPECT_EQ(m.io_correlated, true);
  EXPECT_EQ(m.io_correlated_margin, true);  // 0.75 >= 0.5 + 0.15
}

TEST(Oracle, RefusesLargeDatasets) {
  SynthParams params = Preset("pluralist");
  EXPECT_THROW(OracleMetrics(Generate(params)), RefusalError);
}

}  // namespace
}  // namespace viewdiv
