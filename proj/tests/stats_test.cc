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

#include "viewdiv/stats.h"

#include <gtest/gtest.h>

#include <random>

#include "reference_ttest.h"
#include "viewdiv/errors.h"

namespace viewdiv {
namespace {

TEST(Distribution, BinBoundaries) {
  const std::vector<double> samples = {0.0, 0.049, 0.05};
  const MetricDistribution d = Distribution("m", samples, 0.05);
  ASSERT_EQ(d.bins.size(), 20u);
  EXPECT_EQ(d.bins[0], 2u);
  EXPECT_EQ(d.bins[1], 1u);
  EXPECT_EQ(d.count(), 3u);
}

TEST(Distribution, OneLandsInLastBin) {
  const std::vector<double> samples = {1.0, 0.95, 0.3};
  const MetricDistribution d = Distribution("m", samples, 0.05);
  EXPECT_EQ(d.bins[19], 2u);
  EXPECT_EQ(d.bins[6], 1u);
  EXPECT_DOUBLE_EQ(d.bin_upper(19), 1.0);
}

TEST(Distribution, Empty) {
  const MetricDistribution d = Distribution("m", {}, 0.1);
  EXPECT_EQ(d.bins.size(), 10u);
  for (auto b : d.bins) EXPECT_EQ(b, 0u);
  EXPECT_FALSE(d.mean.has_value());
}

TEST(Distribution, RejectsOutOfRange) {
  const std::vector<double> bad = {1.5};
  EXPECT_THROW(Distribution("m", bad), ContractError);
  EXPECT_THROW(Distribution("m", {}, 0.0), ContractError);
}

TEST(Distribution, UniformSamplesChiSquare) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> samples(1000);
  for (double& s : samples) s = unit(rng);
  const MetricDistribution d = Distribution("m", samples, 0.05);
  double chi2 = 0.0;
  for (auto b : d.bins) chi2 += (b - 50.0) * (b - 50.0) / 50.0;
  // 19 degrees of freedom; 43.8 is the 0.999 quantile.
  EXPECT_LT(chi2, 43.8);
}

TEST(BinCount, CoversUnitInterval) {
  EXPECT_EQ(BinCount(0.05), 20u);
  EXPECT_EQ(BinCount(0.1), 10u);
  EXPECT_EQ(BinCount(0.3), 4u);
  EXPECT_EQ(BinCount(1.0), 1u);
}

TEST(FractionBelow, Examples) {
  const std::vector<double> s = {0.2, 0.6, 0.7};
  EXPECT_DOUBLE_EQ(*FractionBelow(s, 0.5), 1.0 / 3.0);
  EXPECT_EQ(FractionBelow(s, 0.2), 0.0);
  EXPECT_FALSE(FractionBelow({}, 0.5).has_value());
}

TEST(Mean, Basic) {
  const std::vector<double> s = {1.0, 2.0, 6.0};
  EXPECT_DOUBLE_EQ(*Mean(s), 3.0);
  EXPECT_FALSE(Mean({}).has_value());
}

TEST(WelchTTest, IdenticalSamples) {
  const std::vector<double> a = {0.1, 0.4, 0.3, 0.9};
  const TTestResult r = WelchTTest(a, a);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_DOUBLE_EQ(r.p, 1.0);
  EXPECT_FALSE(r.significant);
}

TEST(WelchTTest, WorkedExample) {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> b = {3, 4, 5, 6, 7};
  const TTestResult r = WelchTTest(a, b);
  EXPECT_DOUBLE_EQ(r.t, -2.0);
  EXPECT_DOUBLE_EQ(r.df, 8.0);
  EXPECT_NEAR(r.p, 0.0805, 1e-3);
  EXPECT_NEAR(r.p, testing::ReferenceWelch(a, b).p, 1e-12);
  EXPECT_FALSE(r.significant);
}

TEST(WelchTTest, FarApartIsSignificant) {
  const std::vector<double> a = {0.01, 0.02, 0.03, 0.02, 0.01, 0.02};
  const std::vector<double> b = {0.91, 0.92, 0.95, 0.9, 0.93, 0.94};
  const TTestResult r = WelchTTest(a, b, 0.01);
  EXPECT_LT(r.p, 0.001);
  EXPECT_TRUE(r.significant);
}

TEST(WelchTTest, Preconditions) {
  const std::vector<double> one = {1.0};
  const std::vector<double> two = {1.0, 2.0};
  const std::vector<double> flat = {3.0, 3.0};
  EXPECT_THROW(WelchTTest(one, two), ContractError);
  EXPECT_THROW(WelchTTest(flat, flat), ContractError);
  EXPECT_NO_THROW(WelchTTest(flat, two));
}

TEST(WelchTTest, MatchesReferenceOnRandomPairs) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    std::vector<double> a(2 + rng() % 40), b(2 + rng() % 40);
    const double shift = normal(rng);
    for (double& x : a) x = normal(rng);
    for (double& x : b) x = shift + 2.0 * normal(rng);
    const TTestResult got = WelchTTest(a, b);
    const testing::Reference want = testing::ReferenceWelch(a, b);
    EXPECT_NEAR(got.t, want.t, 1e-9);
    EXPECT_NEAR(got.df, want.df, 1e-9);
    EXPECT_NEAR(got.p, want.p, 1e-9);
  }
}

TEST(StudentT, TailProbabilities) {
  EXPECT_DOUBLE_EQ(StudentTTwoTailedP(0.0, 5.0), 1.0);
  // Cauchy: P(|T| > 1) = 1/2.
  EXPECT_NEAR(StudentTTwoTailedP(1.0, 1.0), 0.5, 1e-14);
  EXPECT_NEAR(RegularizedIncompleteBeta(2.0, 3.0, 0.4), 0.5248, 1e-12);
  EXPECT_EQ(RegularizedIncompleteBeta(2.0, 3.0, 0.0), 0.0);
  EXPECT_EQ(RegularizedIncompleteBeta(2.0, 3.0, 1.0), 1.0);
}

}  // namespace
}  // namespace viewdiv
