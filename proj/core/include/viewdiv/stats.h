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

// Population statistics over per-user metric samples.

#ifndef VIEWDIV_STATS_H_
#define VIEWDIV_STATS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace viewdiv {

// Histogram of unit-interval samples with bins [k*w, (k+1)*w); the last bin
// is closed at 1.0.
struct MetricDistribution {
  std::string metric;
  std::vector<double> samples;
  double bin_width = 0.05;
  std::vector<std::uint64_t> bins;
  std::optional<double> mean;

  std::size_t count() const { return samples.size(); }
  double bin_lower(std::size_t k) const;
  double bin_upper(std::size_t k) const;
};

std::size_t BinCount(double bin_width);

// Throws ContractError for samples outside [0, 1] or a bin width outside
// (0, 1].
MetricDistribution Distribution(std::string metric,
                                std::span<const double> samples,
                                double bin_width = 0.05);

std::optional<double> Mean(std::span<const double> samples);

// Share of samples strictly below `threshold`; nullopt for no samples.
std::optional<double> FractionBelow(std::span<const double> samples,
                                    double threshold);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;  // Welch-Satterthwaite
  double p = 1.0;   // two-tailed
  double alpha = 0.01;
  bool significant = false;  // p < alpha
};

// Two-sample, two-tailed Welch t-test. Throws ContractError when either
// sample has fewer than two values or both variances are zero.
TTestResult WelchTTest(std::span<const double> a, std::span<const double> b,
                       double alpha = 0.01);

// Regularized incomplete beta function I_x(a, b).
double RegularizedIncompleteBeta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailedP(double t, double df);

}  // namespace viewdiv

#endif  // VIEWDIV_STATS_H_
