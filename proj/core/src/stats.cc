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

#include <algorithm>
#include <cmath>
#include <limits>

#include "viewdiv/errors.h"

namespace viewdiv {
namespace {

// Sample positions within this many bin widths of an edge snap onto it, so
// that 0.15 lands in [0.15, 0.20) despite 0.15 / 0.05 < 3 in binary.
constexpr double kEdgeSlack = 1e-9;

double Variance(std::span<const double> samples, double mean) {
  double sum = 0.0;
  for (double x : samples) sum += (x - mean) * (x - mean);
  return sum / static_cast<double>(samples.size() - 1);
}

// Continued fraction for I_x(a, b), modified Lentz.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEpsilon = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

// I_x(a, b) with y = 1 - x supplied separately so callers can keep full
// precision when x is close to 1.
double IncompleteBeta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, y) / b;
}

}  // namespace

std::size_t BinCount(double bin_width) {
  if (!(bin_width > 0.0) || bin_width > 1.0) {
    throw ContractError("bin width must lie in (0, 1]");
  }
  return static_cast<std::size_t>(std::ceil(1.0 / bin_width - kEdgeSlack));
}

double MetricDistribution::bin_lower(std::size_t k) const {
  return static_cast<double>(k) * bin_width;
}

double MetricDistribution::bin_upper(std::size_t k) const {
  return std::min(1.0, static_cast<double>(k + 1) * bin_width);
}

MetricDistribution Distribution(std::string metric,
                                std::span<const double> samples,
                                double bin_width) {
  MetricDistribution dist;
  dist.metric = std::move(metric);
  dist.bin_width = bin_width;
  dist.bins.assign(BinCount(bin_width), 0);
  dist.samples.assign(samples.begin(), samples.end());
  for (double x : samples) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw ContractError("sample outside [0, 1] in " + dist.metric);
    }
    auto k = static_cast<std::size_t>(std::floor(x / bin_width + kEdgeSlack));
    k = std::min(k, dist.bins.size() - 1);
    ++dist.bins[k];
  }
  dist.mean = Mean(samples);
  return dist;
}

std::optional<double> Mean(std::span<const double> samples) {
  if (samples.empty()) return std::nullopt;
  double sum = 0.0;
  for (double x : samples) sum += x;
  return sum / static_cast<double>(samples.size());
}

std::optional<double> FractionBelow(std::span<const double> samples,
                                    double threshold) {
  if (samples.empty()) return std::nullopt;
  const auto below = std::count_if(samples.begin(), samples.end(),
                                   [&](double x) { return x < threshold; });
  return static_cast<double>(below) / static_cast<double>(samples.size());
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw ContractError("incomplete beta needs a > 0 and b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ContractError("incomplete beta needs x in [0, 1]");
  }
  return IncompleteBeta(a, b, x, 1.0 - x);
}

double StudentTTwoTailedP(double t, double df) {
  if (!(df > 0.0)) throw ContractError("degrees of freedom must be positive");
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  const double x = df / (df + t2);
  const double y = t2 / (df + t2);
  return std::clamp(IncompleteBeta(0.5 * df, 0.5, x, y), 0.0, 1.0);
}

TTestResult WelchTTest(std::span<const double> a, std::span<const double> b,
                       double alpha) {
  if (a.size() < 2 || b.size() < 2) {
    throw ContractError("t-test needs at least two samples per group");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double mean_a = *Mean(a);
  const double mean_b = *Mean(b);
  const double va = Variance(a, mean_a) / na;
  const double vb = Variance(b, mean_b) / nb;
  const double se2 = va + vb;
  if (!(se2 > 0.0)) {
    throw ContractError("t-test needs nonzero variance in at least one group");
  }

  TTestResult result;
  result.alpha = alpha;
  result.t = (mean_a - mean_b) / std::sqrt(se2);
  result.df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  result.p = StudentTTwoTailedP(result.t, result.df);
  result.significant = result.p < alpha;
  return result;
}

}  // namespace viewdiv
