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

// Population analysis and the report files written by `viewdiv analyze`.
//
// All reals are printed with exactly four fractional digits; undefined
// values are "NA" in CSV files and null in summary.json.

#ifndef VIEWDIV_TOOLS_REPORT_H_
#define VIEWDIV_TOOLS_REPORT_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "viewdiv/ingest.h"
#include "viewdiv/metrics.h"
#include "viewdiv/stats.h"

namespace viewdiv::tools {

struct AnalysisOptions {
  double bin_width = 0.05;
  std::vector<double> thresholds = {0.5, 0.05, 0.01};
  double io_margin = 0.15;
  double alpha = 0.01;
  unsigned threads = 0;
};

// The six real-valued per-user metrics, in report column order.
inline constexpr std::array<std::string_view, 6> kRealMetrics = {
    "direct_source_diversity", "indirect_source_diversity",
    "retweet_diversity",       "reply_diversity",
    "minority_reach",          "minority_exposure"};

// Defined values of one metric over all users. The boolean metrics
// "io_correlated" and "io_correlated_margin" are returned as 0/1 samples.
std::vector<double> Samples(const MetricsReport& report, std::string_view metric);

struct Analysis {
  std::string dataset_name;
  std::vector<std::string> category_ids;
  std::size_t num_seeds = 0;
  std::size_t num_regulars = 0;
  std::size_t num_tweets = 0;
  std::optional<IngestReport> ingest;
  AnalysisOptions options;
  MetricsReport metrics;
  std::vector<MetricDistribution> distributions;  // kRealMetrics order
};

Analysis Analyze(const Dataset& dataset, const AnalysisOptions& options,
                 std::optional<IngestReport> ingest = std::nullopt);

std::string FormatReal(double value);
std::string FormatUsersCsv(const Analysis& analysis);
std::string FormatSeedMatrixCsv(const Analysis& analysis);
std::string FormatDistributionCsv(const MetricDistribution& distribution);
std::string FormatSummaryJson(const Analysis& analysis);

// Writes users_metrics.csv, summary.json, seed_matrix.csv and one
// dist_<metric>.csv per real metric. Creates `dir` if needed.
void WriteReports(const Analysis& analysis, const std::filesystem::path& dir);

struct MetricComparison {
  std::string metric;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::optional<double> mean_a;
  std::optional<double> mean_b;
  std::optional<TTestResult> test;  // nullopt when the test is not defined
};

// Welch t-test per metric (real metrics plus the two io flags).
std::vector<MetricComparison> Compare(const Analysis& a, const Analysis& b,
                                      double alpha);
std::string FormatComparisonCsv(const std::vector<MetricComparison>& rows);

}  // namespace viewdiv::tools

#endif  // VIEWDIV_TOOLS_REPORT_H_
