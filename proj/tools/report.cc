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

#include "report.h"

#include <fmt/format.h>

#include <fstream>

#include "viewdiv/errors.h"

namespace viewdiv::tools {
namespace {

using RealField = std::optional<double> UserMetrics::*;
using FlagField = std::optional<bool> UserMetrics::*;

std::optional<RealField> RealFieldFor(std::string_view metric) {
  if (metric == "direct_source_diversity") return &UserMetrics::direct_source_diversity;
  if (metric == "indirect_source_diversity") return &UserMetrics::indirect_source_diversity;
  if (metric == "retweet_diversity") return &UserMetrics::retweet_diversity;
  if (metric == "reply_diversity") return &UserMetrics::reply_diversity;
  if (metric == "minority_reach") return &UserMetrics::minority_reach;
  if (metric == "minority_exposure") return &UserMetrics::minority_exposure;
  return std::nullopt;
}

std::optional<FlagField> FlagFieldFor(std::string_view metric) {
  if (metric == "io_correlated") return &UserMetrics::io_correlated;
  if (metric == "io_correlated_margin") return &UserMetrics::io_correlated_margin;
  return std::nullopt;
}

std::string Csv(const std::optional<double>& value) {
  return value ? FormatReal(*value) : "NA";
}

std::string Csv(const std::optional<bool>& value) {
  if (!value) return "NA";
  return *value ? "1" : "0";
}

std::string Json(const std::optional<double>& value) {
  return value ? FormatReal(*value) : "null";
}

// Ids come from input files; escape what JSON requires.
std::string JsonString(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(c));
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace

std::vector<double> Samples(const MetricsReport& report, std::string_view metric) {
  std::vector<double> out;
  out.reserve(report.users.size());
  if (auto field = RealFieldFor(metric)) {
    for (const auto& user : report.users) {
      if (const auto& value = user.*(*field)) out.push_back(*value);
    }
    return out;
  }
  if (auto field = FlagFieldFor(metric)) {
    for (const auto& user : report.users) {
      if (const auto& value = user.*(*field)) out.push_back(*value ? 1.0 : 0.0);
    }
    return out;
  }
  throw LookupError("unknown metric: " + std::string(metric));
}

Analysis Analyze(const Dataset& dataset, const AnalysisOptions& options,
                 std::optional<IngestReport> ingest) {
  Analysis analysis;
  analysis.dataset_name = dataset.config().name;
  for (const auto& category : dataset.config().categories) {
    analysis.category_ids.push_back(category.id);
  }
  analysis.num_seeds = dataset.num_seeds();
  analysis.num_regulars = dataset.num_regulars();
  analysis.num_tweets = dataset.num_tweets();
  analysis.ingest = ingest;
  analysis.options = options;
  analysis.metrics = ComputeAll(
      dataset, ComputeOptions{.io_margin = options.io_margin, .threads = options.threads});
  for (std::string_view metric : kRealMetrics) {
    const auto samples = Samples(analysis.metrics, metric);
    analysis.distributions.push_back(
        Distribution(std::string(metric), samples, options.bin_width));
  }
  return analysis;
}

std::string FormatReal(double value) {
  std::string text = fmt::format("{:.4f}", value);
  if (text == "-0.0000") text = "0.0000";
  return text;
}

std::string FormatUsersCsv(const Analysis& analysis) {
  std::string out = "user_id";
  for (std::string_view metric : kRealMetrics) out += fmt::format(",{}", metric);
  out += ",io_correlated,io_correlated_margin\n";
  for (const auto& m : analysis.metrics.users) {
    out += m.user_id;
    for (std::string_view metric : kRealMetrics) {
      out += "," + Csv(m.*(*RealFieldFor(metric)));
    }
    out += "," + Csv(m.io_correlated) + "," + Csv(m.io_correlated_margin) + "\n";
  }
  return out;
}

std::string FormatSeedMatrixCsv(const Analysis& analysis) {
  const WingMatrix& matrix = analysis.metrics.seed_matrix;
  std::string out = "actor,target_left,target_right,interactions\n";
  for (Wing actor : {Wing::kLeft, Wing::kRight}) {
    out += fmt::format("{},{},{},{}\n", WingName(actor),
                       Csv(matrix.share(actor, Wing::kLeft)),
                       Csv(matrix.share(actor, Wing::kRight)),
                       matrix.row_total(actor));
  }
  return out;
}

std::string FormatDistributionCsv(const MetricDistribution& distribution) {
  std::string out = "bin_lower,bin_upper,count\n";
  for (std::size_t k = 0; k < distribution.bins.size(); ++k) {
    out += fmt::format("{},{},{}\n", FormatReal(distribution.bin_lower(k)),
                       FormatReal(distribution.bin_upper(k)),
                       distribution.bins[k]);
  }
  return out;
}

std::string FormatSummaryJson(const Analysis& analysis) {
  const AnalysisOptions& opt = analysis.options;
  auto stat = [&](std::string_view metric) {
    const auto samples = Samples(analysis.metrics, metric);
    return fmt::format("{{\"mean\": {}, \"n\": {}}}", Json(Mean(samples)),
                       samples.size());
  };

  std::string out = "{\n";
  out += fmt::format("  \"dataset\": {},\n", JsonString(analysis.dataset_name));
  out += "  \"categories\": [";
  for (std::size_t i = 0; i < analysis.category_ids.size(); ++i) {
    out += (i ? ", " : "") + JsonString(analysis.category_ids[i]);
  }
  out += "],\n";
  out += fmt::format(
      "  \"counts\": {{\"seeds\": {}, \"regulars\": {}, \"tweets\": {}}},\n",
      analysis.num_seeds, analysis.num_regulars, analysis.num_tweets);
  if (analysis.ingest) {
    const IngestReport& r = *analysis.ingest;
    out += fmt::format(
        "  \"ingest\": {{\"users_read\": {}, \"users_malformed\": {}, "
        "\"users_dropped_spam\": {}, \"users_dropped_threshold\": {}, "
        "\"users_retained\": {}, \"tweets_read\": {}, \"tweets_malformed\": {}, "
        "\"tweets_duplicate\": {}, \"tweets_dropped_dangling\": {}, "
        "\"tweets_retained\": {}}},\n",
        r.users_read, r.users_malformed, r.users_dropped_spam,
        r.users_dropped_threshold, r.users_retained, r.tweets_read,
        r.tweets_malformed, r.tweets_duplicate, r.tweets_dropped_dangling,
        r.tweets_retained);
  }
  out += fmt::format(
      "  \"parameters\": {{\"bin_width\": {}, \"io_margin\": {}, \"alpha\": {}}},\n",
      FormatReal(opt.bin_width), FormatReal(opt.io_margin), FormatReal(opt.alpha));
  out += fmt::format(
      "  \"source_diversity\": {{\"direct\": {}, \"indirect\": {}}},\n",
      stat("direct_source_diversity"), stat("indirect_source_diversity"));
  out += fmt::format(
      "  \"output_diversity\": {{\"retweet\": {}, \"reply\": {}}},\n",
      stat("retweet_diversity"), stat("reply_diversity"));

  const auto io = Samples(analysis.metrics, "io_correlated");
  const auto io_margin = Samples(analysis.metrics, "io_correlated_margin");
  auto users_true = [](const std::vector<double>& flags) {
    std::size_t k = 0;
    for (double f : flags) k += f > 0.5 ? 1 : 0;
    return k;
  };
  out += fmt::format(
      "  \"io_correlation\": {{\"users\": {}, \"fraction\": {}, \"n\": {}, "
      "\"margin\": {}, \"users_margin\": {}, \"fraction_margin\": {}}},\n",
      users_true(io), Json(Mean(io)), io.size(), FormatReal(opt.io_margin),
      users_true(io_margin), Json(Mean(io_margin)));
  out += fmt::format("  \"minority\": {{\"reach\": {}, \"exposure\": {}}},\n",
                     stat("minority_reach"), stat("minority_exposure"));

  out += "  \"fractions_below\": {\n";
  for (std::size_t i = 0; i < kRealMetrics.size(); ++i) {
    const auto samples = Samples(analysis.metrics, kRealMetrics[i]);
    out += fmt::format("    \"{}\": {{", kRealMetrics[i]);
    for (std::size_t j = 0; j < opt.thresholds.size(); ++j) {
      out += fmt::format("{}\"{}\": {}", j ? ", " : "",
                         FormatReal(opt.thresholds[j]),
                         Json(FractionBelow(samples, opt.thresholds[j])));
    }
    out += i + 1 < kRealMetrics.size() ? "},\n" : "}\n";
  }
  out += "  },\n";

  const WingMatrix& matrix = analysis.metrics.seed_matrix;
  out += "  \"seed_matrix\": {";
  bool first = true;
  for (Wing actor : {Wing::kLeft, Wing::kRight}) {
    out += fmt::format(
        "{}\"{}\": {{\"left\": {}, \"right\": {}, \"interactions\": {}}}",
        first ? "" : ", ", WingName(actor),
        Json(matrix.share(actor, Wing::kLeft)),
        Json(matrix.share(actor, Wing::kRight)), matrix.row_total(actor));
    first = false;
  }
  out += "}\n}\n";
  return out;
}

void WriteReports(const Analysis& analysis, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
  WriteFile(dir / "users_metrics.csv", FormatUsersCsv(analysis));
  WriteFile(dir / "summary.json", FormatSummaryJson(analysis));
  WriteFile(dir / "seed_matrix.csv", FormatSeedMatrixCsv(analysis));
  for (const auto& distribution : analysis.distributions) {
    WriteFile(dir / ("dist_" + distribution.metric + ".csv"),
              FormatDistributionCsv(distribution));
  }
}

std::vector<MetricComparison> Compare(const Analysis& a, const Analysis& b,
                                      double alpha) {
  std::vector<std::string_view> metrics(kRealMetrics.begin(), kRealMetrics.end());
  metrics.push_back("io_correlated");
  metrics.push_back("io_correlated_margin");

  std::vector<MetricComparison> rows;
  for (std::string_view metric : metrics) {
    const auto sa = Samples(a.metrics, metric);
    const auto sb = Samples(b.metrics, metric);
    MetricComparison row;
    row.metric = std::string(metric);
    row.n_a = sa.size();
    row.n_b = sb.size();
    row.mean_a = Mean(sa);
    row.mean_b = Mean(sb);
    try {
      row.test = WelchTTest(sa, sb, alpha);
    } catch (const ContractError&) {
      // Too few samples or no variance: the test is undefined.
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatComparisonCsv(const std::vector<MetricComparison>& rows) {
  std::string out = "metric,n_a,mean_a,n_b,mean_b,t,df,p,significant\n";
  for (const auto& row : rows) {
    out += fmt::format("{},{},{},{},{},", row.metric, row.n_a, Csv(row.mean_a),
                       row.n_b, Csv(row.mean_b));
    if (row.test) {
      out += fmt::format("{},{},{},{}\n", FormatReal(row.test->t),
                         FormatReal(row.test->df), FormatReal(row.test->p),
                         row.test->significant ? 1 : 0);
    } else {
      out += "NA,NA,NA,NA\n";
    }
  }
  return out;
}

}  // namespace viewdiv::tools
