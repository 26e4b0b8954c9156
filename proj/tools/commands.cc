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

#include "commands.h"

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "viewdiv/errors.h"
#include "viewdiv/ingest.h"
#include "viewdiv/synth.h"

namespace viewdiv::tools {
namespace {

struct Loaded {
  Dataset dataset;
  std::optional<IngestReport> ingest;
  std::vector<Diagnostic> user_diagnostics;
  std::vector<Diagnostic> tweet_diagnostics;
};

std::ifstream Open(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

Loaded Load(const DatasetSource& source) {
  if (!source.preset.empty()) {
    SynthParams params = Preset(source.preset);
    if (source.rng_seed) params.rng_seed = *source.rng_seed;
    return Loaded{Generate(params), std::nullopt, {}, {}};
  }
  if (source.config_path.empty() || source.users_path.empty() ||
      source.tweets_path.empty()) {
    throw InputError("--config, --users and --tweets are required");
  }
  std::ifstream config_in = Open(source.config_path);
  CountryConfig config = ParseCountryConfig(config_in);
  std::ifstream users_in = Open(source.users_path);
  std::ifstream tweets_in = Open(source.tweets_path);
  std::set<std::string> spam;
  if (!source.spam_path.empty()) {
    std::ifstream spam_in = Open(source.spam_path);
    spam = ParseSpamList(spam_in);
  }
  IngestResult result = Ingest(std::move(config), users_in, tweets_in, spam,
                               source.min_retweets);
  return Loaded{std::move(result.dataset), result.report,
                std::move(result.user_diagnostics),
                std::move(result.tweet_diagnostics)};
}

void ReportDiagnostics(const Loaded& loaded, const DatasetSource& source,
                       std::ostream& err) {
  for (const auto& d : loaded.user_diagnostics) {
    err << source.users_path << ":" << d.line << ": " << d.message << "\n";
  }
  for (const auto& d : loaded.tweet_diagnostics) {
    err << source.tweets_path << ":" << d.line << ": " << d.message << "\n";
  }
}

void CheckOptions(const AnalysisOptions& options) {
  if (!(options.bin_width > 0.0 && options.bin_width <= 1.0)) {
    throw InputError("--bin-width must lie in (0, 1]");
  }
  for (double t : options.thresholds) {
    if (!(t > 0.0 && t <= 1.0)) throw InputError("--thresholds must lie in (0, 1]");
  }
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw InputError("--alpha must lie in (0, 1)");
  }
  if (!(options.io_margin >= 0.0 && options.io_margin < 1.0)) {
    throw InputError("--io-margin must lie in [0, 1)");
  }
}

// Maps library errors onto exit codes.
int Guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParamError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LookupError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

void PrintSummary(const Analysis& analysis, std::ostream& out) {
  out << fmt::format("dataset {}: {} seeds, {} regular users, {} tweets\n",
                     analysis.dataset_name, analysis.num_seeds,
                     analysis.num_regulars, analysis.num_tweets);
  for (const auto& d : analysis.distributions) {
    out << fmt::format("  {:<26} mean {}  (n = {})\n", d.metric,
                       d.mean ? FormatReal(*d.mean) : "NA", d.count());
  }
}

}  // namespace

int CmdAnalyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    CheckOptions(config.analysis);
    if (config.out_dir.empty()) throw InputError("--out is required");
    Loaded loaded = Load(config.source);
    ReportDiagnostics(loaded, config.source, err);
    const Analysis analysis =
        Analyze(loaded.dataset, config.analysis, loaded.ingest);
    WriteReports(analysis, config.out_dir);
    PrintSummary(analysis, out);
    return kExitOk;
  });
}

int CmdCompare(const CompareConfig& config, std::ostream& out,
               std::ostream& err) {
  return Guard(err, [&] {
    CheckOptions(config.analysis);
    Loaded a = Load(config.a);
    Loaded b = Load(config.b);
    std::vector<std::string> ids_a, ids_b;
    for (const auto& c : a.dataset.config().categories) ids_a.push_back(c.id);
    for (const auto& c : b.dataset.config().categories) ids_b.push_back(c.id);
    if (ids_a != ids_b) {
      throw ConfigError("datasets use different category universes",
                        {"mismatched category universes"});
    }
    const Analysis analysis_a = Analyze(a.dataset, config.analysis, a.ingest);
    const Analysis analysis_b = Analyze(b.dataset, config.analysis, b.ingest);
    const auto rows = Compare(analysis_a, analysis_b, config.analysis.alpha);
    const std::string csv = FormatComparisonCsv(rows);
    out << csv;
    if (!config.out_dir.empty()) {
      std::filesystem::create_directories(config.out_dir);
      std::ofstream file(std::filesystem::path(config.out_dir) / "comparison.csv",
                         std::ios::binary);
      if (!file) throw InputError("cannot write comparison.csv");
      file << csv;
    }
    return kExitOk;
  });
}

int CmdSynth(const SynthConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (config.out_dir.empty()) throw InputError("--out is required");
    SynthParams params;
    if (!config.params_path.empty()) {
      std::ifstream in = Open(config.params_path);
      params = ParseSynthParams(in);
    } else {
      params = Preset(config.preset.empty() ? "uniform" : config.preset);
    }
    if (config.rng_seed) params.rng_seed = *config.rng_seed;
    const Dataset dataset = Generate(params);

    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    auto write = [&](const char* name, const std::function<void(std::ostream&)>& fn) {
      std::ofstream file(dir / name, std::ios::binary);
      if (!file) throw InputError("cannot write " + (dir / name).string());
      fn(file);
    };
    write("config.json", [&](std::ostream& o) { WriteCountryConfig(o, dataset.config()); });
    write("users.jsonl", [&](std::ostream& o) { WriteUsers(o, dataset.users()); });
    write("tweets.jsonl", [&](std::ostream& o) { WriteTweets(o, dataset.tweets()); });
    write("params.json", [&](std::ostream& o) { WriteSynthParams(o, params); });
    out << fmt::format("wrote {} users and {} tweets to {}\n",
                       dataset.num_users(), dataset.num_tweets(), dir.string());
    return kExitOk;
  });
}

int CmdValidate(const DatasetSource& source, std::ostream& out,
                std::ostream& err) {
  return Guard(err, [&] {
    Loaded loaded = Load(source);
    ReportDiagnostics(loaded, source, err);
    if (loaded.ingest) {
      const IngestReport& r = *loaded.ingest;
      out << fmt::format(
          "users: read {}, malformed {}, spam {}, below threshold {}, "
          "retained {}\n",
          r.users_read, r.users_malformed, r.users_dropped_spam,
          r.users_dropped_threshold, r.users_retained);
      out << fmt::format(
          "tweets: read {}, malformed {}, duplicate {}, dangling {}, "
          "retained {}\n",
          r.tweets_read, r.tweets_malformed, r.tweets_duplicate,
          r.tweets_dropped_dangling, r.tweets_retained);
    }
    out << "dataset is valid\n";
    return kExitOk;
  });
}

int RunMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Viewpoint-diversity metrics for social-graph datasets"};
  app.require_subcommand(1);

  auto add_analysis = [](CLI::App* cmd, AnalysisOptions& options) {
    cmd->add_option("--bin-width", options.bin_width, "Distribution bin width");
    cmd->add_option("--thresholds", options.thresholds,
                    "Comma-separated fraction-below thresholds")
        ->delimiter(',');
    cmd->add_option("--io-margin", options.io_margin,
                    "Dominance margin for the io_correlated_margin flag");
    cmd->add_option("--alpha", options.alpha, "Significance level");
  };
  auto add_source = [](CLI::App* cmd, DatasetSource& source) {
    cmd->add_option("--config", source.config_path, "Country config (JSON)");
    cmd->add_option("--users", source.users_path, "Users file (JSON lines)");
    cmd->add_option("--tweets", source.tweets_path, "Tweets file (JSON lines)");
    cmd->add_option("--spam", source.spam_path, "Spam user ids, one per line");
    cmd->add_option("--preset", source.preset, "Analyze a synthetic preset");
    cmd->add_option("--rng-seed", source.rng_seed, "Seed for --preset");
    cmd->add_option("--min-retweets", source.min_retweets,
                    "Activity threshold for regular users");
  };

  RunConfig analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Compute all metrics");
  add_source(analyze_cmd, analyze.source);
  add_analysis(analyze_cmd, analyze.analysis);
  analyze_cmd->add_option("--out", analyze.out_dir, "Output directory")->required();

  CompareConfig compare;
  std::vector<std::string> configs, users, tweets, spams, presets;
  std::optional<std::uint64_t> compare_seed;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Welch t-tests between two datasets");
  compare_cmd->add_option("--config", configs, "Two country configs")->expected(2);
  compare_cmd->add_option("--users", users, "Two users files")->expected(2);
  compare_cmd->add_option("--tweets", tweets, "Two tweets files")->expected(2);
  compare_cmd->add_option("--spam", spams, "Two spam lists")->expected(2);
  compare_cmd->add_option("--preset", presets, "Two synthetic presets")->expected(2);
  compare_cmd->add_option("--rng-seed", compare_seed, "Seed for --preset");
  compare_cmd->add_option("--out", compare.out_dir, "Output directory");
  add_analysis(compare_cmd, compare.analysis);

  SynthConfig synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Write a synthetic dataset");
  synth_cmd->add_option("--preset", synth.preset, "Preset name");
  synth_cmd->add_option("--params", synth.params_path, "Parameter file (JSON)");
  synth_cmd->add_option("--rng-seed", synth.rng_seed, "Override the RNG seed");
  synth_cmd->add_option("--out", synth.out_dir, "Output directory")->required();

  DatasetSource validate;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Ingest and validate a dataset");
  add_source(validate_cmd, validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*analyze_cmd) return CmdAnalyze(analyze, out, err);
  if (*synth_cmd) return CmdSynth(synth, out, err);
  if (*validate_cmd) return CmdValidate(validate, out, err);
  if (*compare_cmd) {
    auto pick = [](const std::vector<std::string>& values, std::size_t i) {
      return i < values.size() ? values[i] : std::string();
    };
    for (std::size_t i = 0; i < 2; ++i) {
      DatasetSource& side = i == 0 ? compare.a : compare.b;
      side.config_path = pick(configs, i);
      side.users_path = pick(users, i);
      side.tweets_path = pick(tweets, i);
      side.spam_path = pick(spams, i);
      side.preset = pick(presets, i);
      side.rng_seed = compare_seed;
    }
    return CmdCompare(compare, out, err);
  }
  return kExitInternal;
}

}  // namespace viewdiv::tools
