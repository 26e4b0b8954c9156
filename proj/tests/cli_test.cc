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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.h"
#include "report.h"
#include "test_util.h"

namespace viewdiv::tools {
namespace {

namespace fs = std::filesystem;
using ::viewdiv::testing::ReadFile;
using ::viewdiv::testing::ToyDir;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("viewdiv_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "viewdiv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return RunMain(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::vector<std::string> ToyArgs() const {
    return {"--config", (ToyDir() / "config.json").string(),
            "--users", (ToyDir() / "users.jsonl").string(),
            "--tweets", (ToyDir() / "tweets.jsonl").string()};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, AnalyzeToyMatchesGoldenFiles) {
  auto args = ToyArgs();
  args.insert(args.begin(), "analyze");
  args.push_back("--out");
  args.push_back(dir_.string());
  ASSERT_EQ(Run(args), kExitOk) << err_.str();
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(ToyDir() / "golden")) {
    const fs::path produced = dir_ / entry.path().filename();
    ASSERT_TRUE(fs::exists(produced)) << produced;
    EXPECT_EQ(ReadFile(produced), ReadFile(entry.path())) << produced;
    ++compared;
  }
  EXPECT_EQ(compared, 9u);
}

TEST_F(CliTest, AnalyzeIsByteStable) {
  auto args = std::vector<std::string>{"analyze", "--preset", "pluralist",
                                       "--out", (dir_ / "a").string()};
  ASSERT_EQ(Run(args), kExitOk);
  args.back() = (dir_ / "b").string();
  ASSERT_EQ(Run(args), kExitOk);
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    EXPECT_EQ(ReadFile(entry.path()),
              ReadFile(dir_ / "b" / entry.path().filename()));
  }
}

TEST_F(CliTest, MissingUsersFile) {
  auto args = ToyArgs();
  args[3] = (dir_ / "missing.jsonl").string();
  args.insert(args.begin(), "analyze");
  args.push_back("--out");
  args.push_back(dir_.string());
  EXPECT_EQ(Run(args), kExitInput);
  EXPECT_NE(err_.str().find("cannot open"), std::string::npos);
}

TEST_F(CliTest, BadOptions) {
  EXPECT_EQ(Run({"analyze", "--preset", "uniform", "--out", dir_.string(),
                 "--bin-width", "0"}),
            kExitInput);
  EXPECT_EQ(Run({"analyze", "--preset", "nope", "--out", dir_.string()}),
            kExitInput);
  EXPECT_EQ(Run({"frobnicate"}), kExitInput);
  EXPECT_EQ(Run({"--help"}), kExitOk);
}

TEST_F(CliTest, CompareWithItself) {
  auto args = ToyArgs();
  std::vector<std::string> cmd = {"compare"};
  for (std::size_t i = 0; i < args.size(); i += 2) {
    cmd.insert(cmd.end(), {args[i], args[i + 1], args[i + 1]});
  }
  ASSERT_EQ(Run(cmd), kExitOk) << err_.str();
  std::istringstream csv(out_.str());
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "metric,n_a,mean_a,n_b,mean_b,t,df,p,significant");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    // t, df, p, significant
    const auto fields = line.substr(line.rfind(",0.0000,"));
    EXPECT_TRUE(fields.ends_with(",1.0000,0")) << line;
  }
  EXPECT_EQ(rows, 8);
}

TEST_F(CliTest, ComparePresets) {
  ASSERT_EQ(Run({"compare", "--preset", "pluralist", "polarized", "--out",
                 dir_.string()}),
            kExitOk);
  const std::string csv = ReadFile(dir_ / "comparison.csv");
  EXPECT_EQ(csv, out_.str());
  const auto pos = csv.find("\nminority_reach,");
  ASSERT_NE(pos, std::string::npos);
  const std::string row = csv.substr(pos + 1, csv.find('\n', pos + 1) - pos - 1);
  EXPECT_TRUE(row.ends_with(",1")) << row;
}

TEST_F(CliTest, CompareMismatchedCategories) {
  ASSERT_EQ(Run({"synth", "--preset", "uniform", "--out", (dir_ / "u").string()}),
            kExitOk);
  auto args = ToyArgs();
  EXPECT_EQ(Run({"compare", "--config", args[1], (dir_ / "u/config.json").string(),
                 "--users", args[3], (dir_ / "u/users.jsonl").string(),
                 "--tweets", args[5], (dir_ / "u/tweets.jsonl").string()}),
            kExitInput);
  EXPECT_NE(err_.str().find("category"), std::string::npos);
}

TEST_F(CliTest, SynthRoundTripsAndIsReproducible) {
  ASSERT_EQ(Run({"synth", "--preset", "uniform", "--rng-seed", "9", "--out",
                 (dir_ / "a").string()}),
            kExitOk);
  ASSERT_EQ(Run({"synth", "--preset", "uniform", "--rng-seed", "9", "--out",
                 (dir_ / "b").string()}),
            kExitOk);
  for (const char* name : {"config.json", "users.jsonl", "tweets.jsonl", "params.json"}) {
    EXPECT_EQ(ReadFile(dir_ / "a" / name), ReadFile(dir_ / "b" / name)) << name;
  }
  ASSERT_EQ(Run({"validate", "--config", (dir_ / "a/config.json").string(),
                 "--users", (dir_ / "a/users.jsonl").string(), "--tweets",
                 (dir_ / "a/tweets.jsonl").string()}),
            kExitOk);
  EXPECT_NE(out_.str().find("below threshold 0"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("dangling 0"), std::string::npos) << out_.str();
  EXPECT_TRUE(err_.str().empty()) << err_.str();

  // Re-running the written parameters reproduces the dataset.
  ASSERT_EQ(Run({"synth", "--params", (dir_ / "a/params.json").string(), "--out",
                 (dir_ / "c").string()}),
            kExitOk);
  EXPECT_EQ(ReadFile(dir_ / "a/tweets.jsonl"), ReadFile(dir_ / "c/tweets.jsonl"));
}

TEST_F(CliTest, SynthRejectsBadWeights) {
  const fs::path params = dir_ / "params.json";
  std::ofstream(params) << R"({"n_categories": 3, "category_weights": [0.5, 0.3, 0.3]})";
  EXPECT_EQ(Run({"synth", "--params", params.string(), "--out", (dir_ / "o").string()}),
            kExitInput);
  EXPECT_NE(err_.str().find("category_weights"), std::string::npos);
}

TEST_F(CliTest, ValidateReportsDiagnostics) {
  fs::copy(ToyDir() / "config.json", dir_ / "config.json");
  std::ofstream(dir_ / "users.jsonl")
      << ReadFile(ToyDir() / "users.jsonl") << "{\"id\": \"x\"}\n";
  auto args = std::vector<std::string>{
      "validate", "--config", (dir_ / "config.json").string(), "--users",
      (dir_ / "users.jsonl").string(), "--tweets",
      (ToyDir() / "tweets.jsonl").string()};
  ASSERT_EQ(Run(args), kExitOk);
  EXPECT_NE(err_.str().find("users.jsonl:7:"), std::string::npos) << err_.str();
  EXPECT_NE(out_.str().find("malformed 1"), std::string::npos);
}

TEST(Report, FormatReal) {
  EXPECT_EQ(FormatReal(0.0), "0.0000");
  EXPECT_EQ(FormatReal(-0.0), "0.0000");
  EXPECT_EQ(FormatReal(-1e-9), "0.0000");
  EXPECT_EQ(FormatReal(1.0 / 3.0), "0.3333");
  EXPECT_EQ(FormatReal(2.0 / 3.0), "0.6667");
}

}  // namespace
}  // namespace viewdiv::tools
