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

#ifndef VIEWDIV_TOOLS_COMMANDS_H_
#define VIEWDIV_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.h"

namespace viewdiv::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// One dataset on disk, or a synthetic preset generated in memory.
struct DatasetSource {
  std::string config_path;
  std::string users_path;
  std::string tweets_path;
  std::string spam_path;  // optional
  std::string preset;     // when set, the paths are ignored
  std::optional<std::uint64_t> rng_seed;
  std::size_t min_retweets = 5;
};

struct RunConfig {
  DatasetSource source;
  std::string out_dir;
  AnalysisOptions analysis;
};

struct CompareConfig {
  DatasetSource a;
  DatasetSource b;
  std::string out_dir;  // optional
  AnalysisOptions analysis;
};

struct SynthConfig {
  std::string preset;
  std::string params_path;
  std::optional<std::uint64_t> rng_seed;
  std::string out_dir;
};

int CmdAnalyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdCompare(const CompareConfig& config, std::ostream& out, std::ostream& err);
int CmdSynth(const SynthConfig& config, std::ostream& out, std::ostream& err);
int CmdValidate(const DatasetSource& source, std::ostream& out, std::ostream& err);

// Full command line, argv[0] included.
int RunMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace viewdiv::tools

#endif  // VIEWDIV_TOOLS_COMMANDS_H_
