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

// Viewpoint-diversity metrics.
//
// Every diversity value is the normalized Shannon entropy of a category
// histogram,
//
//   D = -sum_i p_i ln(p_i) / ln(n),
//
// where p_i is the share of category i and n is the number of categories in
// the country configuration (not the number observed for the user). D is 0
// when a single category is present and 1 when all n are equally present.
//
// A metric without data (empty histogram, no published minority tweets, ...)
// is std::nullopt. Such values are never turned into zeros; population
// statistics skip them.

#ifndef VIEWDIV_METRICS_H_
#define VIEWDIV_METRICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "viewdiv/exposure.h"
#include "viewdiv/model.h"

namespace viewdiv {

// Throws ContractError if the histogram has fewer than two categories.
std::optional<double> NormalizedEntropy(const CategoryHistogram& histogram);

enum class ExposureMode { kDirect, kIndirect };
enum class OutputKind { kRetweet, kReply };

std::optional<double> SourceDiversity(const Dataset& dataset,
                                      std::string_view user_id,
                                      ExposureMode mode);
std::optional<double> OutputDiversity(const Dataset& dataset,
                                      std::string_view user_id,
                                      OutputKind kind);

// Minority-authored originals on the indirect timeline over all minority
// originals in the dataset. nullopt when no minority original exists.
std::optional<double> MinorityReach(const Dataset& dataset,
                                    std::string_view user_id);
// Minority-authored share of the indirect timeline. nullopt when the
// timeline is empty.
std::optional<double> MinorityExposure(const Dataset& dataset,
                                       std::string_view user_id);

// True when the indirect-exposure histogram and the retweet histogram share a
// unique dominant category. With margin > 0 both dominant shares must also
// reach 1/n + margin. A tie for the maximum in either histogram is false.
// nullopt when either histogram is empty.
std::optional<bool> IoCorrelated(const CategoryHistogram& input,
                                 const CategoryHistogram& output,
                                 double margin);
std::optional<bool> IoCorrelation(const Dataset& dataset,
                                  std::string_view user_id,
                                  double margin = 0.0);

// Left/Right interaction counts among seeds. Row = acting seed's wing,
// column = wing of the retweeted author or the reply addressee.
struct WingMatrix {
  std::array<std::array<std::uint64_t, 2>, 2> counts{};

  std::uint64_t row_total(Wing actor) const;
  // Row-normalized share; nullopt when the row is empty. Unaligned wings are
  // not part of the matrix and throw ContractError.
  std::optional<double> share(Wing actor, Wing target) const;

  friend bool operator==(const WingMatrix&, const WingMatrix&) = default;
};

// Seed-authored retweets and seed-targeted replies; Unaligned actors or
// targets are skipped.
WingMatrix SeedInteractionMatrix(const Dataset& dataset);

struct UserMetrics {
  std::string user_id;
  std::optional<double> direct_source_diversity;
  std::optional<double> indirect_source_diversity;
  std::optional<double> retweet_diversity;
  std::optional<double> reply_diversity;
  std::optional<double> minority_reach;
  std::optional<double> minority_exposure;
  std::optional<bool> io_correlated;         // margin 0
  std::optional<bool> io_correlated_margin;  // configured margin

  friend bool operator==(const UserMetrics&, const UserMetrics&) = default;
};

struct MetricsReport {
  double io_margin = 0.15;
  std::vector<UserMetrics> users;  // regular users, ordered by id
  WingMatrix seed_matrix;
};

struct ComputeOptions {
  double io_margin = 0.15;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// All metrics for one regular or seed user.
UserMetrics ComputeUserMetrics(const Dataset& dataset, UserIndex user,
                               double io_margin);

// One UserMetrics per regular user plus the seed matrix. Output does not
// depend on the thread count.
MetricsReport ComputeAll(const Dataset& dataset,
                         const ComputeOptions& options = {});

}  // namespace viewdiv

#endif  // VIEWDIV_METRICS_H_
