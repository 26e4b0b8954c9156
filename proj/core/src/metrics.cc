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

#include <algorithm>
#include <cmath>
#include <thread>

#include "viewdiv/errors.h"

namespace viewdiv {

std::optional<double> NormalizedEntropy(const CategoryHistogram& histogram) {
  const std::size_t n = histogram.num_categories();
  if (n < 2) {
    throw ContractError("normalized entropy needs at least 2 categories");
  }
  const std::uint64_t total = histogram.total();
  if (total == 0) return std::nullopt;

  auto counts = histogram.counts();
  if (std::all_of(counts.begin(), counts.end(),
                  [&](std::uint64_t c) { return c == counts.front(); })) {
    return 1.0;
  }
  if (histogram.support_size() == 1) return 0.0;

  // Summing in a fixed (sorted) order makes the result exactly invariant
  // under permutation of the categories.
  std::vector<double> shares;
  shares.reserve(n);
  for (std::uint64_t c : counts) {
    if (c > 0) shares.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  std::sort(shares.begin(), shares.end());
  double sum = 0.0;
  for (double p : shares) sum += p * std::log(p);
  const double value = -sum / std::log(static_cast<double>(n));
  return std::clamp(value, 0.0, 1.0);
}

namespace {

std::size_t WingSlot(Wing wing) { return wing == Wing::kLeft ? 0 : 1; }

std::size_t CountMinorityOriginals(const Dataset& dataset) {
  std::size_t total = 0;
  for (UserIndex u = 0; u < dataset.num_users(); ++u) {
    if (dataset.is_minority(u)) total += dataset.originals_by(u).size();
  }
  return total;
}

std::size_t CountMinority(const Dataset& dataset,
                          std::span<const TweetIndex> timeline) {
  return static_cast<std::size_t>(
      std::count_if(timeline.begin(), timeline.end(), [&](TweetIndex t) {
        return dataset.is_minority(dataset.author_of(t));
      }));
}

// Position of the unique maximum, or nullopt on a tie.
std::optional<std::size_t> UniqueArgmax(const CategoryHistogram& histogram) {
  auto counts = histogram.counts();
  auto top = std::max_element(counts.begin(), counts.end());
  if (std::count(counts.begin(), counts.end(), *top) != 1) return std::nullopt;
  return static_cast<std::size_t>(top - counts.begin());
}

bool Dominates(const CategoryHistogram& histogram, std::size_t category,
               double margin) {
  const double share = static_cast<double>(histogram.count(category)) /
                       static_cast<double>(histogram.total());
  const double threshold =
      1.0 / static_cast<double>(histogram.num_categories()) + margin;
  return share >= threshold;
}

UserMetrics ComputeWithTotals(const Dataset& dataset, UserIndex user,
                              double io_margin,
                              std::size_t minority_originals) {
  UserMetrics m;
  m.user_id = dataset.user(user).id;

  const auto direct = DirectExposure(dataset, user);
  const auto indirect = IndirectExposure(dataset, user, direct);
  const CategoryHistogram direct_hist = CategoryHistogramOf(dataset, direct);
  const CategoryHistogram indirect_hist = CategoryHistogramOf(dataset, indirect);
  const OutputHistograms output = OutputHistogramsFor(dataset, user);

  m.direct_source_diversity = NormalizedEntropy(direct_hist);
  m.indirect_source_diversity = NormalizedEntropy(indirect_hist);
  m.retweet_diversity = NormalizedEntropy(output.retweets);
  m.reply_diversity = NormalizedEntropy(output.replies);

  const std::size_t received = CountMinority(dataset, indirect);
  if (minority_originals > 0) {
    m.minority_reach = static_cast<double>(received) /
                       static_cast<double>(minority_originals);
  }
  if (!indirect.empty()) {
    m.minority_exposure =
        static_cast<double>(received) / static_cast<double>(indirect.size());
  }
  m.io_correlated = IoCorrelated(indirect_hist, output.retweets, 0.0);
  m.io_correlated_margin = IoCorrelated(indirect_hist, output.retweets, io_margin);
  return m;
}

}  // namespace

std::optional<double> SourceDiversity(const Dataset& dataset,
                                      std::string_view user_id,
                                      ExposureMode mode) {
  const UserIndex user = dataset.RequireUser(user_id);
  auto timeline = DirectExposure(dataset, user);
  if (mode == ExposureMode::kIndirect) {
    timeline = IndirectExposure(dataset, user, timeline);
  }
  return NormalizedEntropy(CategoryHistogramOf(dataset, timeline));
}

std::optional<double> OutputDiversity(const Dataset& dataset,
                                      std::string_view user_id,
                                      OutputKind kind) {
  const OutputHistograms output = OutputHistogramsFor(dataset, user_id);
  return NormalizedEntropy(kind == OutputKind::kRetweet ? output.retweets
                                                        : output.replies);
}

std::optional<double> MinorityReach(const Dataset& dataset,
                                    std::string_view user_id) {
  const UserIndex user = dataset.RequireUser(user_id);
  const std::size_t published = CountMinorityOriginals(dataset);
  if (published == 0) return std::nullopt;
  const auto indirect =
      IndirectExposure(dataset, user, DirectExposure(dataset, user));
  return static_cast<double>(CountMinority(dataset, indirect)) /
         static_cast<double>(published);
}

std::optional<double> MinorityExposure(const Dataset& dataset,
                                       std::string_view user_id) {
  const UserIndex user = dataset.RequireUser(user_id);
  const auto indirect =
      IndirectExposure(dataset, user, DirectExposure(dataset, user));
  if (indirect.empty()) return std::nullopt;
  return static_cast<double>(CountMinority(dataset, indirect)) /
         static_cast<double>(indirect.size());
}

std::optional<bool> IoCorrelated(const CategoryHistogram& input,
                                 const CategoryHistogram& output,
                                 double margin) {
  if (input.total() == 0 || output.total() == 0) return std::nullopt;
  if (input.num_categories() != output.num_categories()) {
    throw ContractError("histograms over different category universes");
  }
  const auto in_top = UniqueArgmax(input);
  const auto out_top = UniqueArgmax(output);
  if (!in_top || !out_top || *in_top != *out_top) return false;
  if (margin > 0.0) {
    return Dominates(input, *in_top, margin) &&
           Dominates(output, *out_top, margin);
  }
  return true;
}

std::optional<bool> IoCorrelation(const Dataset& dataset,
                                  std::string_view user_id, double margin) {
  const UserIndex user = dataset.RequireUser(user_id);
  const auto indirect =
      IndirectExposure(dataset, user, DirectExposure(dataset, user));
  return IoCorrelated(CategoryHistogramOf(dataset, indirect),
                      OutputHistogramsFor(dataset, user).retweets, margin);
}

std::uint64_t WingMatrix::row_total(Wing actor) const {
  if (actor == Wing::kUnaligned) {
    throw ContractError("unaligned wing has no matrix row");
  }
  const auto& row = counts[WingSlot(actor)];
  return row[0] + row[1];
}

std::optional<double> WingMatrix::share(Wing actor, Wing target) const {
  if (target == Wing::kUnaligned) {
    throw ContractError("unaligned wing has no matrix column");
  }
  const std::uint64_t total = row_total(actor);
  if (total == 0) return std::nullopt;
  return static_cast<double>(counts[WingSlot(actor)][WingSlot(target)]) /
         static_cast<double>(total);
}

WingMatrix SeedInteractionMatrix(const Dataset& dataset) {
  const auto& categories = dataset.config().categories;
  auto wing_of = [&](UserIndex u) -> std::optional<Wing> {
    auto category = dataset.category_of(u);
    if (!category) return std::nullopt;
    return categories[*category].wing;
  };

  WingMatrix matrix;
  auto record = [&](std::optional<Wing> actor, std::optional<Wing> target) {
    if (!actor || !target || *actor == Wing::kUnaligned ||
        *target == Wing::kUnaligned) {
      return;
    }
    ++matrix.counts[WingSlot(*actor)][WingSlot(*target)];
  };

  for (UserIndex u = 0; u < dataset.num_users(); ++u) {
    const auto actor = wing_of(u);
    if (!actor) continue;
    for (TweetIndex retweet : dataset.retweets_by(u)) {
      record(actor, wing_of(dataset.author_of(dataset.source_of(retweet))));
    }
    for (TweetIndex reply : dataset.replies_by(u)) {
      record(actor, wing_of(dataset.target_of(reply)));
    }
  }
  return matrix;
}

UserMetrics ComputeUserMetrics(const Dataset& dataset, UserIndex user,
                               double io_margin) {
  return ComputeWithTotals(dataset, user, io_margin,
                           CountMinorityOriginals(dataset));
}

MetricsReport ComputeAll(const Dataset& dataset, const ComputeOptions& options) {
  MetricsReport report;
  report.io_margin = options.io_margin;
  report.seed_matrix = SeedInteractionMatrix(dataset);

  std::vector<UserIndex> regulars;
  regulars.reserve(dataset.num_regulars());
  for (UserIndex u = 0; u < dataset.num_users(); ++u) {
    if (!dataset.user(u).is_seed()) regulars.push_back(u);
  }
  report.users.resize(regulars.size());

  const std::size_t minority_originals = CountMinorityOriginals(dataset);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      report.users[i] = ComputeWithTotals(dataset, regulars[i],
                                          options.io_margin, minority_originals);
    }
  };

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, regulars.size() / 64)));
  if (threads <= 1) {
    work(0, regulars.size());
    return report;
  }
  // Each worker fills a disjoint slice of the preallocated result, so the
  // output order is fixed by user id whatever the scheduling.
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (regulars.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(regulars.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
  }
  return report;
}

}  // namespace viewdiv
