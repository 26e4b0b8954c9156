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

#include "viewdiv/exposure.h"

#include <algorithm>
#include <numeric>

#include "viewdiv/errors.h"

namespace viewdiv {

std::uint64_t CategoryHistogram::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::size_t CategoryHistogram::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(counts_.begin(), counts_.end(),
                    [](std::uint64_t c) { return c > 0; }));
}

namespace {

void SortUnique(std::vector<TweetIndex>& tweets) {
  std::sort(tweets.begin(), tweets.end());
  tweets.erase(std::unique(tweets.begin(), tweets.end()), tweets.end());
}

}  // namespace

std::vector<TweetIndex> DirectExposure(const Dataset& dataset, UserIndex user) {
  std::vector<TweetIndex> direct;
  for (UserIndex followee : dataset.followees(user)) {
    auto originals = dataset.originals_by(followee);
    direct.insert(direct.end(), originals.begin(), originals.end());
  }
  // Each original has exactly one author, so the per-followee lists are
  // disjoint; sorting is enough.
  std::sort(direct.begin(), direct.end());
  return direct;
}

std::vector<TweetIndex> IndirectExposure(const Dataset& dataset,
                                         UserIndex user,
                                         std::span<const TweetIndex> direct) {
  std::vector<TweetIndex> indirect(direct.begin(), direct.end());
  for (UserIndex followee : dataset.followees(user)) {
    for (TweetIndex retweet : dataset.retweets_by(followee)) {
      indirect.push_back(dataset.source_of(retweet));
    }
  }
  SortUnique(indirect);
  return indirect;
}

ExposureTimeline DirectTimeline(const Dataset& dataset,
                                std::string_view user_id) {
  const UserIndex user = dataset.RequireUser(user_id);
  ExposureTimeline timeline;
  timeline.user_id = dataset.user(user).id;
  timeline.direct = DirectExposure(dataset, user);
  return timeline;
}

ExposureTimeline IndirectTimeline(const Dataset& dataset,
                                  std::string_view user_id) {
  ExposureTimeline timeline = DirectTimeline(dataset, user_id);
  timeline.indirect =
      IndirectExposure(dataset, dataset.RequireUser(user_id), timeline.direct);
  return timeline;
}

CategoryHistogram CategoryHistogramOf(const Dataset& dataset,
                                      std::span<const TweetIndex> tweets) {
  CategoryHistogram histogram(dataset.config().num_categories());
  for (TweetIndex t : tweets) {
    if (t >= dataset.num_tweets()) {
      throw ContractError("tweet index out of range");
    }
    const auto category = dataset.category_of(dataset.author_of(t));
    if (dataset.tweet(t).kind != TweetKind::kOriginal || !category) {
      throw ContractError("not a seed-authored original: " +
                          dataset.tweet(t).id);
    }
    histogram.Add(*category);
  }
  return histogram;
}

OutputHistograms OutputHistogramsFor(const Dataset& dataset, UserIndex user) {
  const std::size_t n = dataset.config().num_categories();
  OutputHistograms out{CategoryHistogram(n), CategoryHistogram(n)};
  for (TweetIndex retweet : dataset.retweets_by(user)) {
    const TweetIndex source = dataset.source_of(retweet);
    out.retweets.Add(*dataset.category_of(dataset.author_of(source)));
  }
  for (TweetIndex reply : dataset.replies_by(user)) {
    if (auto category = dataset.category_of(dataset.target_of(reply))) {
      out.replies.Add(*category);
    }
  }
  return out;
}

OutputHistograms OutputHistogramsFor(const Dataset& dataset,
                                     std::string_view user_id) {
  return OutputHistogramsFor(dataset, dataset.RequireUser(user_id));
}

}  // namespace viewdiv
