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

// What a user could have seen and what they passed on.
//
// The direct timeline of a user holds every original tweet written by a seed
// the user follows. The indirect timeline adds the seed originals that those
// followees retweeted. Both are sets: a tweet reached along several paths
// counts once. Timing is ignored; the whole observation window is used.

#ifndef VIEWDIV_EXPOSURE_H_
#define VIEWDIV_EXPOSURE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viewdiv/model.h"

namespace viewdiv {

struct ExposureTimeline {
  std::string user_id;
  std::vector<TweetIndex> direct;    // sorted, unique
  std::vector<TweetIndex> indirect;  // sorted, unique, superset of direct
};

// Tweet counts per political category, indexed in config order.
class CategoryHistogram {
 public:
  explicit CategoryHistogram(std::size_t num_categories)
      : counts_(num_categories, 0) {}
  explicit CategoryHistogram(std::vector<std::uint64_t> counts)
      : counts_(std::move(counts)) {}

  void Add(std::size_t category, std::uint64_t amount = 1) {
    counts_.at(category) += amount;
  }

  std::size_t num_categories() const { return counts_.size(); }
  std::uint64_t count(std::size_t category) const {
    return counts_.at(category);
  }
  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t total() const;
  // Number of categories with a positive count.
  std::size_t support_size() const;

  friend bool operator==(const CategoryHistogram&,
                         const CategoryHistogram&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

// Direct part only; `indirect` is left empty. Throws LookupError.
ExposureTimeline DirectTimeline(const Dataset& dataset,
                                std::string_view user_id);
// Both parts. Throws LookupError.
ExposureTimeline IndirectTimeline(const Dataset& dataset,
                                  std::string_view user_id);

std::vector<TweetIndex> DirectExposure(const Dataset& dataset, UserIndex user);
std::vector<TweetIndex> IndirectExposure(const Dataset& dataset,
                                         UserIndex user,
                                         std::span<const TweetIndex> direct);

// Histogram of the authors' categories. Every tweet must be a seed-authored
// original; throws ContractError otherwise.
CategoryHistogram CategoryHistogramOf(const Dataset& dataset,
                                      std::span<const TweetIndex> tweets);

struct OutputHistograms {
  CategoryHistogram retweets;
  CategoryHistogram replies;
};

// Retweets count the category of the retweeted original's author; replies
// count the addressee's category and are skipped when the addressee is not a
// seed.
OutputHistograms OutputHistogramsFor(const Dataset& dataset, UserIndex user);
OutputHistograms OutputHistogramsFor(const Dataset& dataset,
                                     std::string_view user_id);

}  // namespace viewdiv

#endif  // VIEWDIV_EXPOSURE_H_
