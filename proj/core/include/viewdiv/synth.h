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

// Synthetic populations with controllable homophily.
//
// Generation model
// ----------------
// Categories are named cat0..cat{n-1}. The first floor(n/2) are Left, the
// last floor(n/2) are Right, and the middle one of an odd n is Unaligned.
//
// Seeds are apportioned to categories by `category_weights` (largest
// remainder, at least one seed per positive-weight category). Seeds of the
// `minority_categories` are the minority users.
//
// Every choice an actor makes about *which category* to follow, retweet or
// reply to is drawn from the homophily mixture
//
//   q(c) = h * [c == home] + (1 - h) / |A|,
//
// over the available categories A. A regular's home category is drawn from
// `category_weights`; a seed's home is its own category. h = 0 is uniform
// mixing, h = 1 is complete segregation. Within a category the concrete
// seed, and then the concrete original, are uniform.
//
// Volumes
//   * Total originals T is the sum of one Poisson(tweets_per_seed) draw per
//     seed. round(minority_tweet_share * T) of them go to minority seeds and
//     the rest to the other seeds, each tweet to a uniformly chosen seed of
//     its group (so per-seed counts are binomial, close to Poisson).
//   * Each seed retweets Poisson(seed_retweets_per_seed) distinct originals
//     of other seeds and replies Poisson(seed_replies_per_seed) times to
//     other seeds.
//   * Each regular follows max(1, Poisson(follows_per_regular)) distinct
//     seeds, retweets max(min_retweets, Poisson(retweets_per_regular))
//     distinct originals of its followees (fewer if they have fewer), and
//     replies Poisson(replies_per_regular) times, each reply addressed to
//     another regular with probability `regular_reply_share` and otherwise
//     to a followee.
//
// All randomness comes from one std::mt19937_64 seeded with `rng_seed`;
// output is identical across runs and toolchains.

#ifndef VIEWDIV_SYNTH_H_
#define VIEWDIV_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "viewdiv/model.h"

namespace viewdiv {

struct SynthParams {
  std::uint64_t rng_seed = 1;
  std::size_t n_categories = 5;
  std::vector<double> category_weights;  // empty means uniform
  std::size_t n_seeds = 50;
  std::size_t n_regulars = 500;
  double homophily = 0.5;
  std::vector<std::size_t> minority_categories = {4};
  double minority_tweet_share = 0.15;
  double tweets_per_seed = 20.0;
  double follows_per_regular = 20.0;
  double retweets_per_regular = 10.0;
  double replies_per_regular = 2.0;
  double seed_retweets_per_seed = 4.0;
  double seed_replies_per_seed = 2.0;
  double regular_reply_share = 0.1;
  std::size_t min_retweets = 5;

  friend bool operator==(const SynthParams&, const SynthParams&) = default;
};

// Throws ParamError describing the first infeasible parameter.
void ValidateSynthParams(const SynthParams& params);

// Throws ParamError for infeasible parameters.
Dataset Generate(const SynthParams& params);

// Named parameter sets. Fields not listed keep the SynthParams defaults.
//
//   uniform     5 categories, equal weights, 100 seeds, 500 regulars, h = 0,
//               minority {4}, 50 follows, 15 retweets, 3 replies
//   segregated  uniform with h = 1
//   pluralist   5 categories, weights {.25 .25 .2 .2 .1}, 150 seeds,
//               2000 regulars, h = 0.3, minority {4}, 12 follows,
//               12 retweets, 3 replies, 6 seed retweets
//   polarized   pluralist with weights {.43 .05 .05 .05 .42}, 250 seeds,
//               h = 0.93, minority {3}, 10 follows
//
// With rng_seed 1 the mean minority reach is about 0.15 for pluralist and
// 0.05 for polarized.
const std::map<std::string, SynthParams>& Presets();
// Throws ParamError for unknown names.
SynthParams Preset(const std::string& name);

// JSON object with the SynthParams field names as keys. Missing keys keep
// their defaults, or the values of the preset named by an optional "preset"
// key. Unknown keys are a ParamError.
SynthParams ParseSynthParams(std::istream& in);
void WriteSynthParams(std::ostream& out, const SynthParams& params);

}  // namespace viewdiv

#endif  // VIEWDIV_SYNTH_H_
