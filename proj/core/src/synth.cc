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

#include "viewdiv/synth.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "json.hpp"
#include "random.h"
#include "viewdiv/errors.h"

namespace viewdiv {
namespace {

using internal::Rng;

constexpr std::int64_t kWindowStart = 1356998400;  // 2013-01-01T00:00:00Z
constexpr std::int64_t kWindowLength = 31 * 86400;
constexpr std::int64_t kMaxRetweetDelay = 86400;

std::vector<double> EffectiveWeights(const SynthParams& params) {
  if (params.category_weights.empty()) {
    return std::vector<double>(params.n_categories,
                               1.0 / static_cast<double>(params.n_categories));
  }
  return params.category_weights;
}

std::string PaddedId(char prefix, std::size_t index, std::size_t width) {
  std::string digits = std::to_string(index);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

std::size_t DigitsFor(std::size_t count) {
  std::size_t width = 1;
  for (std::size_t x = count > 0 ? count - 1 : 0; x >= 10; x /= 10) ++width;
  return std::max<std::size_t>(width, 3);
}

// Largest-remainder apportionment with one seed per positive weight first.
std::vector<std::size_t> ApportionSeeds(const std::vector<double>& weights,
                                        std::size_t n_seeds) {
  const std::size_t n = weights.size();
  std::vector<std::size_t> counts(n, 0);
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (weights[c] > 0.0) {
      counts[c] = 1;
      ++assigned;
    }
  }
  const double rest = static_cast<double>(n_seeds - assigned);
  std::vector<double> remainder(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    const double quota = weights[c] * rest;
    const auto whole = static_cast<std::size_t>(std::floor(quota));
    counts[c] += whole;
    assigned += whole;
    remainder[c] = quota - static_cast<double>(whole);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t i = 0; assigned < n_seeds; i = (i + 1) % n) {
    if (weights[order[i]] <= 0.0) continue;
    ++counts[order[i]];
    ++assigned;
  }
  return counts;
}

// Draws a category from the homophily mixture restricted to `available`.
std::size_t ChooseCategory(Rng& rng, std::size_t home, double homophily,
                           const std::vector<char>& available) {
  const auto size = static_cast<double>(
      std::count(available.begin(), available.end(), 1));
  std::vector<double> weights(available.size(), 0.0);
  double sum = 0.0;
  for (std::size_t c = 0; c < available.size(); ++c) {
    if (!available[c]) continue;
    weights[c] = (1.0 - homophily) / size + (c == home ? homophily : 0.0);
    sum += weights[c];
  }
  if (!(sum > 0.0)) {
    // Only the home category carried mass and it is unavailable.
    for (std::size_t c = 0; c < available.size(); ++c) {
      weights[c] = available[c] ? 1.0 : 0.0;
    }
  }
  return rng.Weighted(weights);
}

template <typename T>
const T& PickUniform(Rng& rng, const std::vector<T>& items) {
  return items[rng.Below(items.size())];
}

class Generator {
 public:
  explicit Generator(const SynthParams& params)
      : params_(params), rng_(params.rng_seed) {}

  Dataset Run();

 private:
  void MakeConfig();
  void MakeSeeds();
  void MakeOriginals();
  void MakeSeedInteractions();
  void MakeRegulars();

  std::string NextTweetId() { return PaddedId('t', tweets_.size(), 7); }
  std::int64_t RandomTime() {
    return kWindowStart +
           static_cast<std::int64_t>(rng_.Below(kWindowLength));
  }
  void AddRetweet(const std::string& author, std::size_t original);
  void AddReply(const std::string& author, const std::string& target);

  const SynthParams& params_;
  Rng rng_;
  std::vector<double> weights_;
  CountryConfig config_;

  std::vector<UserRecord> users_;
  std::vector<TweetRecord> tweets_;
  std::size_t num_seeds_ = 0;
  std::vector<std::size_t> seed_category_;
  std::vector<std::vector<std::size_t>> seeds_in_;         // by category
  std::vector<std::vector<std::size_t>> originals_of_;     // by seed
};

void Generator::MakeConfig() {
  const std::size_t n = params_.n_categories;
  config_.name = "synthetic";
  for (std::size_t c = 0; c < n; ++c) {
    PoliticalCategory category;
    category.id = "cat" + std::to_string(c);
    if (c < n / 2) {
      category.wing = Wing::kLeft;
    } else if (c >= n - n / 2) {
      category.wing = Wing::kRight;
    } else {
      category.wing = Wing::kUnaligned;
    }
    config_.categories.push_back(std::move(category));
  }
}

void Generator::MakeSeeds() {
  const std::vector<std::size_t> per_category =
      ApportionSeeds(weights_, params_.n_seeds);
  const std::set<std::size_t> minority(params_.minority_categories.begin(),
                                       params_.minority_categories.end());
  const std::size_t width = DigitsFor(params_.n_seeds);
  seeds_in_.assign(params_.n_categories, {});
  for (std::size_t c = 0; c < per_category.size(); ++c) {
    for (std::size_t k = 0; k < per_category[c]; ++k) {
      const std::size_t index = users_.size();
      UserRecord seed;
      seed.id = PaddedId('s', index, width);
      seed.kind = UserKind::kSeed;
      seed.category = config_.categories[c].id;
      if (minority.contains(c)) config_.minority_user_ids.insert(seed.id);
      seeds_in_[c].push_back(index);
      seed_category_.push_back(c);
      users_.push_back(std::move(seed));
    }
  }
  num_seeds_ = users_.size();
  originals_of_.assign(num_seeds_, {});
}

void Generator::MakeOriginals() {
  std::size_t total = 0;
  for (std::size_t s = 0; s < num_seeds_; ++s) {
    total += rng_.Poisson(params_.tweets_per_seed);
  }
  std::vector<std::size_t> minority_seeds;
  std::vector<std::size_t> majority_seeds;
  for (std::size_t s = 0; s < num_seeds_; ++s) {
    (config_.minority_user_ids.contains(users_[s].id) ? minority_seeds
                                                       : majority_seeds)
        .push_back(s);
  }
  std::size_t minority_total = 0;
  if (!minority_seeds.empty()) {
    minority_total = static_cast<std::size_t>(std::llround(
        params_.minority_tweet_share * static_cast<double>(total)));
  }
  if (majority_seeds.empty()) minority_total = total;

  std::vector<std::size_t> author_of(total);
  for (std::size_t i = 0; i < total; ++i) {
    author_of[i] = i < minority_total ? PickUniform(rng_, minority_seeds)
                                      : PickUniform(rng_, majority_seeds);
  }
  // Emit grouped by seed so each seed's originals are contiguous.
  std::vector<std::size_t> volume(num_seeds_, 0);
  for (std::size_t s : author_of) ++volume[s];
  for (std::size_t s = 0; s < num_seeds_; ++s) {
    for (std::size_t k = 0; k < volume[s]; ++k) {
      TweetRecord tweet;
      tweet.id = NextTweetId();
      tweet.author_id = users_[s].id;
      tweet.kind = TweetKind::kOriginal;
      tweet.timestamp = RandomTime();
      originals_of_[s].push_back(tweets_.size());
      tweets_.push_back(std::move(tweet));
    }
  }
}

void Generator::AddRetweet(const std::string& author, std::size_t original) {
  TweetRecord tweet;
  tweet.id = NextTweetId();
  tweet.author_id = author;
  tweet.kind = TweetKind::kRetweet;
  tweet.source_tweet_id = tweets_[original].id;
  tweet.timestamp = tweets_[original].timestamp +
                    static_cast<std::int64_t>(rng_.Below(kMaxRetweetDelay));
  tweets_.push_back(std::move(tweet));
}

void Generator::AddReply(const std::string& author, const std::string& target) {
  TweetRecord tweet;
  tweet.id = NextTweetId();
  tweet.author_id = author;
  tweet.kind = TweetKind::kReply;
  tweet.target_user_id = target;
  tweet.timestamp = RandomTime();
  tweets_.push_back(std::move(tweet));
}

void Generator::MakeSeedInteractions() {
  const std::size_t n = params_.n_categories;
  for (std::size_t s = 0; s < num_seeds_; ++s) {
    const std::size_t home = seed_category_[s];

    // Other seeds that have something to retweet, by category.
    std::vector<std::vector<std::size_t>> with_originals(n);
    std::vector<std::vector<std::size_t>> others(n);
    for (std::size_t t = 0; t < num_seeds_; ++t) {
      if (t == s) continue;
      others[seed_category_[t]].push_back(t);
      if (!originals_of_[t].empty()) {
        with_originals[seed_category_[t]].push_back(t);
      }
    }
    std::vector<char> can_retweet(n), can_reply(n);
    for (std::size_t c = 0; c < n; ++c) {
      can_retweet[c] = !with_originals[c].empty();
      can_reply[c] = !others[c].empty();
    }

    const std::size_t retweets = rng_.Poisson(params_.seed_retweets_per_seed);
    std::set<std::size_t> done;
    if (std::count(can_retweet.begin(), can_retweet.end(), 1) > 0) {
      for (std::size_t k = 0; k < retweets; ++k) {
        const std::size_t c =
            ChooseCategory(rng_, home, params_.homophily, can_retweet);
        const std::size_t source = PickUniform(rng_, with_originals[c]);
        const std::size_t original = PickUniform(rng_, originals_of_[source]);
        if (done.insert(original).second) AddRetweet(users_[s].id, original);
      }
    }
    const std::size_t replies = rng_.Poisson(params_.seed_replies_per_seed);
    if (std::count(can_reply.begin(), can_reply.end(), 1) > 0) {
      for (std::size_t k = 0; k < replies; ++k) {
        const std::size_t c =
            ChooseCategory(rng_, home, params_.homophily, can_reply);
        AddReply(users_[s].id, users_[PickUniform(rng_, others[c])].id);
      }
    }
  }
}

void Generator::MakeRegulars() {
  const std::size_t n = params_.n_categories;
  const std::size_t width = DigitsFor(params_.n_regulars);
  std::vector<std::string> regular_ids;
  for (std::size_t r = 0; r < params_.n_regulars; ++r) {
    regular_ids.push_back(PaddedId('u', r, width));
  }

  std::vector<char> has_seeds(n);
  for (std::size_t c = 0; c < n; ++c) has_seeds[c] = !seeds_in_[c].empty();

  for (std::size_t r = 0; r < params_.n_regulars; ++r) {
    UserRecord user;
    user.id = regular_ids[r];
    user.kind = UserKind::kRegular;
    const std::size_t home = rng_.Weighted(weights_);

    // Follows.
    const std::size_t wanted = std::min<std::size_t>(
        num_seeds_, std::max<std::size_t>(1, rng_.Poisson(params_.follows_per_regular)));
    std::set<std::size_t> followed;
    for (std::size_t attempt = 0; followed.size() < wanted && attempt < 10 * wanted;
         ++attempt) {
      const std::size_t c = ChooseCategory(rng_, home, params_.homophily, has_seeds);
      followed.insert(PickUniform(rng_, seeds_in_[c]));
    }
    for (std::size_t s : followed) user.followees.insert(users_[s].id);

    // Retweets of followees' originals.
    std::vector<std::vector<std::size_t>> pool(n);
    std::vector<std::vector<std::size_t>> followed_in(n);
    std::size_t available = 0;
    for (std::size_t s : followed) {
      followed_in[seed_category_[s]].push_back(s);
      if (!originals_of_[s].empty()) {
        pool[seed_category_[s]].push_back(s);
        available += originals_of_[s].size();
      }
    }
    std::vector<char> in_pool(n), in_follows(n);
    for (std::size_t c = 0; c < n; ++c) {
      in_pool[c] = !pool[c].empty();
      in_follows[c] = !followed_in[c].empty();
    }
    const std::size_t target = std::min(
        available,
        std::max(params_.min_retweets, rng_.Poisson(params_.retweets_per_regular)));
    std::set<std::size_t> retweeted;
    for (std::size_t attempt = 0;
         retweeted.size() < target && attempt < 10 * target + 20; ++attempt) {
      const std::size_t c = ChooseCategory(rng_, home, params_.homophily, in_pool);
      const std::size_t source = PickUniform(rng_, pool[c]);
      const std::size_t original = PickUniform(rng_, originals_of_[source]);
      if (retweeted.insert(original).second) AddRetweet(user.id, original);
    }

    // Replies.
    const std::size_t replies = rng_.Poisson(params_.replies_per_regular);
    for (std::size_t k = 0; k < replies; ++k) {
      if (params_.n_regulars > 1 && rng_.Bernoulli(params_.regular_reply_share)) {
        std::size_t other = rng_.Below(params_.n_regulars - 1);
        if (other >= r) ++other;
        AddReply(user.id, regular_ids[other]);
      } else {
        const std::size_t c =
            ChooseCategory(rng_, home, params_.homophily, in_follows);
        AddReply(user.id, users_[PickUniform(rng_, followed_in[c])].id);
      }
    }
    users_.push_back(std::move(user));
  }
}

Dataset Generator::Run() {
  ValidateSynthParams(params_);
  weights_ = EffectiveWeights(params_);
  MakeConfig();
  MakeSeeds();
  MakeOriginals();
  MakeSeedInteractions();
  MakeRegulars();
  return Dataset::Create(std::move(config_), std::move(users_),
                         std::move(tweets_));
}

void RequireNonNegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ParamError(std::string(name) + " must be a finite non-negative number");
  }
}

void RequireUnit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParamError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void ValidateSynthParams(const SynthParams& params) {
  const std::size_t n = params.n_categories;
  if (n < 2) throw ParamError("n_categories must be at least 2");
  if (!params.category_weights.empty()) {
    if (params.category_weights.size() != n) {
      throw ParamError("category_weights must have n_categories entries");
    }
    double sum = 0.0;
    for (double w : params.category_weights) {
      RequireNonNegative(w, "category_weights entry");
      sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
      throw ParamError("category_weights must sum to 1");
    }
  }
  const std::vector<double> weights = EffectiveWeights(params);
  const auto populated = static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [](double w) { return w > 0.0; }));
  if (params.n_seeds < populated) {
    throw ParamError("n_seeds must cover every category with positive weight");
  }
  RequireUnit(params.homophily, "homophily");
  RequireUnit(params.minority_tweet_share, "minority_tweet_share");
  RequireUnit(params.regular_reply_share, "regular_reply_share");
  RequireNonNegative(params.tweets_per_seed, "tweets_per_seed");
  RequireNonNegative(params.follows_per_regular, "follows_per_regular");
  RequireNonNegative(params.retweets_per_regular, "retweets_per_regular");
  RequireNonNegative(params.replies_per_regular, "replies_per_regular");
  RequireNonNegative(params.seed_retweets_per_seed, "seed_retweets_per_seed");
  RequireNonNegative(params.seed_replies_per_seed, "seed_replies_per_seed");

  std::set<std::size_t> minority;
  bool minority_populated = false;
  for (std::size_t c : params.minority_categories) {
    if (c >= n) throw ParamError("minority category out of range");
    if (!minority.insert(c).second) {
      throw ParamError("duplicate minority category");
    }
    minority_populated = minority_populated || weights[c] > 0.0;
  }
  bool majority_populated = false;
  for (std::size_t c = 0; c < n; ++c) {
    if (!minority.contains(c) && weights[c] > 0.0) majority_populated = true;
  }
  if (params.minority_tweet_share > 0.0 && !minority_populated) {
    throw ParamError(
        "minority_tweet_share > 0 needs a minority category with seeds");
  }
  if (params.minority_tweet_share < 1.0 && !majority_populated) {
    throw ParamError(
        "minority_tweet_share < 1 needs a non-minority category with seeds");
  }
}

Dataset Generate(const SynthParams& params) {
  return Generator(params).Run();
}

const std::map<std::string, SynthParams>& Presets() {
  static const std::map<std::string, SynthParams> presets = [] {
    std::map<std::string, SynthParams> out;

    SynthParams uniform;
    uniform.n_categories = 5;
    uniform.n_seeds = 100;
    uniform.n_regulars = 500;
    uniform.homophily = 0.0;
    uniform.minority_categories = {4};
    uniform.minority_tweet_share = 0.15;
    uniform.tweets_per_seed = 20.0;
    uniform.follows_per_regular = 50.0;
    uniform.retweets_per_regular = 15.0;
    uniform.replies_per_regular = 3.0;
    out["uniform"] = uniform;

    SynthParams segregated = uniform;
    segregated.homophily = 1.0;
    out["segregated"] = segregated;

    // Mild homophily, many categories reachable: minorities reach most users.
    SynthParams pluralist;
    pluralist.n_categories = 5;
    pluralist.category_weights = {0.25, 0.25, 0.2, 0.2, 0.1};
    pluralist.n_seeds = 150;
    pluralist.n_regulars = 2000;
    pluralist.homophily = 0.3;
    pluralist.minority_categories = {4};
    pluralist.minority_tweet_share = 0.15;
    pluralist.tweets_per_seed = 20.0;
    pluralist.follows_per_regular = 12.0;
    pluralist.retweets_per_regular = 12.0;
    pluralist.replies_per_regular = 3.0;
    pluralist.seed_retweets_per_seed = 6.0;
    out["pluralist"] = pluralist;

    // Strong homophily and a small minority camp: most users never see a
    // minority tweet.
    SynthParams polarized = pluralist;
    polarized.category_weights = {0.43, 0.05, 0.05, 0.05, 0.42};
    polarized.n_seeds = 250;
    polarized.homophily = 0.93;
    polarized.minority_categories = {3};
    polarized.follows_per_regular = 10.0;
    out["polarized"] = polarized;
    return out;
  }();
  return presets;
}

SynthParams Preset(const std::string& name) {
  const auto& presets = Presets();
  auto it = presets.find(name);
  if (it == presets.end()) throw ParamError("unknown preset: " + name);
  return it->second;
}

namespace {

using Json = nlohmann::json;

template <typename T>
void ReadField(const Json& doc, const char* key, T& field) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  try {
    field = it->get<T>();
  } catch (const Json::exception&) {
    throw ParamError(std::string("bad value for \"") + key + "\"");
  }
}

}  // namespace

SynthParams ParseSynthParams(std::istream& in) {
  if (!in.good()) throw InputError("cannot read synth params");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error&) {
    throw ParamError("synth params are not valid JSON");
  }
  if (!doc.is_object()) throw ParamError("synth params must be a JSON object");

  static const std::set<std::string> kKnown = {
      "preset", "rng_seed", "n_categories", "category_weights", "n_seeds",
      "n_regulars", "homophily", "minority_categories", "minority_tweet_share",
      "tweets_per_seed", "follows_per_regular", "retweets_per_regular",
      "replies_per_regular", "seed_retweets_per_seed", "seed_replies_per_seed",
      "regular_reply_share", "min_retweets"};
  for (const auto& item : doc.items()) {
    if (!kKnown.contains(item.key())) {
      throw ParamError("unknown synth parameter \"" + item.key() + "\"");
    }
  }

  SynthParams params;
  if (auto it = doc.find("preset"); it != doc.end()) {
    if (!it->is_string()) throw ParamError("\"preset\" must be a string");
    params = Preset(it->get<std::string>());
  }
  ReadField(doc, "rng_seed", params.rng_seed);
  ReadField(doc, "n_categories", params.n_categories);
  ReadField(doc, "category_weights", params.category_weights);
  ReadField(doc, "n_seeds", params.n_seeds);
  ReadField(doc, "n_regulars", params.n_regulars);
  ReadField(doc, "homophily", params.homophily);
  ReadField(doc, "minority_categories", params.minority_categories);
  ReadField(doc, "minority_tweet_share", params.minority_tweet_share);
  ReadField(doc, "tweets_per_seed", params.tweets_per_seed);
  ReadField(doc, "follows_per_regular", params.follows_per_regular);
  ReadField(doc, "retweets_per_regular", params.retweets_per_regular);
  ReadField(doc, "replies_per_regular", params.replies_per_regular);
  ReadField(doc, "seed_retweets_per_seed", params.seed_retweets_per_seed);
  ReadField(doc, "seed_replies_per_seed", params.seed_replies_per_seed);
  ReadField(doc, "regular_reply_share", params.regular_reply_share);
  ReadField(doc, "min_retweets", params.min_retweets);
  return params;
}

void WriteSynthParams(std::ostream& out, const SynthParams& params) {
  nlohmann::ordered_json doc;
  doc["rng_seed"] = params.rng_seed;
  doc["n_categories"] = params.n_categories;
  doc["category_weights"] = params.category_weights;
  doc["n_seeds"] = params.n_seeds;
  doc["n_regulars"] = params.n_regulars;
  doc["homophily"] = params.homophily;
  doc["minority_categories"] = params.minority_categories;
  doc["minority_tweet_share"] = params.minority_tweet_share;
  doc["tweets_per_seed"] = params.tweets_per_seed;
  doc["follows_per_regular"] = params.follows_per_regular;
  doc["retweets_per_regular"] = params.retweets_per_regular;
  doc["replies_per_regular"] = params.replies_per_regular;
  doc["seed_retweets_per_seed"] = params.seed_retweets_per_seed;
  doc["seed_replies_per_seed"] = params.seed_replies_per_seed;
  doc["regular_reply_share"] = params.regular_reply_share;
  doc["min_retweets"] = params.min_retweets;
  out << doc.dump(2) << '\n';
}

}  // namespace viewdiv
