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

#include "viewdiv/model.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "viewdiv/errors.h"

namespace viewdiv {

ConfigError::ConfigError(std::vector<std::string> violations)
    : Error([&] {
        std::string message = "validation failed";
        for (const auto& v : violations) message += "\n  " + v;
        return message;
      }()),
      violations_(std::move(violations)) {}

std::string_view WingName(Wing wing) {
  switch (wing) {
    case Wing::kLeft:
      return "left";
    case Wing::kRight:
      return "right";
    case Wing::kUnaligned:
      return "unaligned";
  }
  return "unaligned";
}

std::optional<Wing> ParseWing(std::string_view token) {
  if (token == "left") return Wing::kLeft;
  if (token == "right") return Wing::kRight;
  if (token == "unaligned") return Wing::kUnaligned;
  return std::nullopt;
}

std::optional<std::size_t> CountryConfig::IndexOf(std::string_view id) const {
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (categories[i].id == id) return i;
  }
  return std::nullopt;
}

Wing ClassifyWing(std::string_view category_id, const CountryConfig& config) {
  auto index = config.IndexOf(category_id);
  if (!index) {
    throw LookupError("unknown category: " + std::string(category_id));
  }
  return config.categories[*index].wing;
}

ValidationResult ValidateConfig(const CountryConfig& config,
                                std::span<const UserRecord> users) {
  ValidationResult result;
  auto& out = result.violations;

  if (config.categories.size() < 2) {
    out.push_back("n < 2: config defines " +
                  std::to_string(config.categories.size()) + " categories");
  }
  std::unordered_set<std::string_view> category_ids;
  for (const auto& category : config.categories) {
    if (category.id.empty()) {
      out.push_back("empty category id");
      continue;
    }
    if (!category_ids.insert(category.id).second) {
      out.push_back("duplicate category id: " + category.id);
    }
  }

  std::unordered_map<std::string_view, const UserRecord*> by_id;
  for (const auto& user : users) {
    if (!by_id.emplace(user.id, &user).second) {
      out.push_back("duplicate user id: " + user.id);
    }
  }

  for (const auto& id : config.minority_user_ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      out.push_back("minority id not found: " + id);
    } else if (!it->second->is_seed()) {
      out.push_back("minority must be seed: " + id);
    }
  }

  for (const auto& user : users) {
    if (user.id.empty()) out.push_back("empty user id");
    if (user.is_seed()) {
      if (!user.category) {
        out.push_back("seed without category: " + user.id);
      } else if (!category_ids.contains(*user.category)) {
        out.push_back("unknown category '" + *user.category +
                      "' for seed: " + user.id);
      }
    } else if (user.category) {
      out.push_back("regular with category: " + user.id);
    }
    for (const auto& followee : user.followees) {
      auto it = by_id.find(followee);
      if (it == by_id.end()) {
        out.push_back("dangling followee: " + user.id + " -> " + followee);
      } else if (!it->second->is_seed()) {
        out.push_back("followee is not a seed: " + user.id + " -> " +
                      followee);
      }
    }
  }
  return result;
}

ValidationResult ValidateDataset(const CountryConfig& config,
                                 std::span<const UserRecord> users,
                                 std::span<const TweetRecord> tweets) {
  ValidationResult result = ValidateConfig(config, users);
  auto& out = result.violations;

  std::unordered_map<std::string_view, const UserRecord*> user_by_id;
  for (const auto& user : users) user_by_id.emplace(user.id, &user);
  std::unordered_map<std::string_view, const TweetRecord*> tweet_by_id;
  for (const auto& tweet : tweets) {
    if (!tweet_by_id.emplace(tweet.id, &tweet).second) {
      out.push_back("duplicate tweet id: " + tweet.id);
    }
  }

  for (const auto& tweet : tweets) {
    if (tweet.id.empty()) out.push_back("empty tweet id");
    if (!user_by_id.contains(tweet.author_id)) {
      out.push_back("dangling author: " + tweet.id + " -> " + tweet.author_id);
    }
    if (tweet.timestamp < 0) out.push_back("negative timestamp: " + tweet.id);
    switch (tweet.kind) {
      case TweetKind::kOriginal:
        break;
      case TweetKind::kRetweet: {
        if (!tweet.source_tweet_id) {
          out.push_back("retweet without source: " + tweet.id);
          break;
        }
        auto it = tweet_by_id.find(*tweet.source_tweet_id);
        if (it == tweet_by_id.end()) {
          out.push_back("dangling source: " + tweet.id + " -> " +
                        *tweet.source_tweet_id);
          break;
        }
        const TweetRecord& source = *it->second;
        auto author = user_by_id.find(source.author_id);
        if (source.kind != TweetKind::kOriginal ||
            author == user_by_id.end() || !author->second->is_seed()) {
          out.push_back("retweet source is not a seed original: " + tweet.id +
                        " -> " + source.id);
        }
        break;
      }
      case TweetKind::kReply:
        if (!tweet.target_user_id) {
          out.push_back("reply without target: " + tweet.id);
        } else if (!user_by_id.contains(*tweet.target_user_id)) {
          out.push_back("dangling reply target: " + tweet.id + " -> " +
                        *tweet.target_user_id);
        }
        break;
    }
  }
  return result;
}

Dataset Dataset::Create(CountryConfig config, std::vector<UserRecord> users,
                        std::vector<TweetRecord> tweets) {
  std::sort(users.begin(), users.end(),
            [](const UserRecord& a, const UserRecord& b) { return a.id < b.id; });
  ValidationResult validation = ValidateDataset(config, users, tweets);
  if (!validation.ok()) throw ConfigError(std::move(validation.violations));

  Dataset dataset;
  dataset.config_ = std::move(config);
  dataset.users_ = std::move(users);
  dataset.tweets_ = std::move(tweets);
  dataset.BuildIndex();
  return dataset;
}

ValidationResult Dataset::Validate() const {
  return ValidateDataset(config_, users_, tweets_);
}

void Dataset::BuildIndex() {
  const std::size_t num_users = users_.size();
  const std::size_t num_tweets = tweets_.size();

  user_by_id_.reserve(num_users);
  for (UserIndex u = 0; u < num_users; ++u) user_by_id_.emplace(users_[u].id, u);
  tweet_by_id_.reserve(num_tweets);
  for (TweetIndex t = 0; t < num_tweets; ++t) {
    tweet_by_id_.emplace(tweets_[t].id, t);
  }

  category_.assign(num_users, -1);
  minority_.assign(num_users, 0);
  followees_.assign(num_users, {});
  originals_by_.assign(num_users, {});
  retweets_by_.assign(num_users, {});
  replies_by_.assign(num_users, {});
  num_regulars_ = 0;
  for (UserIndex u = 0; u < num_users; ++u) {
    const UserRecord& user = users_[u];
    if (user.is_seed()) {
      category_[u] = static_cast<std::int32_t>(*config_.IndexOf(*user.category));
      minority_[u] = config_.minority_user_ids.contains(user.id) ? 1 : 0;
    } else {
      ++num_regulars_;
    }
    // std::set iteration is id-ordered, so followee indices come out sorted.
    for (const auto& followee : user.followees) {
      followees_[u].push_back(user_by_id_.at(followee));
    }
  }

  author_.assign(num_tweets, kNoIndex);
  source_.assign(num_tweets, kNoIndex);
  target_.assign(num_tweets, kNoIndex);
  for (TweetIndex t = 0; t < num_tweets; ++t) {
    const TweetRecord& tweet = tweets_[t];
    const UserIndex author = user_by_id_.at(tweet.author_id);
    author_[t] = author;
    switch (tweet.kind) {
      case TweetKind::kOriginal:
        originals_by_[author].push_back(t);
        break;
      case TweetKind::kRetweet:
        source_[t] = tweet_by_id_.at(*tweet.source_tweet_id);
        retweets_by_[author].push_back(t);
        break;
      case TweetKind::kReply:
        target_[t] = user_by_id_.at(*tweet.target_user_id);
        replies_by_[author].push_back(t);
        break;
    }
  }
}

std::optional<UserIndex> Dataset::FindUser(std::string_view id) const {
  auto it = user_by_id_.find(std::string(id));
  if (it == user_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<TweetIndex> Dataset::FindTweet(std::string_view id) const {
  auto it = tweet_by_id_.find(std::string(id));
  if (it == tweet_by_id_.end()) return std::nullopt;
  return it->second;
}

UserIndex Dataset::RequireUser(std::string_view id) const {
  auto u = FindUser(id);
  if (!u) throw LookupError("unknown user: " + std::string(id));
  return *u;
}

std::optional<std::size_t> Dataset::category_of(UserIndex u) const {
  if (category_[u] < 0) return std::nullopt;
  return static_cast<std::size_t>(category_[u]);
}

}  // namespace viewdiv
