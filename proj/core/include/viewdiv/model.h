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

// Domain types shared by every module: the political-category universe of a
// country, seed and regular users, tweets, and the immutable Dataset that
// ties them together.
//
// Seed users are accounts with a known political category; they author all
// counted content. Regular users are followers whose exposure and behaviour
// are measured. Regular users follow seeds only.

#ifndef VIEWDIV_MODEL_H_
#define VIEWDIV_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace viewdiv {

enum class Wing { kLeft, kRight, kUnaligned };

std::string_view WingName(Wing wing);
std::optional<Wing> ParseWing(std::string_view token);

struct PoliticalCategory {
  std::string id;
  Wing wing = Wing::kUnaligned;
};

struct CountryConfig {
  std::string name;
  std::vector<PoliticalCategory> categories;
  std::set<std::string> minority_user_ids;

  std::size_t num_categories() const { return categories.size(); }
  // Position of `id` in `categories`, or nullopt.
  std::optional<std::size_t> IndexOf(std::string_view id) const;
};

// Returns the configured wing of a category. Throws LookupError for unknown
// ids.
Wing ClassifyWing(std::string_view category_id, const CountryConfig& config);

enum class UserKind { kSeed, kRegular };

struct UserRecord {
  std::string id;
  UserKind kind = UserKind::kRegular;
  std::optional<std::string> category;  // seeds only
  std::set<std::string> followees;      // seed ids

  bool is_seed() const { return kind == UserKind::kSeed; }
};

enum class TweetKind { kOriginal, kRetweet, kReply };

struct TweetRecord {
  std::string id;
  std::string author_id;
  TweetKind kind = TweetKind::kOriginal;
  std::optional<std::string> source_tweet_id;  // retweets: the original
  std::optional<std::string> target_user_id;   // replies: the addressee
  std::int64_t timestamp = 0;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Checks the category universe, the minority list and every user-level
// reference. Violations are returned as data.
ValidationResult ValidateConfig(const CountryConfig& config,
                                std::span<const UserRecord> users);

// ValidateConfig plus every tweet-level invariant.
ValidationResult ValidateDataset(const CountryConfig& config,
                                 std::span<const UserRecord> users,
                                 std::span<const TweetRecord> tweets);

using UserIndex = std::uint32_t;
using TweetIndex = std::uint32_t;
inline constexpr std::uint32_t kNoIndex =
    std::numeric_limits<std::uint32_t>::max();

// An immutable, validated collection of users and tweets.
//
// Users are stored sorted by id; tweets keep their input order. Alongside the
// raw records the dataset keeps positional indices (author, retweet source,
// reply target, per-user tweet lists) so that metric code never has to hash
// strings in its inner loops. All accessors are const and safe to call from
// several threads.
class Dataset {
 public:
  // Validates and indexes. Throws ConfigError listing every violation.
  static Dataset Create(CountryConfig config, std::vector<UserRecord> users,
                        std::vector<TweetRecord> tweets);

  const CountryConfig& config() const { return config_; }
  std::span<const UserRecord> users() const { return users_; }
  std::span<const TweetRecord> tweets() const { return tweets_; }

  // Re-runs ValidateDataset over the stored records.
  ValidationResult Validate() const;

  std::optional<UserIndex> FindUser(std::string_view id) const;
  std::optional<TweetIndex> FindTweet(std::string_view id) const;
  // Throws LookupError for unknown ids.
  UserIndex RequireUser(std::string_view id) const;

  const UserRecord& user(UserIndex u) const { return users_[u]; }
  const TweetRecord& tweet(TweetIndex t) const { return tweets_[t]; }

  // Category position of a seed; nullopt for regular users.
  std::optional<std::size_t> category_of(UserIndex u) const;
  bool is_minority(UserIndex u) const { return minority_[u] != 0; }

  std::span<const UserIndex> followees(UserIndex u) const {
    return followees_[u];
  }
  std::span<const TweetIndex> originals_by(UserIndex u) const {
    return originals_by_[u];
  }
  std::span<const TweetIndex> retweets_by(UserIndex u) const {
    return retweets_by_[u];
  }
  std::span<const TweetIndex> replies_by(UserIndex u) const {
    return replies_by_[u];
  }

  UserIndex author_of(TweetIndex t) const { return author_[t]; }
  // Retweeted original, or kNoIndex.
  TweetIndex source_of(TweetIndex t) const { return source_[t]; }
  // Reply addressee, or kNoIndex.
  UserIndex target_of(TweetIndex t) const { return target_[t]; }

  std::size_t num_users() const { return users_.size(); }
  std::size_t num_tweets() const { return tweets_.size(); }
  std::size_t num_regulars() const { return num_regulars_; }
  std::size_t num_seeds() const { return num_users() - num_regulars(); }

 private:
  Dataset() = default;
  void BuildIndex();

  CountryConfig config_;
  std::vector<UserRecord> users_;
  std::vector<TweetRecord> tweets_;

  std::unordered_map<std::string, UserIndex> user_by_id_;
  std::unordered_map<std::string, TweetIndex> tweet_by_id_;
  std::vector<std::int32_t> category_;
  std::vector<std::uint8_t> minority_;
  std::vector<std::vector<UserIndex>> followees_;
  std::vector<std::vector<TweetIndex>> originals_by_;
  std::vector<std::vector<TweetIndex>> retweets_by_;
  std::vector<std::vector<TweetIndex>> replies_by_;
  std::vector<UserIndex> author_;
  std::vector<TweetIndex> source_;
  std::vector<UserIndex> target_;
  std::size_t num_regulars_ = 0;
};

}  // namespace viewdiv

#endif  // VIEWDIV_MODEL_H_
