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

#include "viewdiv/oracle.h"

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "viewdiv/errors.h"

namespace viewdiv {
namespace {

using Counts = std::map<std::string, long long>;  // category id -> count

struct Records {
  const CountryConfig& config;
  std::map<std::string, const UserRecord*> users;
  std::map<std::string, const TweetRecord*> tweets;
};

// Entropy in bits from raw counts, H = log2(T) - sum(c log2 c) / T,
// normalized by log2(n).
std::optional<double> Entropy(const Counts& counts, std::size_t n) {
  long long total = 0;
  for (const auto& [id, c] : counts) total += c;
  if (total == 0) return std::nullopt;
  const double t = static_cast<double>(total);
  double weighted = 0.0;
  for (const auto& [id, c] : counts) {
    if (c > 0) weighted += static_cast<double>(c) * std::log2(static_cast<double>(c));
  }
  double h = (std::log2(t) - weighted / t) / std::log2(static_cast<double>(n));
  if (h < 0.0) h = 0.0;
  if (h > 1.0) h = 1.0;
  return h;
}

const std::string* CategoryOf(const Records& r, const std::string& user_id) {
  auto it = r.users.find(user_id);
  if (it == r.users.end() || !it->second->is_seed()) return nullptr;
  return &*it->second->category;
}

Wing WingOf(const Records& r, const std::string& category) {
  for (const auto& c : r.config.categories) {
    if (c.id == category) return c.wing;
  }
  return Wing::kUnaligned;
}

// The category with strictly the largest count, or nullptr on a tie.
const std::string* Dominant(const Counts& counts) {
  const std::string* best = nullptr;
  long long best_count = -1;
  bool tied = false;
  for (const auto& [id, c] : counts) {
    if (c > best_count) {
      best = &id;
      best_count = c;
      tied = false;
    } else if (c == best_count) {
      tied = true;
    }
  }
  return tied ? nullptr : best;
}

long long Total(const Counts& counts) {
  long long total = 0;
  for (const auto& [id, c] : counts) total += c;
  return total;
}

std::optional<bool> Correlated(const Counts& in, const Counts& out,
                               std::size_t n, double margin) {
  if (Total(in) == 0 || Total(out) == 0) return std::nullopt;
  const std::string* a = Dominant(in);
  const std::string* b = Dominant(out);
  if (a == nullptr || b == nullptr || *a != *b) return false;
  if (margin > 0.0) {
    const double bar = 1.0 / static_cast<double>(n) + margin;
    const double share_in = static_cast<double>(in.at(*a)) /
                            static_cast<double>(Total(in));
    const double share_out = static_cast<double>(out.at(*b)) /
                             static_cast<double>(Total(out));
    return share_in >= bar && share_out >= bar;
  }
  return true;
}

UserMetrics ForUser(const Records& r, const UserRecord& user, double margin) {
  const std::size_t n = r.config.categories.size();
  Counts zero;
  for (const auto& c : r.config.categories) zero[c.id] = 0;

  // Originals written by followees.
  std::set<std::string> direct;
  for (const auto& [id, tweet] : r.tweets) {
    if (tweet->kind == TweetKind::kOriginal &&
        user.followees.contains(tweet->author_id)) {
      direct.insert(id);
    }
  }
  // Plus originals a followee retweeted.
  std::set<std::string> indirect = direct;
  for (const auto& [id, tweet] : r.tweets) {
    if (tweet->kind == TweetKind::kRetweet &&
        user.followees.contains(tweet->author_id)) {
      indirect.insert(*tweet->source_tweet_id);
    }
  }

  auto histogram = [&](const std::set<std::string>& ids) {
    Counts counts = zero;
    for (const auto& id : ids) {
      ++counts[*CategoryOf(r, r.tweets.at(id)->author_id)];
    }
    return counts;
  };
  const Counts direct_counts = histogram(direct);
  const Counts indirect_counts = histogram(indirect);

  Counts retweet_counts = zero;
  Counts reply_counts = zero;
  for (const auto& [id, tweet] : r.tweets) {
    if (tweet->author_id != user.id) continue;
    if (tweet->kind == TweetKind::kRetweet) {
      const TweetRecord* source = r.tweets.at(*tweet->source_tweet_id);
      ++retweet_counts[*CategoryOf(r, source->author_id)];
    } else if (tweet->kind == TweetKind::kReply) {
      if (const std::string* c = CategoryOf(r, *tweet->target_user_id)) {
        ++reply_counts[*c];
      }
    }
  }

  long long published = 0;
  for (const auto& [id, tweet] : r.tweets) {
    if (tweet->kind == TweetKind::kOriginal &&
        r.config.minority_user_ids.contains(tweet->author_id)) {
      ++published;
    }
  }
  long long received = 0;
  for (const auto& id : indirect) {
    if (r.config.minority_user_ids.contains(r.tweets.at(id)->author_id)) {
      ++received;
    }
  }

  UserMetrics m;
  m.user_id = user.id;
  m.direct_source_diversity = Entropy(direct_counts, n);
  m.indirect_source_diversity = Entropy(indirect_counts, n);
  m.retweet_diversity = Entropy(retweet_counts, n);
  m.reply_diversity = Entropy(reply_counts, n);
  if (published > 0) {
    m.minority_reach =
        static_cast<double>(received) / static_cast<double>(published);
  }
  if (!indirect.empty()) {
    m.minority_exposure =
        static_cast<double>(received) / static_cast<double>(indirect.size());
  }
  m.io_correlated = Correlated(indirect_counts, retweet_counts, n, 0.0);
  m.io_correlated_margin = Correlated(indirect_counts, retweet_counts, n, margin);
  return m;
}

WingMatrix Matrix(const Records& r) {
  WingMatrix matrix;
  auto slot = [](Wing w) { return w == Wing::kLeft ? 0 : 1; };
  for (const auto& [id, tweet] : r.tweets) {
    const std::string* actor = CategoryOf(r, tweet->author_id);
    if (actor == nullptr) continue;
    const std::string* target = nullptr;
    if (tweet->kind == TweetKind::kRetweet) {
      target = CategoryOf(r, r.tweets.at(*tweet->source_tweet_id)->author_id);
    } else if (tweet->kind == TweetKind::kReply) {
      target = CategoryOf(r, *tweet->target_user_id);
    }
    if (target == nullptr) continue;
    const Wing from = WingOf(r, *actor);
    const Wing to = WingOf(r, *target);
    if (from == Wing::kUnaligned || to == Wing::kUnaligned) continue;
    ++matrix.counts[slot(from)][slot(to)];
  }
  return matrix;
}

}  // namespace

MetricsReport OracleMetrics(const Dataset& dataset, double io_margin) {
  if (dataset.tweets().size() > kOracleMaxTweets) {
    throw RefusalError("oracle refuses datasets above " +
                       std::to_string(kOracleMaxTweets) + " tweets");
  }
  Records records{dataset.config(), {}, {}};
  for (const auto& user : dataset.users()) records.users[user.id] = &user;
  for (const auto& tweet : dataset.tweets()) records.tweets[tweet.id] = &tweet;

  MetricsReport report;
  report.io_margin = io_margin;
  for (const auto& [id, user] : records.users) {
    if (user->is_seed()) continue;
    report.users.push_back(ForUser(records, *user, io_margin));
  }
  report.seed_matrix = Matrix(records);
  return report;
}

}  // namespace viewdiv
