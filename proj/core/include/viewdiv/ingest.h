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

// Line-delimited input files and the inclusion filters applied on load.
//
// Users file, one JSON object per line:
//   {"id": "s1", "kind": "seed", "category": "left", "followees": []}
//   {"id": "u1", "kind": "regular", "followees": ["s1", "s2"]}
//
// Tweets file, one JSON object per line:
//   {"id": "t1", "author_id": "s1", "kind": "original", "timestamp": 0}
//   {"id": "t2", "author_id": "u1", "kind": "retweet",
//    "source_tweet_id": "t1", "timestamp": 60}
//   {"id": "t3", "author_id": "u1", "kind": "reply",
//    "target_user_id": "s1", "timestamp": 90}
//
// Ids may be JSON strings or integers. Unknown keys are ignored. Blank lines
// are skipped; malformed lines are reported with their 1-based line number
// and skipped.
//
// Spam list: one user id per line; blank lines and lines starting with '#'
// are ignored.
//
// Country config, a single JSON document:
//   {"name": "NL",
//    "categories": [{"id": "left", "wing": "left"}, ...],
//    "minorities": ["s7", "s9"]}

#ifndef VIEWDIV_INGEST_H_
#define VIEWDIV_INGEST_H_

#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "viewdiv/model.h"

namespace viewdiv {

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::vector<Diagnostic> diagnostics;
  std::size_t lines_read = 0;  // non-blank lines
};

// Throws InputError if the stream is unreadable.
ParseResult<UserRecord> ParseUsers(std::istream& in);
ParseResult<TweetRecord> ParseTweets(std::istream& in);
std::set<std::string> ParseSpamList(std::istream& in);
// Throws ConfigError on a malformed document.
CountryConfig ParseCountryConfig(std::istream& in);

struct FilterResult {
  std::vector<UserRecord> users;
  std::size_t dropped_spam = 0;
  std::size_t dropped_threshold = 0;
};

inline constexpr std::size_t kDefaultMinRetweets = 5;

// Keeps every seed. Keeps a regular user iff it is not listed as spam,
// follows at least one seed, and retweeted at least `min_retweets` distinct
// seed-authored originals. Spam takes precedence over the threshold.
FilterResult FilterActiveRegulars(std::vector<UserRecord> users,
                                  std::span<const TweetRecord> tweets,
                                  const std::set<std::string>& spam_ids,
                                  std::size_t min_retweets = kDefaultMinRetweets);

struct IngestReport {
  std::size_t users_read = 0;
  std::size_t users_malformed = 0;
  std::size_t users_dropped_spam = 0;
  std::size_t users_dropped_threshold = 0;
  std::size_t users_retained = 0;
  std::size_t tweets_read = 0;
  std::size_t tweets_malformed = 0;
  std::size_t tweets_duplicate = 0;
  std::size_t tweets_dropped_dangling = 0;
  std::size_t tweets_retained = 0;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct BuildResult {
  Dataset dataset;
  IngestReport report;
};

// Keeps the first occurrence of each tweet id, drops tweets whose author,
// retweet source or reply target cannot be resolved (a retweet source must
// be a retained seed original), then validates. Fills the tweet counters and
// users_retained of the report. Throws ConfigError on validation failure.
BuildResult BuildDataset(CountryConfig config, std::vector<UserRecord> users,
                         std::vector<TweetRecord> tweets);

struct IngestResult {
  Dataset dataset;
  IngestReport report;
  std::vector<Diagnostic> user_diagnostics;
  std::vector<Diagnostic> tweet_diagnostics;
};

// Parse, filter and build in one step.
IngestResult Ingest(CountryConfig config, std::istream& users,
                    std::istream& tweets, const std::set<std::string>& spam_ids,
                    std::size_t min_retweets = kDefaultMinRetweets);

// Writers producing files the parsers above accept.
void WriteUsers(std::ostream& out, std::span<const UserRecord> users);
void WriteTweets(std::ostream& out, std::span<const TweetRecord> tweets);
void WriteCountryConfig(std::ostream& out, const CountryConfig& config);

}  // namespace viewdiv

#endif  // VIEWDIV_INGEST_H_
