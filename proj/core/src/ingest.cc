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

#include "viewdiv/ingest.h"

#include <istream>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "viewdiv/errors.h"

namespace viewdiv {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Thrown while decoding one record; turned into a Diagnostic by the caller.
struct RecordError {
  std::string message;
};

std::string ReadId(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) {
    throw RecordError{std::string("missing required field \"") + key + "\""};
  }
  if (it->is_string()) {
    std::string id = it->get<std::string>();
    if (id.empty()) throw RecordError{std::string("empty \"") + key + "\""};
    return id;
  }
  if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
  throw RecordError{std::string("field \"") + key +
                    "\" must be a string or integer id"};
}

std::string ReadToken(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) {
    throw RecordError{std::string("missing required field \"") + key + "\""};
  }
  if (!it->is_string()) {
    throw RecordError{std::string("field \"") + key + "\" must be a string"};
  }
  return it->get<std::string>();
}

// Calls `decode` on every non-blank line, collecting records and diagnostics.
template <typename Record, typename Decode>
ParseResult<Record> ParseLines(std::istream& in, Decode decode) {
  if (!in.good()) throw InputError("cannot read input stream");
  ParseResult<Record> result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++result.lines_read;
    try {
      Json object = Json::parse(line);
      if (!object.is_object()) throw RecordError{"record is not an object"};
      decode(object, result);
    } catch (const Json::parse_error&) {
      result.diagnostics.push_back({line_number, "invalid JSON"});
    } catch (const RecordError& e) {
      result.diagnostics.push_back({line_number, e.message});
    }
  }
  if (in.bad()) throw InputError("read error on input stream");
  return result;
}

}  // namespace

ParseResult<UserRecord> ParseUsers(std::istream& in) {
  std::unordered_set<std::string> seen;
  return ParseLines<UserRecord>(in, [&](const Json& object,
                                        ParseResult<UserRecord>& result) {
    UserRecord user;
    user.id = ReadId(object, "id");
    const std::string kind = ReadToken(object, "kind");
    if (kind == "seed") {
      user.kind = UserKind::kSeed;
      user.category = ReadToken(object, "category");
    } else if (kind == "regular") {
      user.kind = UserKind::kRegular;
      if (auto it = object.find("category"); it != object.end() && !it->is_null()) {
        throw RecordError{"regular user must not carry a category"};
      }
    } else {
      throw RecordError{"unknown user kind \"" + kind + "\""};
    }
    if (auto it = object.find("followees"); it != object.end() && !it->is_null()) {
      if (!it->is_array()) throw RecordError{"\"followees\" must be a list"};
      for (const Json& followee : *it) {
        if (followee.is_string() && !followee.get<std::string>().empty()) {
          user.followees.insert(followee.get<std::string>());
        } else if (followee.is_number_integer()) {
          user.followees.insert(std::to_string(followee.get<std::int64_t>()));
        } else {
          throw RecordError{"\"followees\" entries must be ids"};
        }
      }
    }
    if (!seen.insert(user.id).second) {
      throw RecordError{"duplicate user id \"" + user.id + "\""};
    }
    result.records.push_back(std::move(user));
  });
}

ParseResult<TweetRecord> ParseTweets(std::istream& in) {
  return ParseLines<TweetRecord>(in, [](const Json& object,
                                        ParseResult<TweetRecord>& result) {
    TweetRecord tweet;
    tweet.id = ReadId(object, "id");
    tweet.author_id = ReadId(object, "author_id");
    const std::string kind = ReadToken(object, "kind");
    if (kind == "original") {
      tweet.kind = TweetKind::kOriginal;
    } else if (kind == "retweet") {
      tweet.kind = TweetKind::kRetweet;
      tweet.source_tweet_id = ReadId(object, "source_tweet_id");
    } else if (kind == "reply") {
      tweet.kind = TweetKind::kReply;
      tweet.target_user_id = ReadId(object, "target_user_id");
    } else {
      throw RecordError{"unknown tweet kind \"" + kind + "\""};
    }
    auto ts = object.find("timestamp");
    if (ts == object.end() || !ts->is_number_integer()) {
      throw RecordError{"missing or non-integer \"timestamp\""};
    }
    tweet.timestamp = ts->get<std::int64_t>();
    if (tweet.timestamp < 0) throw RecordError{"negative timestamp"};
    result.records.push_back(std::move(tweet));
  });
}

std::set<std::string> ParseSpamList(std::istream& in) {
  if (!in.good()) throw InputError("cannot read spam list");
  std::set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    ids.insert(line.substr(begin, end - begin + 1));
  }
  if (in.bad()) throw InputError("read error on spam list");
  return ids;
}

CountryConfig ParseCountryConfig(std::istream& in) {
  if (!in.good()) throw InputError("cannot read country config");
  auto fail = [](const std::string& what) -> ConfigError {
    return ConfigError("malformed country config: " + what, {what});
  };
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw fail(std::string("invalid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) throw fail("top level must be an object");

  CountryConfig config;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw fail("\"name\" must be a string");
    config.name = it->get<std::string>();
  }
  auto categories = doc.find("categories");
  if (categories == doc.end() || !categories->is_array()) {
    throw fail("\"categories\" must be a list");
  }
  for (const Json& entry : *categories) {
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_string()) {
      throw fail("every category needs a string \"id\"");
    }
    PoliticalCategory category;
    category.id = entry["id"].get<std::string>();
    if (auto wing = entry.find("wing"); wing != entry.end()) {
      if (!wing->is_string()) throw fail("\"wing\" must be a string");
      auto parsed = ParseWing(wing->get<std::string>());
      if (!parsed) {
        throw fail("unknown wing \"" + wing->get<std::string>() + "\"");
      }
      category.wing = *parsed;
    }
    config.categories.push_back(std::move(category));
  }
  if (auto it = doc.find("minorities"); it != doc.end()) {
    if (!it->is_array()) throw fail("\"minorities\" must be a list");
    for (const Json& id : *it) {
      if (id.is_string()) {
        config.minority_user_ids.insert(id.get<std::string>());
      } else if (id.is_number_integer()) {
        config.minority_user_ids.insert(std::to_string(id.get<std::int64_t>()));
      } else {
        throw fail("\"minorities\" entries must be ids");
      }
    }
  }
  return config;
}

FilterResult FilterActiveRegulars(std::vector<UserRecord> users,
                                  std::span<const TweetRecord> tweets,
                                  const std::set<std::string>& spam_ids,
                                  std::size_t min_retweets) {
  std::unordered_set<std::string> seeds;  // owning: users are moved below
  for (const auto& user : users) {
    if (user.is_seed()) seeds.insert(user.id);
  }
  std::unordered_set<std::string_view> seed_originals;
  for (const auto& tweet : tweets) {
    if (tweet.kind == TweetKind::kOriginal && seeds.contains(tweet.author_id)) {
      seed_originals.insert(tweet.id);
    }
  }
  std::unordered_map<std::string_view, std::unordered_set<std::string_view>>
      retweeted;
  for (const auto& tweet : tweets) {
    if (tweet.kind == TweetKind::kRetweet && tweet.source_tweet_id &&
        seed_originals.contains(*tweet.source_tweet_id)) {
      retweeted[tweet.author_id].insert(*tweet.source_tweet_id);
    }
  }

  FilterResult result;
  result.users.reserve(users.size());
  for (auto& user : users) {
    if (user.is_seed()) {
      result.users.push_back(std::move(user));
      continue;
    }
    if (spam_ids.contains(user.id)) {
      ++result.dropped_spam;
      continue;
    }
    const bool follows_seed = std::any_of(
        user.followees.begin(), user.followees.end(),
        [&](const std::string& id) { return seeds.contains(id); });
    auto it = retweeted.find(user.id);
    const std::size_t distinct = it == retweeted.end() ? 0 : it->second.size();
    if (!follows_seed || distinct < min_retweets) {
      ++result.dropped_threshold;
      continue;
    }
    result.users.push_back(std::move(user));
  }
  return result;
}

BuildResult BuildDataset(CountryConfig config, std::vector<UserRecord> users,
                         std::vector<TweetRecord> tweets) {
  IngestReport report;
  report.tweets_read = tweets.size();

  std::unordered_set<std::string> seen;
  std::vector<TweetRecord> unique;
  unique.reserve(tweets.size());
  for (auto& tweet : tweets) {
    if (!seen.insert(tweet.id).second) {
      ++report.tweets_duplicate;
      continue;
    }
    unique.push_back(std::move(tweet));
  }

  std::unordered_map<std::string_view, const UserRecord*> user_by_id;
  for (const auto& user : users) user_by_id.emplace(user.id, &user);

  // Originals depend only on their author; resolve them first so retweets
  // can be checked against the retained seed originals.
  std::vector<char> keep(unique.size(), 0);
  std::unordered_set<std::string_view> seed_originals;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const TweetRecord& tweet = unique[i];
    auto author = user_by_id.find(tweet.author_id);
    if (author == user_by_id.end()) continue;
    switch (tweet.kind) {
      case TweetKind::kOriginal:
        keep[i] = 1;
        if (author->second->is_seed()) seed_originals.insert(tweet.id);
        break;
      case TweetKind::kReply:
        keep[i] = tweet.target_user_id &&
                  user_by_id.contains(*tweet.target_user_id);
        break;
      case TweetKind::kRetweet:
        break;
    }
  }
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const TweetRecord& tweet = unique[i];
    if (tweet.kind == TweetKind::kRetweet && user_by_id.contains(tweet.author_id)) {
      keep[i] = tweet.source_tweet_id &&
                seed_originals.contains(*tweet.source_tweet_id);
    }
  }

  std::vector<TweetRecord> retained;
  retained.reserve(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (keep[i]) {
      retained.push_back(std::move(unique[i]));
    } else {
      ++report.tweets_dropped_dangling;
    }
  }
  report.tweets_retained = retained.size();
  report.users_retained = users.size();

  Dataset dataset =
      Dataset::Create(std::move(config), std::move(users), std::move(retained));
  return BuildResult{std::move(dataset), report};
}

IngestResult Ingest(CountryConfig config, std::istream& users,
                    std::istream& tweets, const std::set<std::string>& spam_ids,
                    std::size_t min_retweets) {
  ParseResult<UserRecord> parsed_users = ParseUsers(users);
  ParseResult<TweetRecord> parsed_tweets = ParseTweets(tweets);

  FilterResult filtered =
      FilterActiveRegulars(std::move(parsed_users.records),
                           parsed_tweets.records, spam_ids, min_retweets);
  BuildResult built = BuildDataset(std::move(config), std::move(filtered.users),
                                   std::move(parsed_tweets.records));

  IngestReport report = built.report;
  report.users_read = parsed_users.lines_read;
  report.users_malformed = parsed_users.diagnostics.size();
  report.users_dropped_spam = filtered.dropped_spam;
  report.users_dropped_threshold = filtered.dropped_threshold;
  report.tweets_read = parsed_tweets.lines_read;
  report.tweets_malformed = parsed_tweets.diagnostics.size();
  return IngestResult{std::move(built.dataset), report,
                      std::move(parsed_users.diagnostics),
                      std::move(parsed_tweets.diagnostics)};
}

void WriteUsers(std::ostream& out, std::span<const UserRecord> users) {
  for (const auto& user : users) {
    OrderedJson record;
    record["id"] = user.id;
    record["kind"] = user.is_seed() ? "seed" : "regular";
    if (user.category) record["category"] = *user.category;
    record["followees"] = OrderedJson::array();
    for (const auto& followee : user.followees) {
      record["followees"].push_back(followee);
    }
    out << record.dump() << '\n';
  }
}

void WriteTweets(std::ostream& out, std::span<const TweetRecord> tweets) {
  for (const auto& tweet : tweets) {
    OrderedJson record;
    record["id"] = tweet.id;
    record["author_id"] = tweet.author_id;
    switch (tweet.kind) {
      case TweetKind::kOriginal:
        record["kind"] = "original";
        break;
      case TweetKind::kRetweet:
        record["kind"] = "retweet";
        record["source_tweet_id"] = *tweet.source_tweet_id;
        break;
      case TweetKind::kReply:
        record["kind"] = "reply";
        record["target_user_id"] = *tweet.target_user_id;
        break;
    }
    record["timestamp"] = tweet.timestamp;
    out << record.dump() << '\n';
  }
}

void WriteCountryConfig(std::ostream& out, const CountryConfig& config) {
  OrderedJson doc;
  doc["name"] = config.name;
  doc["categories"] = OrderedJson::array();
  for (const auto& category : config.categories) {
    OrderedJson entry;
    entry["id"] = category.id;
    entry["wing"] = std::string(WingName(category.wing));
    doc["categories"].push_back(std::move(entry));
  }
  doc["minorities"] = OrderedJson::array();
  for (const auto& id : config.minority_user_ids) doc["minorities"].push_back(id);
  out << doc.dump(2) << '\n';
}

}  // namespace viewdiv
