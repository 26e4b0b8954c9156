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

// Brute-force reference for every per-user metric and the seed matrix.
//
// Works from the raw user and tweet records only, re-deriving each metric
// from its definition with string-keyed lookups and full scans. It shares no
// code with metrics.cc or exposure.cc; keep it that way, since its purpose
// is to catch mistakes in those files.

#ifndef VIEWDIV_ORACLE_H_
#define VIEWDIV_ORACLE_H_

#include <cstddef>

#include "viewdiv/metrics.h"
#include "viewdiv/model.h"

namespace viewdiv {

inline constexpr std::size_t kOracleMaxTweets = 10000;

// Throws RefusalError when the dataset has more than kOracleMaxTweets tweets.
MetricsReport OracleMetrics(const Dataset& dataset, double io_margin = 0.15);

}  // namespace viewdiv

#endif  // VIEWDIV_ORACLE_H_
