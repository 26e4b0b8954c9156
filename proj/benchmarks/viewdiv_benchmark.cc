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

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "viewdiv/exposure.h"
#include "viewdiv/ingest.h"
#include "viewdiv/metrics.h"
#include "viewdiv/synth.h"

namespace viewdiv {
namespace {

void BM_NormalizedEntropy(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(state.range(0)));
  for (auto& c : counts) c = rng() % 1000;
  const CategoryHistogram histogram(counts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(NormalizedEntropy(histogram));
  }
}
BENCHMARK(BM_NormalizedEntropy)->Arg(5)->Arg(9);

SynthParams Population(std::int64_t regulars) {
  SynthParams params = Preset("pluralist");
  params.n_regulars = static_cast<std::size_t>(regulars);
  return params;
}

void BM_Generate(benchmark::State& state) {
  const SynthParams params = Population(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Generate(params));
  }
}
BENCHMARK(BM_Generate)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ComputeAll(benchmark::State& state) {
  const Dataset dataset = Generate(Population(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeAll(dataset));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComputeAll)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Ingest(benchmark::State& state) {
  const Dataset dataset = Generate(Population(state.range(0)));
  std::ostringstream config, users, tweets;
  WriteCountryConfig(config, dataset.config());
  WriteUsers(users, dataset.users());
  WriteTweets(tweets, dataset.tweets());
  for (auto _ : state) {
    std::istringstream config_in(config.str());
    std::istringstream users_in(users.str());
    std::istringstream tweets_in(tweets.str());
    benchmark::DoNotOptimize(
        Ingest(ParseCountryConfig(config_in), users_in, tweets_in, {}));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(dataset.num_tweets()));
}
BENCHMARK(BM_Ingest)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace viewdiv

BENCHMARK_MAIN();
