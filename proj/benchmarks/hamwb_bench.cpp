// Copyright 2026 The hamwb Authors
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

#include "hamwb/campaign.hpp"
#include "hamwb/conditions.hpp"
#include "hamwb/connectivity.hpp"
#include "hamwb/generators.hpp"
#include "hamwb/hamilton.hpp"
#include "hamwb/insertion.hpp"
#include "hamwb/manifest.hpp"

namespace {

using namespace hamwb;

void BM_HamiltonCycleTightness(benchmark::State& state) {
  const Digraph d = tightness_example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hamilton_cycle(d));
}
BENCHMARK(BM_HamiltonCycleTightness)->DenseRange(9, 15, 2);

void BM_HamiltonCycleRandom(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hamilton_cycle(d));
}
BENCHMARK(BM_HamiltonCycleRandom)->DenseRange(8, 16, 4);

void BM_LongestCycle(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(longest_cycle(d));
}
BENCHMARK(BM_LongestCycle)->DenseRange(8, 14, 3);

void BM_PermutationOracle(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permutation_oracle(d, OracleTarget::cycle));
  }
}
BENCHMARK(BM_PermutationOracle)->DenseRange(5, 8, 1);

void BM_Conjecture1Check(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.7, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_conjecture1_hypothesis(d));
}
BENCHMARK(BM_Conjecture1Check)->RangeMultiplier(2)->Range(8, 32);

void BM_StrongConnectivity(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(strongly_k_connected(d, 2));
}
BENCHMARK(BM_StrongConnectivity)->RangeMultiplier(2)->Range(8, 32);

void BM_ExtendCycle(benchmark::State& state) {
  const Digraph d = tightness_example(static_cast<int>(state.range(0)));
  const VertexSequence start{SequenceKind::cycle, {0, (static_cast<int>(state.range(0)) - 1) / 2}};
  for (auto _ : state) benchmark::DoNotOptimize(extend_cycle(d, start));
}
BENCHMARK(BM_ExtendCycle)->DenseRange(9, 13, 2);

void BM_ExhaustiveSweepN4(benchmark::State& state) {
  const RunManifest m = parse_manifest(
      "campaign = verify-conjecture1\ngenerator = exhaustive\nn = 4\n");
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(m, 1));
}
BENCHMARK(BM_ExhaustiveSweepN4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
