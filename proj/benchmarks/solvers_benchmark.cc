// Copyright 2026 The vrcell Authors.
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "vrcell/scenario.h"
#include "vrcell/solvers.h"
#include "vrcell/subproblem.h"

namespace vrcell {
namespace {

Scenario MakeScenario(int users, int cells, int views) {
  ScenarioConfig config;
  config.topology.n_users = users;
  config.topology.n_cells = cells;
  config.n_views = views;
  return AssembleScenario(config, 1);
}

void BM_CellSubproblem(benchmark::State& state) {
  const Scenario s = MakeScenario(static_cast<int>(state.range(0)), 10, 5);
  std::vector<int> users(s.instance.n_users);
  for (int i = 0; i < s.instance.n_users; ++i) users[i] = i;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveCellSubproblem(
        s.instance, 0, users, static_cast<double>(s.instance.rb_budget[0])));
  }
}
BENCHMARK(BM_CellSubproblem)->Arg(50)->Arg(500);

void BM_Sinr(benchmark::State& state) {
  const Scenario s = MakeScenario(500, 100, 20);
  for (auto _ : state) benchmark::DoNotOptimize(SolveSinr(s.instance));
}
BENCHMARK(BM_Sinr)->Unit(benchmark::kMillisecond);

void BM_Eva(benchmark::State& state) {
  const Scenario s = MakeScenario(500, 100, 20);
  for (auto _ : state) benchmark::DoNotOptimize(SolveEva(s.instance));
}
BENCHMARK(BM_Eva)->Unit(benchmark::kMillisecond);

void BM_Elva(benchmark::State& state) {
  const Scenario s = MakeScenario(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(1)),
                                  static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveElva(s.instance));
}
BENCHMARK(BM_Elva)
    ->Args({50, 10, 5})
    ->Args({500, 100, 20})
    ->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const Scenario s = MakeScenario(50, 10, 5);
  BbOptions options;
  options.node_budget = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(SolveBb(s.instance, options));
}
BENCHMARK(BM_BranchAndBound)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vrcell

BENCHMARK_MAIN();
