// Copyright 2026 The greennet Authors
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

#include "greennet/branch_and_bound.h"
#include "greennet/generators.h"
#include "greennet/model_builder.h"
#include "greennet/oracle.h"
#include "greennet/simplex.h"

namespace greennet {
namespace {

NetworkInstance RingInstance(int routers) {
  return GenerateRing(routers, {{0, routers / 2, 2.0}, {routers - 1, 1, 1.0}});
}

NetworkInstance RandomInstance(int routers) {
  GenSpec spec;
  spec.shape = Shape::kRandom;
  spec.num_routers = routers;
  spec.seed = 42;
  spec.random_demands = 2;
  spec.extra_edges = 1;
  return Generate(spec);
}

void BM_BuildCorrected(benchmark::State& state) {
  const NetworkInstance inst = RingInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BuildCorrected(inst));
}
BENCHMARK(BM_BuildCorrected)->Arg(4)->Arg(8)->Arg(16);

void BM_LpRelaxation(benchmark::State& state) {
  const MilpModel model =
      BuildCorrected(RingInstance(static_cast<int>(state.range(0)))).model;
  for (auto _ : state) benchmark::DoNotOptimize(SolveLpRelaxation(model));
}
BENCHMARK(BM_LpRelaxation)->Arg(4)->Arg(6)->Arg(8);

void BM_BranchAndBound(benchmark::State& state) {
  const MilpModel model =
      BuildCorrected(RandomInstance(static_cast<int>(state.range(0)))).model;
  SolveConfig config;
  config.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(BranchAndBound(model, config));
}
BENCHMARK(BM_BranchAndBound)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({5, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const NetworkInstance inst = RandomInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(OracleSolve(inst));
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace greennet

BENCHMARK_MAIN();
