// Copyright 2026 The qindex Authors
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

// Serial reference against the OpenMP kernels. Arguments are (n, p, q) and,
// for the parallel variants, the worker count as the last argument.

#include <benchmark/benchmark.h>

#include "qindex/enumerate.hpp"
#include "qindex/verify.hpp"

namespace {

using namespace qindex;

EnumerationTask task_from(const benchmark::State& state) {
  EnumerationTask task{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                       static_cast<int>(state.range(2))};
  task.max_n = 8;
  return task;
}

void BM_CertifySerial(benchmark::State& state) {
  const auto task = task_from(state);
  std::int64_t candidates = 0;
  for (auto _ : state) {
    const auto report = certify_minimum_serial(task);
    candidates = report.counts.subsets;
    benchmark::DoNotOptimize(report.min_q);
  }
  state.counters["subsets"] = static_cast<double>(candidates);
  state.SetItemsProcessed(state.iterations() * candidates);
}

void BM_CertifyParallel(benchmark::State& state) {
  auto task = task_from(state);
  task.workers = static_cast<int>(state.range(3));
  std::int64_t candidates = 0;
  for (auto _ : state) {
    const auto report = certify_minimum(task);
    candidates = report.counts.subsets;
    benchmark::DoNotOptimize(report.min_q);
  }
  state.counters["subsets"] = static_cast<double>(candidates);
  state.SetItemsProcessed(state.iterations() * candidates);
}

const Grid kBenchGrid{3, 16, 5, 5};

void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_grid_serial("thm1", kBenchGrid, {}).size());
}

void BM_GridParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_grid("thm1", kBenchGrid, {}, workers).size());
}

}  // namespace

BENCHMARK(BM_CertifySerial)->Args({6, 3, 1})->Args({7, 3, 1})->Args({7, 2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)
    ->ArgsProduct({{7}, {3}, {1}, {1, 2, 4, 8}})
    ->Args({7, 2, 2, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
