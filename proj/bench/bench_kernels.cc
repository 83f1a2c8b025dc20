// Copyright 2026 The Authors.
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


// Serial reference implementations against the OpenMP kernels. The
// suite benchmarks take the thread count as their argument.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "pavmatch/harness.h"
#include "pavmatch/matching.h"
#include "pavmatch/matroid.h"

namespace pavmatch {
namespace {

// U_{4,12} on {1, ..., 12} in Z29: 495 bases.
Matroid big_uniform() {
  const GroupSpec z29({29});
  std::vector<GroupElement> e;
  for (int i = 1; i <= 12; ++i) e.push_back(z29.element(i));
  return uniform(4, GroundSet(z29, e));
}

// Relaxed-away triples make the exchange scan do real work.
Matroid big_paving() {
  const Matroid u = big_uniform();
  std::vector<IndexSet> bases;
  for (IndexSet b : u.bases()) {
    if (!b.subset_of(IndexSet{0, 1, 2, 3, 4}) && !b.subset_of(IndexSet{5, 6, 7, 8, 9})) {
      bases.push_back(b);
    }
  }
  return build_matroid(u.ground(), bases);
}

void BM_ExchangeScan(benchmark::State& state) {
  const Matroid m = big_paving();
  for (auto _ : state) benchmark::DoNotOptimize(find_exchange_violation(m.bases()));
}
BENCHMARK(BM_ExchangeScan)->Unit(benchmark::kMillisecond);

void BM_ExchangeScanSerial(benchmark::State& state) {
  const Matroid m = big_paving();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::find_exchange_violation(m.bases()));
  }
}
BENCHMARK(BM_ExchangeScanSerial)->Unit(benchmark::kMillisecond);

void BM_IsMatched(benchmark::State& state) {
  const Matroid m = big_paving();
  for (auto _ : state) benchmark::DoNotOptimize(is_matched(m, m).matched);
}
BENCHMARK(BM_IsMatched)->Unit(benchmark::kMillisecond);

void BM_IsMatchedSerial(benchmark::State& state) {
  const Matroid m = big_paving();
  for (auto _ : state) benchmark::DoNotOptimize(reference::is_matched(m, m).matched);
}
BENCHMARK(BM_IsMatchedSerial)->Unit(benchmark::kMillisecond);

void suite_at(benchmark::State& state, const char* id, const SuiteParams& params) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(id, params).pass);
  omp_set_num_threads(saved);
}

void BM_SuiteMatchableUnderPG(benchmark::State& state) {
  suite_at(state, "matchable-under-pG",
           {{"groups", "Z11,Z13"}, {"max_size", "4"}, {"trials", "200"}});
}
void BM_SuitePavingSelfMatch(benchmark::State& state) {
  suite_at(state, "paving-self-match", {{"m_max", "5"}});
}

void thread_counts(benchmark::internal::Benchmark* b) {
  b->Arg(1);
  if (omp_get_num_procs() > 1) b->Arg(omp_get_num_procs());
  b->Unit(benchmark::kMillisecond);
}
BENCHMARK(BM_SuiteMatchableUnderPG)->Apply(thread_counts);
BENCHMARK(BM_SuitePavingSelfMatch)->Apply(thread_counts);

}  // namespace
}  // namespace pavmatch

BENCHMARK_MAIN();
