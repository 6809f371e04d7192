// Copyright 2026 The revtest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "revtest/catalog.hpp"
#include "revtest/cover.hpp"
#include "revtest/decompose.hpp"
#include "revtest/faults.hpp"
#include "revtest/generate.hpp"
#include "revtest/random.hpp"

using namespace revtest;

namespace {

Circuit bench_circuit(unsigned wires, unsigned length, std::uint64_t seed) {
  Rng rng(seed);
  return random_circuit(wires, length, rng);
}

void BM_Simulate(benchmark::State& state) {
  const Circuit c = bench_circuit(32, static_cast<unsigned>(state.range(0)), 1);
  const BitVector v = BitVector::zeros(32);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(c, v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Trace(benchmark::State& state) {
  const Circuit c = bench_circuit(32, static_cast<unsigned>(state.range(0)), 2);
  const BitVector v = BitVector::ones(32);
  for (auto _ : state)
    benchmark::DoNotOptimize(trace(c, v));
}
BENCHMARK(BM_Trace)->Arg(100)->Arg(1000);

void BM_InjectMultipleFault(benchmark::State& state) {
  const Circuit c = bench_circuit(24, 400, 3);
  const MultipleFault mf{
      StuckAtFault{LevelSite{1, 3}, true},
      StuckAtFault{PinSite{10, 0}, false},
      StuckAtFault{OutputSite{5}, true},
  };
  const BitVector v = BitVector::zeros(24);
  for (auto _ : state)
    benchmark::DoNotOptimize(inject_and_simulate(c, v, mf));
}
BENCHMARK(BM_InjectMultipleFault);

void BM_CompletenessCheck(benchmark::State& state) {
  const Circuit c = bench_circuit(32, static_cast<unsigned>(state.range(0)), 4);
  const TestSet t = gen_inverse_complement(c);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_complete_stuck_at(c, t));
}
BENCHMARK(BM_CompletenessCheck)->Arg(400)->Arg(1600);

void BM_MinTestSet(benchmark::State& state) {
  const Circuit c =
      bench_circuit(static_cast<unsigned>(state.range(0)), 40, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(min_test_set(c, FaultModel::stuck_at_level));
}
BENCHMARK(BM_MinTestSet)->Arg(4)->Arg(6)->Arg(8);

void BM_Decomposition(benchmark::State& state) {
  const Circuit c = bench_circuit(16, static_cast<unsigned>(state.range(0)), 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_decomposition(c, 8, FaultModel::stuck_at_level));
}
BENCHMARK(BM_Decomposition)->Arg(100)->Arg(400);

void BM_Enumerate3Wire(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_optimal_3wire());
}
BENCHMARK(BM_Enumerate3Wire);

}  // namespace

BENCHMARK_MAIN();
