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

#include "revtest/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "revtest/error.hpp"

namespace revtest {

std::string to_string(GenStrategy s) {
  switch (s) {
    case GenStrategy::decomposition: return "decomp";
    case GenStrategy::inverse_complement: return "invcomp";
    case GenStrategy::greedy: return "greedy";
    case GenStrategy::enumerative: return "enum";
    case GenStrategy::linear: return "linear";
    case GenStrategy::cell_backsolve: return "cellback";
  }
  return "?";
}

std::string to_string(FaultModel m) {
  switch (m) {
    case FaultModel::stuck_at_level: return "sa";
    case FaultModel::stuck_at_pin: return "sa-pin";
    case FaultModel::cell: return "cell";
  }
  return "?";
}

TestSet generate_by_strategy(const Circuit& c, GenStrategy strategy,
                             FaultModel model, unsigned max_wires,
                             std::uint64_t seed, const SolveLimits& limits) {
  switch (strategy) {
    case GenStrategy::decomposition:
      return run_decomposition(c, max_wires, model, limits).tests;
    case GenStrategy::inverse_complement:
      return gen_inverse_complement(c);
    case GenStrategy::greedy:
      return gen_greedy(c, model, GreedyMode::automatic, seed);
    case GenStrategy::enumerative:
      return gen_enumerative(c);
    case GenStrategy::linear:
      return gen_linear(c);
    case GenStrategy::cell_backsolve:
      return gen_cell_backsolve(c);
  }
  throw Error("unknown generation strategy");
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  struct Task {
    unsigned wires, length;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  const Rng master(config.seed);
  std::uint64_t point = 0;
  for (unsigned n : config.wires)
    for (unsigned length : config.lengths) {
      Rng point_rng = master.split(point++);
      for (unsigned i = 0; i < config.circuits_per_point; ++i)
        tasks.push_back({n, length, point_rng.next()});
    }

  std::vector<BenchRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      Rng rng(task.seed);
      const Circuit c =
          random_circuit(task.wires, task.length, rng, config.library);

      const auto start = std::chrono::steady_clock::now();
      TestSet tests = generate_by_strategy(
          c, config.strategy, config.model,
          std::min(config.max_wires, task.wires), task.seed, config.per_solve);
      if (!is_complete(c, tests, config.model))
        throw Error("internal: benchmark produced an incomplete test set");
      const unsigned pre = static_cast<unsigned>(tests.size());
      if (config.compact_results)
        tests = compact(c, tests, config.model, config.per_solve);
      const auto stop = std::chrono::steady_clock::now();
      if (!is_complete(c, tests, config.model))
        throw Error("internal: compaction broke completeness");

      BenchRecord& r = records[i];
      r.wires = task.wires;
      r.length = task.length;
      r.seed = task.seed;
      r.strategy = config.strategy;
      r.model = config.model;
      r.size_pre = pre;
      r.size_post = static_cast<unsigned>(tests.size());
      r.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      const BoundReport b = bounds(c, config.model);
      r.bound = config.model == FaultModel::cell ? b.iterated_bound : b.bound_c;
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto guarded = [&]() {
      try {
        worker();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(guarded);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "n,length,seed,strategy,model,size_pre,size_post,wall_ms,bound\n";
  for (const BenchRecord& r : records)
    out << r.wires << ',' << r.length << ',' << r.seed << ','
        << to_string(r.strategy) << ',' << to_string(r.model) << ','
        << r.size_pre << ',' << r.size_post << ',' << r.wall_ms << ','
        << r.bound << '\n';
}

}  // namespace revtest
