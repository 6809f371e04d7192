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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "revtest/cover.hpp"
#include "revtest/decompose.hpp"
#include "revtest/generate.hpp"
#include "revtest/random.hpp"

namespace revtest {

enum class GenStrategy {
  decomposition,
  inverse_complement,
  greedy,
  enumerative,
  linear,
  cell_backsolve,
};

std::string to_string(GenStrategy s);
std::string to_string(FaultModel m);

/// One benchmark sweep: for every (wires, length) point, `circuits_per_point`
/// random circuits are generated from per-record seeds derived from `seed`,
/// a test set is produced with the chosen strategy, optionally compacted,
/// verified complete, and recorded. Records are deterministic for a fixed
/// config apart from the wall-clock column.
struct BenchConfig {
  std::vector<unsigned> wires{8, 16, 24, 32};
  std::vector<unsigned> lengths{100, 200, 400, 800, 1600};
  unsigned circuits_per_point = 20;
  unsigned max_wires = 8;  // decomposition sub-circuit limit
  FaultModel model = FaultModel::stuck_at_level;
  GenStrategy strategy = GenStrategy::decomposition;
  GateLibrary library = GateLibrary::nct;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool compact_results = true;
  SolveLimits per_solve{};
};

struct BenchRecord {
  unsigned wires = 0;
  unsigned length = 0;
  std::uint64_t seed = 0;  // regenerates this record's circuit
  GenStrategy strategy = GenStrategy::decomposition;
  FaultModel model = FaultModel::stuck_at_level;
  unsigned size_pre = 0;
  unsigned size_post = 0;
  double wall_ms = 0.0;
  std::uint64_t bound = 0;  // staircase value for this circuit
};

std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// CSV with header n,length,seed,strategy,model,size_pre,size_post,wall_ms,bound.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Generates one record's test set; shared by run_bench and the CLI verbs.
TestSet generate_by_strategy(const Circuit& c, GenStrategy strategy,
                             FaultModel model, unsigned max_wires,
                             std::uint64_t seed, const SolveLimits& limits);

}  // namespace revtest
