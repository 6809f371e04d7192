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

#include <array>
#include <cstdint>

#include "revtest/circuit.hpp"
#include "revtest/completeness.hpp"

namespace revtest {

/// The enumerative construction: vectors 0 .. 2^{n-1}, i.e. 2^{n-1}+1
/// distinct vectors. Any such set is stuck-at complete for any circuit of
/// the width. Guarded to n <= 20.
TestSet gen_enumerative(const Circuit& c);

/// The depth-driven construction: the all-0s and all-1s vectors plus, for
/// every level i, the vector that drives level i to the bitwise complement
/// of what the all-0s vector produces there. At most d+2 vectors after
/// deduplication (all-0s and all-1s stay first); always stuck-at complete.
TestSet gen_inverse_complement(const Circuit& c);

enum class GreedyMode { automatic, exact, randomized };

/// Greedy cover generation. Exact mode scores every input vector per step
/// (n <= 16; larger widths fall back to randomized) and, for the stuck-at
/// model, checks the guarantees that each step covers at least half of the
/// remaining pin faults and that the final size stays within
/// floor(log2(n + sum k_i)) + 2. Randomized mode scores a 4096-vector pool
/// per step plus one vector backsolved from the first uncovered fault, so
/// every step makes progress. `seed` only affects randomized mode.
TestSet gen_greedy(const Circuit& c, FaultModel model,
                   GreedyMode mode = GreedyMode::automatic,
                   std::uint64_t seed = 0);

/// For C-NOT-only (linear) circuits: the all-0s vector and the n weight-1
/// vectors, which form a complete set for every linear circuit of the
/// width. Throws Error if the circuit contains a NOT or Toffoli gate.
TestSet gen_linear(const Circuit& c);

/// Cell-model construction: start from the all-0s vector, then repeatedly
/// pick the first unmet (gate, pattern) requirement, fix that pattern at
/// the gate's input level with the free wires zeroed, and backsolve to the
/// inputs. Complete with at most (sum 2^{k_i}) - l + 1 vectors.
TestSet gen_cell_backsolve(const Circuit& c);

/// Size parameters of a circuit, sufficient for every bound formula.
struct CircuitParams {
  unsigned wires = 0;
  unsigned depth = 0;
  std::uint64_t gate_count = 0;
  std::array<std::uint64_t, 4> gates_of_size{};  // index k = 1..3

  static CircuitParams of(const Circuit& c);
  std::uint64_t total_gate_inputs() const;
  unsigned max_gate_size() const;
};

/// Upper bounds on minimal test set size.
///
/// Stuck-at: bound_a = 2^{n-1}+1, bound_b = d+2,
/// bound_c = floor(log2(n + sum k_i)) + 2.
/// Cell: bound_a = 2^n - 2^{n-k_1} + 1 (k_1 the largest gate size),
/// bound_b = (sum 2^{k_i}) - l + 1, bound_c = sum over i of
/// ceil(2^{k_i} / i) with sizes sorted descending. iterated_bound counts
/// the steps of the per-step guarantee "a vector covering at least
/// l - floor(sum over covered f of 2^{-k(f)}) new faults exists" until no
/// faults remain; expected_bound is the closed-form estimate
/// log2((2^{k+1}/(2^k-1)) l + 1) / (k - log2(2^k-1)) evaluated with the
/// largest gate size. All integer bounds saturate at uint64 max and are
/// clamped to at least 1.
struct BoundReport {
  FaultModel model = FaultModel::stuck_at_level;
  CircuitParams params;
  std::uint64_t bound_a = 0;
  std::uint64_t bound_b = 0;
  std::uint64_t bound_c = 0;
  std::uint64_t iterated_bound = 0;  // cell model only
  double expected_bound = 0.0;       // cell model only
};

BoundReport bounds(const CircuitParams& params, FaultModel model);
BoundReport bounds(const Circuit& c, FaultModel model);

}  // namespace revtest
