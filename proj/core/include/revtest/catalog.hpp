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
#include <vector>

#include "revtest/circuit.hpp"
#include "revtest/cover.hpp"

namespace revtest {

/// All 8! = 40320 permutations of the 3-bit space, reached by breadth-first
/// search from the identity over the 12 possible 3-wire NCT gate
/// placements. Each entry records the first-reached (hence optimal) NCT
/// length and a witness predecessor, keyed by the permutation's Lehmer
/// rank.
class OptimalCatalog {
 public:
  static constexpr std::uint32_t kFunctions = 40320;
  static constexpr unsigned kGateUniverse = 12;

  struct Entry {
    std::uint8_t length = 0;
    std::int8_t via_gate = -1;    // last gate of the witness circuit
    std::int32_t parent = -1;     // rank before that gate
  };

  const Entry& entry(std::uint32_t rank) const { return entries_[rank]; }

  /// Count of functions per optimal length 0..8.
  std::array<std::uint32_t, 9> length_histogram() const;

  unsigned max_length() const;

  /// The witness optimal circuit computing the permutation of `rank`.
  Circuit circuit_for(std::uint32_t rank) const;

  /// Permutation as images of 0..7.
  static std::array<std::uint8_t, 8> perm_of_rank(std::uint32_t rank);
  static std::uint32_t rank_of_perm(const std::array<std::uint8_t, 8>& perm);

  /// The 12 gate placements, in the decode order shared with the random
  /// circuit generator.
  static Gate universe_gate(unsigned index);

  /// Image table of one universe gate over the packed 3-bit vectors.
  static std::array<std::uint8_t, 8> gate_images(unsigned index);

 private:
  friend OptimalCatalog enumerate_optimal_3wire();
  std::vector<Entry> entries_;
};

/// Runs the breadth-first enumeration; every permutation is reachable.
OptimalCatalog enumerate_optimal_3wire();

/// Minimal stuck-at test size of one witness optimal circuit per function,
/// tabulated against optimal circuit length. Cell [s][l] counts functions
/// of optimal length l whose witness needed s test vectors; the column
/// totals are independent of the witness choice, the split across sizes is
/// not.
struct TestSizeDistribution {
  std::array<std::array<std::uint32_t, 9>, 9> count{};
  unsigned max_test_size = 0;

  std::array<std::uint32_t, 9> length_totals() const;
};

TestSizeDistribution test_size_distribution(const OptimalCatalog& catalog);

/// Deterministic search for a 3-wire circuit whose minimal stuck-at test
/// set has 5 vectors, the worst possible on 3 wires. Concatenates
/// blocks C C^{-1} built from catalog witnesses that park each 4-subset of
/// the input space on a constant wire, solving after each block until the
/// optimum reaches 5.
Circuit find_suboptimal_3wire(const OptimalCatalog& catalog);

}  // namespace revtest
