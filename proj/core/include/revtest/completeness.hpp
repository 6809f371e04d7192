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
#include <span>
#include <vector>

#include "revtest/circuit.hpp"
#include "revtest/faults.hpp"

namespace revtest {

/// An ordered set of distinct input-side test vectors.
using TestSet = std::vector<BitVector>;

/// A (level, wire) site the test set cannot drive to `value`.
struct StuckAtUncovered {
  unsigned level = 0;
  unsigned wire = 0;
  bool value = false;
  friend bool operator==(const StuckAtUncovered&,
                         const StuckAtUncovered&) = default;
};

struct StuckAtReport {
  bool complete = false;
  std::vector<StuckAtUncovered> uncovered;  // sorted by (level, wire, value)
};

/// A (gate, pattern) requirement no test vector satisfies.
struct CellUncovered {
  unsigned gate = 0;
  unsigned pattern = 0;
  friend bool operator==(const CellUncovered&, const CellUncovered&) = default;
};

struct CellReport {
  bool complete = false;
  std::vector<CellUncovered> uncovered;  // sorted by (gate, pattern)
};

/// Stuck-at completeness: every wire at every level can be set to both 0
/// and 1 by the set. Evaluates by tracing each vector once rather than
/// materializing a matrix, so it stays cheap on long circuits. The same
/// criterion decides completeness for both stuck-at site conventions, and
/// a complete set also detects all multiple stuck-at faults.
StuckAtReport is_complete_stuck_at(const Circuit& c, const TestSet& tests);

/// Cell completeness: every gate's inputs see all 2^k patterns.
CellReport is_complete_cell(const Circuit& c, const TestSet& tests);

/// Model dispatcher; both stuck-at conventions use the stuck-at checker.
bool is_complete(const Circuit& c, const TestSet& tests, FaultModel model);

/// The 0/1 incidence system between fault constraints (rows) and candidate
/// test vectors (columns): row r is covered by column c iff candidates[c]
/// detects universe.faults[r]. Stuck-at rows come in two blocks, the
/// stuck-at-0 rows (site must be driven to 1) for all (level, wire) in
/// order, then the stuck-at-1 rows.
struct CoverageMatrix {
  FaultUniverse universe;
  TestSet candidates;
  std::size_t words_per_row = 0;
  std::vector<std::uint64_t> bits;  // row-major, rows() * words_per_row

  std::size_t rows() const { return universe.faults.size(); }
  std::size_t columns() const { return candidates.size(); }

  bool covered(std::size_t row, std::size_t col) const {
    return (bits[row * words_per_row + col / 64] >> (col % 64)) & 1u;
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits.data() + r * words_per_row, words_per_row};
  }

  std::size_t row_sum(std::size_t r) const;
};

/// Builds the incidence system for an explicit candidate list.
CoverageMatrix build_matrix(const Circuit& c, FaultModel model,
                            TestSet candidates);

/// Builds the incidence system over all 2^n candidates; n <= 20.
CoverageMatrix build_matrix_full(const Circuit& c, FaultModel model);

}  // namespace revtest
