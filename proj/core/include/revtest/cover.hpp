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
#include <vector>

#include "revtest/completeness.hpp"

namespace revtest {

/// A binary set-cover instance: every row must be covered by at least one
/// selected column, minimizing the summed column costs. Costs are 0 or 1;
/// cost-0 columns model completions of already-committed test vectors in
/// the decomposition flow, cost-1 columns model new vectors.
struct CoverProblem {
  std::size_t num_columns = 0;
  std::vector<std::uint8_t> cost;          // per column, 0 or 1
  std::vector<std::uint64_t> column_key;   // deterministic tie-break key
  /// Columns sharing a nonnegative group id are mutually exclusive: at
  /// most one of them may be selected. Used for the per-claimant
  /// completion columns of the decomposition flow, whose duplicates would
  /// otherwise let one vector pretend to take several completions. -1
  /// means unconstrained.
  std::vector<std::int32_t> group;
  std::vector<std::vector<std::uint64_t>> rows;  // bitsets over columns

  explicit CoverProblem(std::size_t columns = 0) { reset(columns); }

  void reset(std::size_t columns) {
    num_columns = columns;
    cost.assign(columns, 1);
    column_key.resize(columns);
    for (std::size_t i = 0; i < columns; ++i) column_key[i] = i;
    group.assign(columns, -1);
    rows.clear();
  }

  std::size_t words_per_row() const { return (num_columns + 63) / 64; }

  std::size_t add_row() {
    rows.emplace_back(words_per_row(), 0);
    return rows.size() - 1;
  }

  void set(std::size_t row, std::size_t col) {
    rows[row][col / 64] |= std::uint64_t{1} << (col % 64);
  }

  bool test(std::size_t row, std::size_t col) const {
    return (rows[row][col / 64] >> (col % 64)) & 1u;
  }
};

/// Search budgets. Zero means unlimited. Exceeding a budget stops the
/// search and returns the best incumbent with `optimal` cleared. Note that
/// a wall-clock budget makes results machine-dependent; node budgets and
/// unlimited runs are bit-reproducible.
struct SolveLimits {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

struct Solution {
  std::vector<std::uint32_t> selected;  // column indices, ascending
  unsigned objective = 0;               // summed cost of selected columns
  bool optimal = false;
  std::uint64_t nodes = 0;
};

/// Deterministic branch-and-bound set cover. Branches on the uncovered row
/// with the fewest live columns; children are ordered by (cost, coverage of
/// still-uncovered rows descending, column key, index). The lower bound
/// packs pairwise column-disjoint rows whose remaining coverers all cost 1.
/// Preprocessing removes duplicate and dominated rows, selects columns that
/// are the sole coverer of some row, and drops dominated columns on small
/// instances. Throws InfeasibleError if some row has no covering column.
Solution solve_exact(const CoverProblem& p, SolveLimits limits = {});

/// Builds the full 2^n-candidate cover problem for the circuit and solves
/// it exactly: the minimal complete test set. Requires n <= 16.
TestSet min_test_set(const Circuit& c, FaultModel model,
                     SolveLimits limits = {});

/// Minimum-cardinality complete subset of `tests` (test compaction).
/// Throws Error if `tests` is not complete for the model.
TestSet compact(const Circuit& c, const TestSet& tests, FaultModel model,
                SolveLimits limits = {});

/// Cover problem whose columns are the given candidates (cost 1 each) and
/// whose rows are the model's fault constraints. Shared by min_test_set,
/// compact and the CLI.
CoverProblem cover_problem_from_matrix(const CoverageMatrix& m);

}  // namespace revtest
