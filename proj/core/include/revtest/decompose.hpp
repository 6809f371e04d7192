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
#include <string>
#include <vector>

#include "revtest/circuit.hpp"
#include "revtest/completeness.hpp"
#include "revtest/cover.hpp"

namespace revtest {

/// A tri-valued (0/1/X) test vector; bits outside the care mask are don't
/// cares still to be bound by a later solver choice or the final zero fill.
/// Both masks use the packed bit positions of BitVector.
struct PartialVector {
  unsigned width = 0;
  std::uint64_t care = 0;
  std::uint64_t bits = 0;  // zero outside care

  std::string to_string() const {
    std::string s(width, 'X');
    for (unsigned w = 0; w < width; ++w) {
      const std::uint64_t m = std::uint64_t{1} << (width - 1 - w);
      if (care & m) s[w] = (bits & m) ? '1' : '0';
    }
    return s;
  }
};

/// A contiguous gate range acting on at most m wires, re-indexed onto its
/// support (ascending global wire order).
struct SubCircuit {
  std::vector<unsigned> support;
  std::size_t first_gate = 0;
  std::size_t gate_count = 0;
  Circuit circuit;
};

struct Partition {
  std::vector<SubCircuit> subs;
};

/// Greedy scan partition: a gate joins the current sub-circuit iff the
/// union of supports stays within `max_wires`, else the sub-circuit closes
/// and a new one starts. Requires max_gate_size <= max_wires <= min(n, 16).
Partition partition(const Circuit& c, unsigned max_wires);

/// Per-sub-circuit record of one decomposition step, for reporting and for
/// the structural tests.
struct DecompositionStep {
  std::size_t sub_index = 0;
  std::vector<unsigned> support;
  std::size_t vectors_before = 0;
  std::size_t new_vectors = 0;
  /// Completion pattern chosen for each claimant that still had free bits
  /// on the support, as (vector index, pattern).
  std::vector<std::pair<std::size_t, unsigned>> completions;
  /// Partial vectors entering the step and after the step's propagation,
  /// X for don't care.
  std::vector<std::string> before;
  std::vector<std::string> after;
};

struct DecompositionResult {
  TestSet tests;
  std::vector<DecompositionStep> steps;
};

/// Generates a complete test set by solving one small cover problem per
/// sub-circuit over the <= 2^m patterns on its support. Vectors already in
/// the working set claim a compatible completion through cost-0 columns
/// (one claim constraint each, duplicated per claimant, distinct claimants
/// receiving distinct patterns); new patterns cost 1. Chosen completions
/// are written back, the sub-circuit is applied to propagate the set, and
/// at the end remaining don't cares are zero-filled and the whole set is
/// mapped through the full circuit inverse. The result always passes the
/// full-circuit completeness checker for the model.
DecompositionResult run_decomposition(const Circuit& c, unsigned max_wires,
                                      FaultModel model,
                                      SolveLimits per_step_limits = {});

}  // namespace revtest
