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

#include "revtest/completeness.hpp"

#include <bit>

#include "revtest/error.hpp"

namespace revtest {

StuckAtReport is_complete_stuck_at(const Circuit& c, const TestSet& tests) {
  const std::uint64_t full = BitVector::mask_for(c.width());
  std::vector<std::uint64_t> ones(c.depth() + 1, 0);
  std::vector<std::uint64_t> zeros(c.depth() + 1, 0);

  const auto& order = c.gates_by_level();
  for (const BitVector& t : tests) {
    if (t.width() != c.width())
      throw Error("test vector width does not match circuit width");
    std::uint64_t state = t.value();
    ones[0] |= state;
    zeros[0] |= ~state & full;
    for (unsigned level = 1; level <= c.depth(); ++level) {
      for (std::uint32_t i = c.level_begin(level), end = c.level_end(level);
           i < end; ++i)
        state = c.apply_gate(order[i], state);
      ones[level] |= state;
      zeros[level] |= ~state & full;
    }
  }

  StuckAtReport report;
  for (unsigned level = 0; level <= c.depth(); ++level) {
    if (ones[level] == full && zeros[level] == full) continue;
    for (unsigned wire = 0; wire < c.width(); ++wire) {
      const std::uint64_t m = std::uint64_t{1} << (c.width() - 1 - wire);
      if (!(zeros[level] & m)) report.uncovered.push_back({level, wire, false});
      if (!(ones[level] & m)) report.uncovered.push_back({level, wire, true});
    }
  }
  report.complete = report.uncovered.empty();
  return report;
}

CellReport is_complete_cell(const Circuit& c, const TestSet& tests) {
  std::vector<std::uint32_t> offset(c.gate_count() + 1, 0);
  for (std::size_t g = 0; g < c.gate_count(); ++g)
    offset[g + 1] = offset[g] + (1u << c.gate(g).size());
  std::vector<bool> seen(offset.back(), false);

  const unsigned n = c.width();
  const auto& order = c.gates_by_level();
  for (const BitVector& t : tests) {
    if (t.width() != n)
      throw Error("test vector width does not match circuit width");
    std::uint64_t state = t.value();
    for (unsigned level = 1; level <= c.depth(); ++level) {
      for (std::uint32_t i = c.level_begin(level), end = c.level_end(level);
           i < end; ++i) {
        const std::uint32_t gi = order[i];
        const Gate& g = c.gate(gi);
        unsigned pattern = 0;
        for (unsigned pin = 0; pin < g.size(); ++pin)
          pattern = (pattern << 1) |
                    static_cast<unsigned>((state >> (n - 1 - g.pin_wire(pin))) & 1);
        seen[offset[gi] + pattern] = true;
        state = c.apply_gate(gi, state);
      }
    }
  }

  CellReport report;
  for (unsigned g = 0; g < c.gate_count(); ++g)
    for (unsigned a = 0; a < (1u << c.gate(g).size()); ++a)
      if (!seen[offset[g] + a]) report.uncovered.push_back({g, a});
  report.complete = report.uncovered.empty();
  return report;
}

bool is_complete(const Circuit& c, const TestSet& tests, FaultModel model) {
  if (model == FaultModel::cell) return is_complete_cell(c, tests).complete;
  return is_complete_stuck_at(c, tests).complete;
}

std::size_t CoverageMatrix::row_sum(std::size_t r) const {
  std::size_t sum = 0;
  for (std::uint64_t word : row(r)) sum += std::popcount(word);
  return sum;
}

CoverageMatrix build_matrix(const Circuit& c, FaultModel model,
                            TestSet candidates) {
  CoverageMatrix m;
  m.universe = enumerate_faults(c, model);
  m.candidates = std::move(candidates);
  m.words_per_row = (m.candidates.size() + 63) / 64;
  m.bits.assign(m.rows() * m.words_per_row, 0);

  for (std::size_t col = 0; col < m.candidates.size(); ++col) {
    const LevelTrace t = trace(c, m.candidates[col]);
    const std::uint64_t word_bit = std::uint64_t{1} << (col % 64);
    const std::size_t word_idx = col / 64;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (detects(c, t, m.universe.faults[r]))
        m.bits[r * m.words_per_row + word_idx] |= word_bit;
  }
  return m;
}

CoverageMatrix build_matrix_full(const Circuit& c, FaultModel model) {
  if (c.width() > 20)
    throw Error(
        "full candidate space requested for width " +
        std::to_string(c.width()) +
        "; explicit candidates are required beyond 20 wires");
  TestSet candidates;
  candidates.reserve(std::size_t{1} << c.width());
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << c.width()); ++i)
    candidates.push_back(BitVector(c.width(), i));
  return build_matrix(c, model, std::move(candidates));
}

}  // namespace revtest
