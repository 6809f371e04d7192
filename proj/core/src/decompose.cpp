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

#include "revtest/decompose.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "revtest/error.hpp"

namespace revtest {
namespace {

std::uint64_t packed_bit(unsigned width, unsigned wire) {
  return std::uint64_t{1} << (width - 1 - wire);
}

unsigned extract_pattern(std::uint64_t packed, unsigned width,
                         const std::vector<unsigned>& support) {
  unsigned pattern = 0;
  for (unsigned w : support)
    pattern = (pattern << 1) |
              static_cast<unsigned>((packed >> (width - 1 - w)) & 1);
  return pattern;
}

void scatter_pattern(unsigned pattern, unsigned width,
                     const std::vector<unsigned>& support, std::uint64_t& bits,
                     std::uint64_t support_mask) {
  bits &= ~support_mask;
  for (std::size_t i = 0; i < support.size(); ++i)
    if ((pattern >> (support.size() - 1 - i)) & 1u)
      bits |= packed_bit(width, support[i]);
}

}  // namespace

Partition partition(const Circuit& c, unsigned max_wires) {
  unsigned max_gate = 0;
  for (const Gate& g : c.gates()) max_gate = std::max(max_gate, g.size());
  if (max_wires < std::max(max_gate, 1u))
    throw Error("partition limit " + std::to_string(max_wires) +
                " is smaller than the largest gate span " +
                std::to_string(max_gate));
  if (max_wires > c.width() || max_wires > 16)
    throw Error("partition limit must be at most min(wires, 16)");

  Partition result;
  std::uint64_t cur_mask = 0;  // wire-index mask
  std::size_t cur_first = 0;
  std::size_t cur_count = 0;

  const auto close = [&]() {
    if (cur_count == 0) return;
    std::vector<unsigned> support;
    for (unsigned w = 0; w < c.width(); ++w)
      if (cur_mask & (std::uint64_t{1} << w)) support.push_back(w);
    std::vector<unsigned> local(c.width(), 0);
    for (std::size_t i = 0; i < support.size(); ++i)
      local[support[i]] = static_cast<unsigned>(i);
    std::vector<Gate> gates;
    gates.reserve(cur_count);
    for (std::size_t gi = cur_first; gi < cur_first + cur_count; ++gi) {
      const Gate& g = c.gate(gi);
      Gate mapped = g;
      mapped.target = static_cast<std::uint8_t>(local[g.target]);
      for (unsigned k = 0; k < g.num_controls; ++k)
        mapped.controls[k] = static_cast<std::uint8_t>(local[g.controls[k]]);
      gates.push_back(mapped);
    }
    Circuit circuit(static_cast<unsigned>(support.size()), std::move(gates));
    result.subs.push_back(SubCircuit{std::move(support), cur_first, cur_count,
                                     std::move(circuit)});
  };

  for (std::size_t gi = 0; gi < c.gate_count(); ++gi) {
    const Gate& g = c.gate(gi);
    std::uint64_t gate_mask = 0;
    for (unsigned pin = 0; pin < g.size(); ++pin)
      gate_mask |= std::uint64_t{1} << g.pin_wire(pin);
    const std::uint64_t merged = cur_mask | gate_mask;
    if (cur_count > 0 &&
        static_cast<unsigned>(std::popcount(merged)) > max_wires) {
      close();
      cur_mask = gate_mask;
      cur_first = gi;
      cur_count = 1;
    } else {
      cur_mask = merged;
      if (cur_count == 0) cur_first = gi;
      ++cur_count;
    }
  }
  close();
  return result;
}

namespace {

// Sub-circuit completeness rows expressed as pattern sets: row r is the
// bitset (over the 2^m patterns) of patterns whose sub-circuit behaviour
// satisfies constraint r.
std::vector<std::vector<std::uint64_t>> pattern_rows(const Circuit& sub,
                                                     FaultModel model) {
  const unsigned m = sub.width();
  const std::size_t patterns = std::size_t{1} << m;
  const std::size_t words = (patterns + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;

  if (model == FaultModel::cell) {
    std::vector<std::uint32_t> offset(sub.gate_count() + 1, 0);
    for (std::size_t g = 0; g < sub.gate_count(); ++g)
      offset[g + 1] = offset[g] + (1u << sub.gate(g).size());
    rows.assign(offset.back(), std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t p = 0; p < patterns; ++p) {
      const LevelTrace t = trace(sub, BitVector(m, p));
      for (std::size_t g = 0; g < sub.gate_count(); ++g) {
        const unsigned a = gate_input_pattern(sub, t, g);
        rows[offset[g] + a][p / 64] |= std::uint64_t{1} << (p % 64);
      }
    }
    return rows;
  }

  // Stuck-at: one row per (level, wire, needed value), needed-1 block first.
  const std::size_t sites = std::size_t{1} * m * (sub.depth() + 1);
  rows.assign(2 * sites, std::vector<std::uint64_t>(words, 0));
  for (std::uint64_t p = 0; p < patterns; ++p) {
    const LevelTrace t = trace(sub, BitVector(m, p));
    for (unsigned level = 0; level <= sub.depth(); ++level)
      for (unsigned wire = 0; wire < m; ++wire) {
        const std::size_t site = std::size_t{1} * level * m + wire;
        const std::size_t row = t.at(level).bit(wire) ? site : sites + site;
        rows[row][p / 64] |= std::uint64_t{1} << (p % 64);
      }
  }
  return rows;
}

bool pattern_in(const std::vector<std::uint64_t>& row, unsigned pattern) {
  return (row[pattern / 64] >> (pattern % 64)) & 1u;
}

}  // namespace

DecompositionResult run_decomposition(const Circuit& c, unsigned max_wires,
                                      FaultModel model,
                                      SolveLimits per_step_limits) {
  DecompositionResult result;
  const Partition parts = partition(c, max_wires);
  const unsigned n = c.width();

  if (parts.subs.empty()) {
    // No gates: stuck-at completeness still needs both values on every
    // wire at level 0; the cell universe is empty.
    if (model != FaultModel::cell)
      result.tests = {BitVector::zeros(n), BitVector::ones(n)};
    return result;
  }

  std::vector<PartialVector> vs;

  for (std::size_t si = 0; si < parts.subs.size(); ++si) {
    const SubCircuit& sub = parts.subs[si];
    const unsigned m = static_cast<unsigned>(sub.support.size());
    const unsigned patterns = 1u << m;
    std::uint64_t support_mask = 0;
    for (unsigned w : sub.support) support_mask |= packed_bit(n, w);

    DecompositionStep step;
    step.sub_index = si;
    step.support = sub.support;
    step.vectors_before = vs.size();
    for (const PartialVector& v : vs) step.before.push_back(v.to_string());

    // Claimants: vectors fully determined on the support contribute their
    // pattern for free; the rest get a claim row over their completions.
    std::vector<unsigned> forced_patterns;
    std::vector<std::size_t> free_claimants;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if ((vs[j].care & support_mask) == support_mask)
        forced_patterns.push_back(
            extract_pattern(vs[j].bits, n, sub.support));
      else
        free_claimants.push_back(j);
    }

    const auto rows_by_pattern = pattern_rows(sub.circuit, model);

    // Columns: fresh pattern columns 0..P-1 (cost 1), then per-claimant
    // completion columns (cost 0).
    struct ClaimColumn {
      std::size_t claimant;  // index into free_claimants
      unsigned pattern;
    };
    std::vector<ClaimColumn> claim_columns;
    for (std::size_t fj = 0; fj < free_claimants.size(); ++fj) {
      const PartialVector& v = vs[free_claimants[fj]];
      const unsigned fixed =
          extract_pattern(v.bits & v.care, n, sub.support);
      const unsigned care_pat =
          extract_pattern(v.care, n, sub.support);
      for (unsigned p = 0; p < patterns; ++p)
        if ((p & care_pat) == fixed) claim_columns.push_back({fj, p});
    }

    CoverProblem problem(patterns + claim_columns.size());
    for (unsigned p = 0; p < patterns; ++p) {
      problem.cost[p] = 1;
      problem.column_key[p] = p;
    }
    for (std::size_t i = 0; i < claim_columns.size(); ++i) {
      problem.cost[patterns + i] = 0;
      problem.column_key[patterns + i] = claim_columns[i].pattern;
      // One completion per claimant: its duplicated columns are mutually
      // exclusive in the solver.
      problem.group[patterns + i] =
          static_cast<std::int32_t>(claim_columns[i].claimant);
    }

    // Completeness rows not already satisfied by forced patterns.
    for (const auto& prow : rows_by_pattern) {
      bool satisfied = false;
      for (unsigned p : forced_patterns)
        if (pattern_in(prow, p)) {
          satisfied = true;
          break;
        }
      if (satisfied) continue;
      const std::size_t r = problem.add_row();
      for (unsigned p = 0; p < patterns; ++p)
        if (pattern_in(prow, p)) problem.set(r, p);
      for (std::size_t i = 0; i < claim_columns.size(); ++i)
        if (pattern_in(prow, claim_columns[i].pattern))
          problem.set(r, patterns + i);
    }
    // One claim row per free claimant.
    for (std::size_t fj = 0; fj < free_claimants.size(); ++fj) {
      const std::size_t r = problem.add_row();
      for (std::size_t i = 0; i < claim_columns.size(); ++i)
        if (claim_columns[i].claimant == fj) problem.set(r, patterns + i);
    }

    const Solution sol = solve_exact(problem, per_step_limits);

    // Each free claimant holds exactly one selected completion column (the
    // columns of a claimant are mutually exclusive in the solver). Two
    // claimants may still hold the same pattern; the coverage only needs
    // the pattern realized once, so keep one holder per contested pattern
    // and re-place the rest on distinct free patterns via augmenting-path
    // matching. Unmatched claimants keep the contested pattern.
    std::vector<unsigned> assigned(free_claimants.size(), patterns);
    for (std::uint32_t col : sol.selected) {
      if (col < patterns) continue;
      const ClaimColumn& cc = claim_columns[col - patterns];
      assigned[cc.claimant] = cc.pattern;
    }
    {
      std::vector<bool> fixed(patterns, false);
      for (unsigned p : forced_patterns) fixed[p] = true;
      std::vector<std::size_t> movers;
      for (std::size_t fj = 0; fj < free_claimants.size(); ++fj) {
        if (assigned[fj] >= patterns)
          throw Error("internal: unsatisfied completion claim");
        if (fixed[assigned[fj]])
          movers.push_back(fj);  // pattern already realized elsewhere
        else
          fixed[assigned[fj]] = true;  // first holder keeps it
      }
      std::vector<std::size_t> owner(patterns, SIZE_MAX);
      std::vector<unsigned> epoch(patterns, 0);
      unsigned pass = 0;
      const auto options = [&](std::size_t fj, auto&& visit) {
        const PartialVector& v = vs[free_claimants[fj]];
        const unsigned fixed_bits =
            extract_pattern(v.bits & v.care, n, sub.support);
        const unsigned care_pat = extract_pattern(v.care, n, sub.support);
        for (unsigned q = 0; q < patterns; ++q)
          if ((q & care_pat) == fixed_bits && !fixed[q])
            if (!visit(q)) return;
      };
      const std::function<bool(std::size_t)> augment =
          [&](std::size_t fj) -> bool {
        bool placed = false;
        options(fj, [&](unsigned q) {
          if (epoch[q] == pass) return true;
          epoch[q] = pass;
          if (owner[q] == SIZE_MAX || augment(owner[q])) {
            owner[q] = fj;
            placed = true;
            return false;
          }
          return true;
        });
        return placed;
      };
      for (std::size_t fj : movers) {
        ++pass;
        augment(fj);
      }
      for (unsigned q = 0; q < patterns; ++q)
        if (owner[q] != SIZE_MAX) assigned[owner[q]] = q;
    }

    // Step 6: write completions back; collect fresh vectors.
    for (std::size_t fj = 0; fj < free_claimants.size(); ++fj) {
      if (assigned[fj] >= patterns)
        throw Error("internal: unsatisfied completion claim");
      PartialVector& v = vs[free_claimants[fj]];
      scatter_pattern(assigned[fj], n, sub.support, v.bits, support_mask);
      v.care |= support_mask;
      step.completions.emplace_back(free_claimants[fj], assigned[fj]);
    }
    for (std::uint32_t col : sol.selected) {
      if (col >= patterns) continue;
      PartialVector fresh;
      fresh.width = n;
      fresh.care = support_mask;
      scatter_pattern(col, n, sub.support, fresh.bits, support_mask);
      vs.push_back(fresh);
      ++step.new_vectors;
    }

    // Step 7: zero remaining don't cares on the support, then propagate
    // the support bits through the sub-circuit.
    for (PartialVector& v : vs) {
      v.care |= support_mask;
      const unsigned in_pat = extract_pattern(v.bits, n, sub.support);
      const unsigned out_pat = static_cast<unsigned>(
          simulate(sub.circuit, BitVector(m, in_pat)).value());
      scatter_pattern(out_pat, n, sub.support, v.bits, support_mask);
    }

    for (const PartialVector& v : vs) step.after.push_back(v.to_string());
    result.steps.push_back(std::move(step));
  }

  // Wires no gate touches keep their input value to the output; stuck-at
  // completeness needs them driven both ways.
  if (model != FaultModel::cell) {
    std::uint64_t touched = 0;
    for (const SubCircuit& sub : parts.subs)
      for (unsigned w : sub.support) touched |= packed_bit(n, w);
    const std::uint64_t untouched = ~touched & BitVector::mask_for(n);
    if (untouched) {
      vs[0].bits |= untouched & ~vs[0].care;
      for (PartialVector& v : vs) v.care |= untouched;
    }
  }

  // Steps 9 and 10: zero-fill and map through the circuit inverse.
  for (const PartialVector& v : vs) {
    const BitVector out(n, v.bits);  // X already zero outside care
    const BitVector in = simulate_inverse(c, out);
    if (std::find(result.tests.begin(), result.tests.end(), in) ==
        result.tests.end())
      result.tests.push_back(in);
  }

  if (model == FaultModel::cell) {
    const CellReport report = is_complete_cell(c, result.tests);
    if (!report.complete)
      throw Error("internal: decomposition missed " +
                  std::to_string(report.uncovered.size()) +
                  " cell requirements, first gate " +
                  std::to_string(report.uncovered[0].gate) + " pattern " +
                  std::to_string(report.uncovered[0].pattern));
  } else {
    const StuckAtReport report = is_complete_stuck_at(c, result.tests);
    if (!report.complete)
      throw Error("internal: decomposition missed " +
                  std::to_string(report.uncovered.size()) +
                  " stuck-at sites, first level " +
                  std::to_string(report.uncovered[0].level) + " wire " +
                  std::to_string(report.uncovered[0].wire) + " value " +
                  std::to_string(report.uncovered[0].value));
  }
  return result;
}

}  // namespace revtest
