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
#include <string>
#include <variant>
#include <vector>

#include "revtest/circuit.hpp"

namespace revtest {

/// Fault universes supported by the toolkit.
///
/// Two stuck-at site conventions coexist. The pin convention places a site
/// on every gate input and every circuit output, 2(n + sum k_i) faults in
/// total. The level convention places a site on every wire at every level,
/// 2n(d+1) faults; it subsumes the pin sites, and both conventions induce
/// the same notion of test-set completeness. The cell model has one
/// detection requirement per (gate, input pattern) pair, sum 2^{k_i} total.
enum class FaultModel { stuck_at_level, stuck_at_pin, cell };

/// Wire `wire` at level `level` (0 = circuit inputs).
struct LevelSite {
  unsigned level = 0;
  unsigned wire = 0;
  friend bool operator==(const LevelSite&, const LevelSite&) = default;
};

/// Input pin `pin` of gate `gate`; controls first, target last.
struct PinSite {
  unsigned gate = 0;
  unsigned pin = 0;
  friend bool operator==(const PinSite&, const PinSite&) = default;
};

/// Circuit output on wire `wire`.
struct OutputSite {
  unsigned wire = 0;
  friend bool operator==(const OutputSite&, const OutputSite&) = default;
};

using FaultSite = std::variant<LevelSite, PinSite, OutputSite>;

/// A single stuck-at fault: a site fixed at `stuck_value`.
struct StuckAtFault {
  FaultSite site;
  bool stuck_value = false;
  friend bool operator==(const StuckAtFault&, const StuckAtFault&) = default;
};

/// Cell-model detection requirement: gate `gate` must see input pattern
/// `pattern` (k bits, pin 0 most significant).
struct CellFaultRequirement {
  unsigned gate = 0;
  unsigned pattern = 0;
  friend bool operator==(const CellFaultRequirement&,
                         const CellFaultRequirement&) = default;
};

using Fault = std::variant<StuckAtFault, CellFaultRequirement>;

/// The complete fault enumeration for one circuit and model.
struct FaultUniverse {
  FaultModel model = FaultModel::stuck_at_level;
  std::vector<Fault> faults;

  std::size_t size() const { return faults.size(); }
};

/// Several stuck-at faults at pairwise distinct sites, present together.
using MultipleFault = std::vector<StuckAtFault>;

/// Enumerates all faults of the model. Stuck-at universes list all
/// polarity-0 faults first, then all polarity-1 faults, sites in
/// (level, wire) / (gate, pin, output) order; the cell universe is ordered
/// by (gate, pattern).
FaultUniverse enumerate_faults(const Circuit& c, FaultModel model);

/// The k-bit input pattern gate `gate` sees under the traced vector,
/// pin 0 most significant.
unsigned gate_input_pattern(const Circuit& c, const LevelTrace& t,
                            std::size_t gate);

/// Analytic single-fault detection. A stuck-at fault is detected iff the
/// vector sets the site to the opposite of the stuck value; a cell
/// requirement is met iff the gate sees exactly that pattern.
bool detects(const Circuit& c, const LevelTrace& t, const Fault& f);

/// Convenience overload tracing `v` internally.
bool detects(const Circuit& c, const BitVector& v, const Fault& f);

/// Behavioral fault injection: propagates `v` with every fault in `mf`
/// forced. Level sites are forced after the gates of their level fire; pin
/// sites are forced on the gate's view of its inputs before it fires, and
/// the forced value leaves the gate on its output side (controls pass
/// through stuck). Output sites are forced on the final state.
BitVector inject_and_simulate(const Circuit& c, const BitVector& v,
                              const MultipleFault& mf);

/// Simulates with gate `gate` replaced by an arbitrary k-bit function given
/// as a truth table of 2^k entries (input pattern -> output pattern). Used
/// as the executable faulty instance for cell-fault property tests.
BitVector simulate_with_gate_override(const Circuit& c, const BitVector& v,
                                      std::size_t gate,
                                      std::span<const unsigned> table);

/// Report form: "SA<p>@L<level>.w<wire>", "SA<p>@g<gate>.p<pin>",
/// "SA<p>@out.w<wire>" or "CELL@g<gate>:<pattern-bits>".
std::string to_string(const Fault& f);
std::string to_string(const StuckAtFault& f);
std::string to_string(const CellFaultRequirement& f, unsigned gate_size);

}  // namespace revtest
