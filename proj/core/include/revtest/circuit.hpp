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
#include <string>
#include <vector>

#include "revtest/bitvector.hpp"

namespace revtest {

/// One gate of the NCT library: NOT (no controls), C-NOT (one control) or
/// Toffoli (two controls). Pins are numbered controls first, target last.
struct Gate {
  std::uint8_t num_controls = 0;
  std::array<std::uint8_t, 2> controls{};
  std::uint8_t target = 0;

  static Gate not_gate(unsigned target) {
    Gate g;
    g.target = static_cast<std::uint8_t>(target);
    return g;
  }

  static Gate cnot(unsigned control, unsigned target) {
    Gate g;
    g.num_controls = 1;
    g.controls[0] = static_cast<std::uint8_t>(control);
    g.target = static_cast<std::uint8_t>(target);
    return g;
  }

  static Gate toffoli(unsigned control0, unsigned control1, unsigned target) {
    Gate g;
    g.num_controls = 2;
    g.controls[0] = static_cast<std::uint8_t>(control0);
    g.controls[1] = static_cast<std::uint8_t>(control1);
    g.target = static_cast<std::uint8_t>(target);
    return g;
  }

  /// Gate size k: number of inputs (and outputs).
  unsigned size() const { return num_controls + 1u; }

  /// Wire carried by the given pin; pins 0..k-2 are controls, k-1 the target.
  unsigned pin_wire(unsigned pin) const {
    return pin < num_controls ? controls[pin] : target;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// A well-formed reversible circuit over the NCT library.
///
/// Levels are dependency-derived: a gate's outputs sit at one plus the
/// highest level of any of its wires, and a wire keeps its value at every
/// level between two consecutive gates that touch it. Gates that share a
/// level touch disjoint wires. Construction validates gate wire indices and
/// computes levels; instances are immutable afterwards and safe to share
/// across threads.
class Circuit {
 public:
  /// Builds a circuit and derives levels. `wire_names` defaults to
  /// x0..x{n-1}; when given it must contain `width` unique names.
  Circuit(unsigned width, std::vector<Gate> gates,
          std::vector<std::string> wire_names = {});

  unsigned width() const { return width_; }
  unsigned depth() const { return depth_; }
  std::size_t gate_count() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t i) const { return gates_[i]; }

  /// Level at which gate i's outputs appear (1-based; inputs are level 0).
  unsigned gate_level(std::size_t i) const { return gate_level_[i]; }

  /// Level whose wire values gate i reads, i.e. gate_level(i) - 1.
  unsigned gate_input_level(std::size_t i) const { return gate_level_[i] - 1; }

  const std::vector<std::string>& wire_names() const { return wire_names_; }
  const std::string& wire_name(unsigned wire) const {
    return wire_names_[wire];
  }

  /// Sum of gate sizes k_1 + ... + k_l.
  std::uint64_t total_gate_inputs() const { return total_gate_inputs_; }

  /// Gate indices ordered by level (stable); a valid evaluation order.
  const std::vector<std::uint32_t>& gates_by_level() const {
    return level_order_;
  }

  /// Packed control/target masks for fast word-level gate application.
  std::uint64_t control_mask(std::size_t i) const { return control_mask_[i]; }
  std::uint64_t target_mask(std::size_t i) const { return target_mask_[i]; }

  /// Applies gate i to a packed wire state.
  std::uint64_t apply_gate(std::size_t i, std::uint64_t state) const {
    if ((state & control_mask_[i]) == control_mask_[i])
      state ^= target_mask_[i];
    return state;
  }

  /// First index into gates_by_level() of the gates at `level` (1..d+1).
  std::uint32_t level_begin(unsigned level) const {
    return level_offset_[level - 1];
  }
  std::uint32_t level_end(unsigned level) const { return level_offset_[level]; }

 private:
  unsigned width_ = 0;
  unsigned depth_ = 0;
  std::uint64_t total_gate_inputs_ = 0;
  std::vector<Gate> gates_;
  std::vector<unsigned> gate_level_;
  std::vector<std::string> wire_names_;
  std::vector<std::uint32_t> level_order_;
  std::vector<std::uint32_t> level_offset_;
  std::vector<std::uint64_t> control_mask_;
  std::vector<std::uint64_t> target_mask_;
};

/// The wire values at every level for one input vector; values[j] = f_j(in).
struct LevelTrace {
  std::vector<BitVector> values;

  const BitVector& at(unsigned level) const { return values[level]; }
  const BitVector& input() const { return values.front(); }
  const BitVector& output() const { return values.back(); }
};

/// Computes f_{from,to}(v), the function of the sub-circuit between the two
/// levels. simulate(c, v, 0, c.depth()) is the full circuit function.
BitVector simulate(const Circuit& c, const BitVector& v, unsigned from_level,
                   unsigned to_level);

/// Full circuit function f_d.
BitVector simulate(const Circuit& c, const BitVector& v);

/// Computes f_{from,to}^{-1}(v). NCT gates are involutions, so this applies
/// the gates of the range in reverse order.
BitVector simulate_inverse(const Circuit& c, const BitVector& v,
                           unsigned from_level, unsigned to_level);

/// Full inverse f_d^{-1}.
BitVector simulate_inverse(const Circuit& c, const BitVector& v);

/// Propagates v through the circuit, recording the state at every level.
LevelTrace trace(const Circuit& c, const BitVector& v);

}  // namespace revtest
