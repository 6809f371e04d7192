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

#include "revtest/random.hpp"

#include "revtest/error.hpp"

namespace revtest {

std::uint64_t gate_universe_size(unsigned wires, GateLibrary library) {
  const std::uint64_t n = wires;
  if (library == GateLibrary::cnot_only) return n * (n - 1);
  return n + n * (n - 1) + n * (n - 1) * (n - 2) / 2;
}

Gate decode_gate(unsigned wires, std::uint64_t index, GateLibrary library) {
  const std::uint64_t n = wires;
  if (library == GateLibrary::nct) {
    if (index < n) return Gate::not_gate(static_cast<unsigned>(index));
    index -= n;
  }
  if (index < n * (n - 1)) {
    const unsigned control = static_cast<unsigned>(index / (n - 1));
    unsigned target = static_cast<unsigned>(index % (n - 1));
    if (target >= control) ++target;
    return Gate::cnot(control, target);
  }
  index -= n * (n - 1);
  // Toffoli block: target-major, then unordered control pairs (c0 < c1).
  const std::uint64_t pairs = (n - 1) * (n - 2) / 2;
  const unsigned target = static_cast<unsigned>(index / pairs);
  std::uint64_t pair = index % pairs;
  // Controls enumerate pairs over the wires excluding the target.
  unsigned c0 = 0, c1 = 0;
  std::uint64_t remaining = pair;
  for (unsigned first = 0; first + 1 < n; ++first) {
    const std::uint64_t with_first = n - 1 - first - (first < target ? 1 : 0);
    // Number of valid second controls after `first`, skipping the target.
    if (first == target) continue;
    if (remaining < with_first) {
      c0 = first;
      unsigned second = first + 1;
      while (true) {
        if (second != target) {
          if (remaining == 0) break;
          --remaining;
        }
        ++second;
      }
      c1 = second;
      break;
    }
    remaining -= with_first;
  }
  return Gate::toffoli(c0, c1, target);
}

Circuit random_circuit(unsigned wires, unsigned length, Rng& rng,
                       GateLibrary library) {
  if (library == GateLibrary::nct && wires < 3)
    throw Error("NCT circuits need at least 3 wires so Toffoli placements "
                "exist; got " +
                std::to_string(wires));
  if (library == GateLibrary::cnot_only && wires < 2)
    throw Error("C-NOT circuits need at least 2 wires");
  const std::uint64_t universe = gate_universe_size(wires, library);
  std::vector<Gate> gates;
  gates.reserve(length);
  for (unsigned i = 0; i < length; ++i)
    gates.push_back(decode_gate(wires, rng.below(universe), library));
  return Circuit(wires, std::move(gates));
}

}  // namespace revtest
