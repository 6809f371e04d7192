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

#include "revtest/circuit.hpp"

namespace revtest {

/// Deterministic splittable PRNG (splitmix64 core). Pure 64-bit integer
/// arithmetic, so streams are identical on every platform; every randomized
/// entry point takes an explicit seed and benchmark records carry theirs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) via rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    for (;;) {
      const std::uint64_t v = next();
      if (v < limit || limit == 0) return v % bound;
    }
  }

  /// Independent substream keyed by `tag`; the parent stream is unaffected.
  Rng split(std::uint64_t tag) const {
    Rng mixer(state_ ^ (0x9e3779b97f4a7c15ull * (tag + 1)));
    return Rng(mixer.next());
  }

 private:
  std::uint64_t state_;
};

enum class GateLibrary { nct, cnot_only };

/// Number of distinct gate placements on `wires`: n NOTs, n(n-1) C-NOTs and
/// n(n-1)(n-2)/2 Toffolis (control pairs unordered).
std::uint64_t gate_universe_size(unsigned wires, GateLibrary library);

/// Decodes a placement index (0 .. universe-1) into a gate; NOTs first,
/// then C-NOTs, then Toffolis, each block in lexicographic wire order.
Gate decode_gate(unsigned wires, std::uint64_t index, GateLibrary library);

/// A circuit of exactly `length` gates drawn uniformly from the placement
/// universe. NCT needs wires >= 3 so Toffoli placements exist.
Circuit random_circuit(unsigned wires, unsigned length, Rng& rng,
                       GateLibrary library = GateLibrary::nct);

}  // namespace revtest
