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

#include "revtest/generate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "revtest/error.hpp"
#include "revtest/random.hpp"

namespace revtest {

TestSet gen_enumerative(const Circuit& c) {
  if (c.width() > 20)
    throw Error("enumerative generation emits 2^{n-1}+1 vectors; width " +
                std::to_string(c.width()) + " exceeds the 20-wire guard");
  TestSet tests;
  const std::uint64_t count = (std::uint64_t{1} << (c.width() - 1)) + 1;
  tests.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    tests.push_back(BitVector(c.width(), i));
  return tests;
}

TestSet gen_inverse_complement(const Circuit& c) {
  TestSet tests{BitVector::zeros(c.width()), BitVector::ones(c.width())};
  const LevelTrace zero_trace = trace(c, BitVector::zeros(c.width()));
  for (unsigned level = 1; level <= c.depth(); ++level) {
    const BitVector t =
        simulate_inverse(c, zero_trace.at(level).complemented(), 0, level);
    if (std::find(tests.begin(), tests.end(), t) == tests.end())
      tests.push_back(t);
  }
  return tests;
}

TestSet gen_linear(const Circuit& c) {
  for (std::size_t i = 0; i < c.gate_count(); ++i)
    if (c.gate(i).size() != 2)
      throw Error("linear generation needs a C-NOT-only circuit; gate " +
                  std::to_string(i) + " is a " +
                  (c.gate(i).size() == 1 ? std::string("NOT")
                                         : std::string("Toffoli")) +
                  " gate");
  TestSet tests;
  tests.reserve(c.width() + 1);
  tests.push_back(BitVector::zeros(c.width()));
  for (unsigned w = 0; w < c.width(); ++w)
    tests.push_back(BitVector::zeros(c.width()).with_bit(w, true));
  return tests;
}

namespace {

// Site indexing for the pin-convention stuck-at universe: all gate pins in
// gate order, then the circuit outputs. observed[2*site + bit] records that
// some chosen vector set the site to `bit`.
struct PinSites {
  explicit PinSites(const Circuit& c) : circuit(c) {
    gate_offset.reserve(c.gate_count());
    std::uint32_t off = 0;
    for (std::size_t g = 0; g < c.gate_count(); ++g) {
      gate_offset.push_back(off);
      off += c.gate(g).size();
    }
    output_offset = off;
    num_sites = off + c.width();
  }

  // Calls f(site, bit) for every site observation of the input vector.
  template <typename F>
  void observe(std::uint64_t state, F&& f) const {
    const Circuit& c = circuit;
    const unsigned n = c.width();
    const auto& order = c.gates_by_level();
    for (unsigned level = 1; level <= c.depth(); ++level) {
      for (std::uint32_t i = c.level_begin(level), end = c.level_end(level);
           i < end; ++i) {
        const std::uint32_t gi = order[i];
        const Gate& g = c.gate(gi);
        for (unsigned pin = 0; pin < g.size(); ++pin)
          f(gate_offset[gi] + pin,
            static_cast<bool>((state >> (n - 1 - g.pin_wire(pin))) & 1));
        state = c.apply_gate(gi, state);
      }
    }
    for (unsigned w = 0; w < n; ++w)
      f(output_offset + w, static_cast<bool>((state >> (n - 1 - w)) & 1));
  }

  const Circuit& circuit;
  std::vector<std::uint32_t> gate_offset;
  std::uint32_t output_offset = 0;
  std::uint32_t num_sites = 0;
};

// Cell requirement indexing: per-gate pattern blocks.
struct CellSites {
  explicit CellSites(const Circuit& c) : circuit(c) {
    gate_offset.reserve(c.gate_count());
    std::uint32_t off = 0;
    for (std::size_t g = 0; g < c.gate_count(); ++g) {
      gate_offset.push_back(off);
      off += 1u << c.gate(g).size();
    }
    num_requirements = off;
  }

  template <typename F>
  void observe(std::uint64_t state, F&& f) const {
    const Circuit& c = circuit;
    const unsigned n = c.width();
    const auto& order = c.gates_by_level();
    for (unsigned level = 1; level <= c.depth(); ++level) {
      for (std::uint32_t i = c.level_begin(level), end = c.level_end(level);
           i < end; ++i) {
        const std::uint32_t gi = order[i];
        const Gate& g = c.gate(gi);
        unsigned pattern = 0;
        for (unsigned pin = 0; pin < g.size(); ++pin)
          pattern = (pattern << 1) |
                    static_cast<unsigned>((state >> (n - 1 - g.pin_wire(pin))) & 1);
        f(gate_offset[gi] + pattern);
        state = c.apply_gate(gi, state);
      }
    }
  }

  const Circuit& circuit;
  std::vector<std::uint32_t> gate_offset;
  std::uint32_t num_requirements = 0;
};

TestSet greedy_stuck_at(const Circuit& c, bool exact, std::uint64_t seed) {
  const PinSites sites(c);
  const std::size_t total = std::size_t{2} * sites.num_sites;
  std::vector<bool> observed(total, false);
  std::size_t remaining = total;
  TestSet tests;
  Rng rng = Rng(seed).split(0x67656e);

  const auto newly = [&](std::uint64_t state) {
    std::size_t count = 0;
    sites.observe(state, [&](std::uint32_t site, bool bit) {
      if (!observed[2 * site + (bit ? 1 : 0)]) ++count;
    });
    return count;
  };
  const auto commit = [&](std::uint64_t state) {
    sites.observe(state, [&](std::uint32_t site, bool bit) {
      const std::size_t idx = 2 * site + (bit ? 1 : 0);
      if (!observed[idx]) {
        observed[idx] = true;
        --remaining;
      }
    });
  };

  const std::uint64_t mask = BitVector::mask_for(c.width());
  while (remaining > 0) {
    std::uint64_t best = 0;
    std::size_t best_new = 0;
    if (exact) {
      for (std::uint64_t v = 0;; ++v) {
        const std::size_t score = newly(v);
        if (score > best_new) {
          best = v;
          best_new = score;
        }
        if (v == mask) break;
      }
      // Existence of a half-covering vector is guaranteed; a violation
      // means the scoring is broken.
      if (2 * best_new < remaining)
        throw Error("internal: greedy step covered less than half of the "
                    "remaining stuck-at faults");
    } else {
      // Backsolved vector for the first uncovered fault keeps every step
      // productive even if the random pool is unlucky.
      for (std::uint32_t site = 0; site < sites.num_sites && best_new == 0;
           ++site)
        for (unsigned bit = 0; bit < 2; ++bit)
          if (!observed[2 * site + bit]) {
            BitVector at_level = BitVector::zeros(c.width());
            unsigned level;
            if (site >= sites.output_offset) {
              level = c.depth();
              at_level = at_level.with_bit(site - sites.output_offset, bit != 0);
            } else {
              const auto gate_it =
                  std::upper_bound(sites.gate_offset.begin(),
                                   sites.gate_offset.end(), site) -
                  1;
              const std::size_t g = gate_it - sites.gate_offset.begin();
              const unsigned pin = site - *gate_it;
              level = c.gate_input_level(g);
              at_level =
                  at_level.with_bit(c.gate(g).pin_wire(pin), bit != 0);
            }
            best = simulate_inverse(c, at_level, 0, level).value();
            best_new = newly(best);
            break;
          }
      for (unsigned i = 0; i < 4096; ++i) {
        const std::uint64_t v = rng.next() & mask;
        const std::size_t score = newly(v);
        if (score > best_new || (score == best_new && v < best && score > 0)) {
          best = v;
          best_new = score;
        }
      }
    }
    tests.push_back(BitVector(c.width(), best));
    commit(best);
  }

  if (exact) {
    const BoundReport b = bounds(c, FaultModel::stuck_at_pin);
    if (tests.size() > b.bound_c)
      throw Error("internal: exact greedy exceeded the logarithmic bound");
  }
  return tests;
}

TestSet greedy_cell(const Circuit& c, bool exact, std::uint64_t seed) {
  const CellSites sites(c);
  std::vector<bool> observed(sites.num_requirements, false);
  std::size_t remaining = sites.num_requirements;
  TestSet tests;
  Rng rng = Rng(seed).split(0x67656e);

  const auto newly = [&](std::uint64_t state) {
    std::size_t count = 0;
    sites.observe(state, [&](std::uint32_t req) {
      if (!observed[req]) ++count;
    });
    return count;
  };
  const auto commit = [&](std::uint64_t state) {
    sites.observe(state, [&](std::uint32_t req) {
      if (!observed[req]) {
        observed[req] = true;
        --remaining;
      }
    });
  };

  const std::uint64_t mask = BitVector::mask_for(c.width());
  while (remaining > 0) {
    std::uint64_t best = 0;
    std::size_t best_new = 0;
    if (exact) {
      for (std::uint64_t v = 0;; ++v) {
        const std::size_t score = newly(v);
        if (score > best_new) {
          best = v;
          best_new = score;
        }
        if (v == mask) break;
      }
    } else {
      for (std::uint32_t req = 0; req < sites.num_requirements && best_new == 0;
           ++req)
        if (!observed[req]) {
          const auto gate_it = std::upper_bound(sites.gate_offset.begin(),
                                                sites.gate_offset.end(), req) -
                               1;
          const std::size_t g = gate_it - sites.gate_offset.begin();
          const unsigned pattern = req - *gate_it;
          BitVector at_level = BitVector::zeros(c.width());
          const Gate& gate = c.gate(g);
          for (unsigned pin = 0; pin < gate.size(); ++pin)
            at_level = at_level.with_bit(
                gate.pin_wire(pin),
                ((pattern >> (gate.size() - 1 - pin)) & 1u) != 0);
          best = simulate_inverse(c, at_level, 0, c.gate_input_level(g)).value();
          best_new = newly(best);
        }
      for (unsigned i = 0; i < 4096; ++i) {
        const std::uint64_t v = rng.next() & mask;
        const std::size_t score = newly(v);
        if (score > best_new || (score == best_new && v < best && score > 0)) {
          best = v;
          best_new = score;
        }
      }
    }
    tests.push_back(BitVector(c.width(), best));
    commit(best);
  }
  return tests;
}

}  // namespace

TestSet gen_greedy(const Circuit& c, FaultModel model, GreedyMode mode,
                   std::uint64_t seed) {
  bool exact;
  switch (mode) {
    case GreedyMode::exact:
      exact = c.width() <= 16;  // falls back to randomized beyond the guard
      break;
    case GreedyMode::randomized:
      exact = false;
      break;
    default:
      exact = c.width() <= 16;
      break;
  }
  if (model == FaultModel::cell) return greedy_cell(c, exact, seed);
  return greedy_stuck_at(c, exact, seed);
}

TestSet gen_cell_backsolve(const Circuit& c) {
  if (c.gate_count() == 0) return {};
  const CellSites sites(c);
  std::vector<bool> observed(sites.num_requirements, false);
  std::size_t remaining = sites.num_requirements;
  TestSet tests;

  const auto commit = [&](const BitVector& v) {
    sites.observe(v.value(), [&](std::uint32_t req) {
      if (!observed[req]) {
        observed[req] = true;
        --remaining;
      }
    });
    tests.push_back(v);
  };

  commit(BitVector::zeros(c.width()));
  std::uint32_t scan = 0;
  while (remaining > 0) {
    while (observed[scan]) ++scan;
    const auto gate_it =
        std::upper_bound(sites.gate_offset.begin(), sites.gate_offset.end(),
                         scan) -
        1;
    const std::size_t g = gate_it - sites.gate_offset.begin();
    const unsigned pattern = scan - *gate_it;
    const Gate& gate = c.gate(g);
    BitVector at_level = BitVector::zeros(c.width());
    for (unsigned pin = 0; pin < gate.size(); ++pin)
      at_level = at_level.with_bit(gate.pin_wire(pin),
                                   ((pattern >> (gate.size() - 1 - pin)) & 1u) != 0);
    commit(simulate_inverse(c, at_level, 0, c.gate_input_level(g)));
  }

  const std::uint64_t bound =
      sites.num_requirements - c.gate_count() + 1;
  if (tests.size() > bound)
    throw Error("internal: cell backsolve exceeded its size bound");
  return tests;
}

CircuitParams CircuitParams::of(const Circuit& c) {
  CircuitParams p;
  p.wires = c.width();
  p.depth = c.depth();
  p.gate_count = c.gate_count();
  for (const Gate& g : c.gates()) ++p.gates_of_size[g.size()];
  return p;
}

std::uint64_t CircuitParams::total_gate_inputs() const {
  std::uint64_t total = 0;
  for (unsigned k = 1; k < gates_of_size.size(); ++k)
    total += k * gates_of_size[k];
  return total;
}

unsigned CircuitParams::max_gate_size() const {
  for (unsigned k = 3; k >= 1; --k)
    if (gates_of_size[k] > 0) return k;
  return 0;
}

namespace {

std::uint64_t saturate(unsigned __int128 v) {
  const unsigned __int128 max = ~std::uint64_t{0};
  return v > max ? ~std::uint64_t{0} : static_cast<std::uint64_t>(v);
}

std::uint64_t floor_log2(std::uint64_t v) {
  return static_cast<std::uint64_t>(std::bit_width(v)) - 1;
}

}  // namespace

BoundReport bounds(const CircuitParams& params, FaultModel model) {
  if (params.wires == 0 || params.wires > kMaxWires)
    throw Error("bound parameters need a wire count in 1..64");
  BoundReport r;
  r.model = model;
  r.params = params;
  const unsigned n = params.wires;

  if (model != FaultModel::cell) {
    r.bound_a =
        saturate((static_cast<unsigned __int128>(1) << (n - 1)) + 1);
    r.bound_b = params.depth + 2;
    r.bound_c = floor_log2(n + params.total_gate_inputs()) + 2;
    return r;
  }

  const unsigned k1 = params.max_gate_size();
  const std::uint64_t l = params.gate_count;
  std::uint64_t total_faults = 0;
  for (unsigned k = 1; k <= 3; ++k)
    total_faults += params.gates_of_size[k] << k;

  if (l == 0) {
    r.bound_a = r.bound_b = r.bound_c = 1;
    return r;
  }

  r.bound_a = saturate((static_cast<unsigned __int128>(1) << n) -
                       (static_cast<unsigned __int128>(1) << (n - k1)) + 1);
  r.bound_b = total_faults - l + 1;

  // bound_c: sum over gates, sizes descending, of ceil(2^{k_i} / i).
  {
    std::uint64_t sum = 0;
    std::uint64_t rank = 0;  // gates consumed so far
    for (unsigned k = 3; k >= 1; --k) {
      const std::uint64_t count = params.gates_of_size[k];
      if (count == 0) continue;
      const std::uint64_t v = std::uint64_t{1} << k;
      std::uint64_t i = rank + 1;
      const std::uint64_t last = rank + count;
      for (; i <= last && i < v; ++i) sum += (v + i - 1) / i;
      if (i <= last) sum += last - i + 1;  // ceil is 1 from here on
      rank = last;
    }
    r.bound_c = std::max<std::uint64_t>(sum, 1);
  }

  // Iterated per-step guarantee. Covered weight is tracked as an integer
  // scaled by 2^k1. Charging each step's removals to the smallest gates
  // first grows the covered weight fastest, which shrinks the guaranteed
  // removal of later steps and so maximizes the step count; the result is
  // an upper bound for any run that meets the per-step guarantee.
  {
    const std::uint64_t scale = std::uint64_t{1} << k1;
    std::array<std::uint64_t, 4> uncovered{};
    for (unsigned k = 1; k <= 3; ++k)
      uncovered[k] = params.gates_of_size[k] << k;
    std::uint64_t left = total_faults;
    std::uint64_t weight = 0;  // sum over covered faults of 2^{k1 - k}
    std::uint64_t steps = 0;
    while (left > 0) {
      std::uint64_t removal = l - weight / scale;
      ++steps;
      for (unsigned k = 1; k <= 3 && removal > 0; ++k) {
        const std::uint64_t take = std::min(removal, uncovered[k]);
        uncovered[k] -= take;
        left -= take;
        weight += take << (k1 - k);
        removal -= take;
      }
    }
    r.iterated_bound = steps;
  }

  {
    const double pk = static_cast<double>(std::uint64_t{1} << k1);
    r.expected_bound =
        std::log2(2.0 * pk / (pk - 1.0) * static_cast<double>(l) + 1.0) /
        (static_cast<double>(k1) - std::log2(pk - 1.0));
  }
  return r;
}

BoundReport bounds(const Circuit& c, FaultModel model) {
  return bounds(CircuitParams::of(c), model);
}

}  // namespace revtest
