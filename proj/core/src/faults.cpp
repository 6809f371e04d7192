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

#include "revtest/faults.hpp"

#include <algorithm>

#include "revtest/error.hpp"

namespace revtest {
namespace {

void check_site(const Circuit& c, const StuckAtFault& f) {
  if (const auto* ls = std::get_if<LevelSite>(&f.site)) {
    if (ls->level > c.depth() || ls->wire >= c.width())
      throw Error("stuck-at site out of range");
  } else if (const auto* ps = std::get_if<PinSite>(&f.site)) {
    if (ps->gate >= c.gate_count() || ps->pin >= c.gate(ps->gate).size())
      throw Error("stuck-at pin site out of range");
  } else if (const auto* os = std::get_if<OutputSite>(&f.site)) {
    if (os->wire >= c.width()) throw Error("stuck-at output site out of range");
  }
}

}  // namespace

FaultUniverse enumerate_faults(const Circuit& c, FaultModel model) {
  FaultUniverse u;
  u.model = model;
  switch (model) {
    case FaultModel::stuck_at_level:
      u.faults.reserve(std::size_t{2} * c.width() * (c.depth() + 1));
      for (int s = 0; s < 2; ++s)
        for (unsigned level = 0; level <= c.depth(); ++level)
          for (unsigned wire = 0; wire < c.width(); ++wire)
            u.faults.push_back(StuckAtFault{LevelSite{level, wire}, s != 0});
      break;
    case FaultModel::stuck_at_pin:
      u.faults.reserve(2 * (c.width() + c.total_gate_inputs()));
      for (int s = 0; s < 2; ++s) {
        for (unsigned g = 0; g < c.gate_count(); ++g)
          for (unsigned pin = 0; pin < c.gate(g).size(); ++pin)
            u.faults.push_back(StuckAtFault{PinSite{g, pin}, s != 0});
        for (unsigned wire = 0; wire < c.width(); ++wire)
          u.faults.push_back(StuckAtFault{OutputSite{wire}, s != 0});
      }
      break;
    case FaultModel::cell:
      for (unsigned g = 0; g < c.gate_count(); ++g)
        for (unsigned a = 0; a < (1u << c.gate(g).size()); ++a)
          u.faults.push_back(CellFaultRequirement{g, a});
      break;
  }
  return u;
}

unsigned gate_input_pattern(const Circuit& c, const LevelTrace& t,
                            std::size_t gate) {
  const Gate& g = c.gate(gate);
  const BitVector& state = t.at(c.gate_input_level(gate));
  unsigned pattern = 0;
  for (unsigned pin = 0; pin < g.size(); ++pin)
    pattern = (pattern << 1) | static_cast<unsigned>(state.bit(g.pin_wire(pin)));
  return pattern;
}

bool detects(const Circuit& c, const LevelTrace& t, const Fault& f) {
  if (const auto* sa = std::get_if<StuckAtFault>(&f)) {
    check_site(c, *sa);
    if (const auto* ls = std::get_if<LevelSite>(&sa->site))
      return t.at(ls->level).bit(ls->wire) == !sa->stuck_value;
    if (const auto* ps = std::get_if<PinSite>(&sa->site)) {
      const unsigned wire = c.gate(ps->gate).pin_wire(ps->pin);
      return t.at(c.gate_input_level(ps->gate)).bit(wire) == !sa->stuck_value;
    }
    const auto& os = std::get<OutputSite>(sa->site);
    return t.output().bit(os.wire) == !sa->stuck_value;
  }
  const auto& req = std::get<CellFaultRequirement>(f);
  if (req.gate >= c.gate_count() ||
      req.pattern >= (1u << c.gate(req.gate).size()))
    throw Error("cell requirement out of range");
  return gate_input_pattern(c, t, req.gate) == req.pattern;
}

bool detects(const Circuit& c, const BitVector& v, const Fault& f) {
  return detects(c, trace(c, v), f);
}

BitVector inject_and_simulate(const Circuit& c, const BitVector& v,
                              const MultipleFault& mf) {
  if (v.width() != c.width())
    throw Error("vector width does not match circuit width");
  for (std::size_t i = 0; i < mf.size(); ++i) {
    check_site(c, mf[i]);
    for (std::size_t j = i + 1; j < mf.size(); ++j)
      if (mf[i].site == mf[j].site)
        throw Error("multiple fault contains duplicate sites");
  }

  // (level, wire, value) forcings sorted by level; (gate, pin mask pair)
  // forcings sorted by gate.
  struct LevelForce {
    unsigned level, wire;
    bool value;
  };
  struct PinForce {
    unsigned gate;
    std::uint64_t set_mask = 0, clear_mask = 0;
  };
  std::vector<LevelForce> level_forces;
  std::vector<PinForce> pin_forces;
  std::uint64_t out_set = 0, out_clear = 0;
  const unsigned n = c.width();
  const auto wire_bit = [n](unsigned w) {
    return std::uint64_t{1} << (n - 1 - w);
  };

  for (const StuckAtFault& f : mf) {
    if (const auto* ls = std::get_if<LevelSite>(&f.site)) {
      level_forces.push_back({ls->level, ls->wire, f.stuck_value});
    } else if (const auto* ps = std::get_if<PinSite>(&f.site)) {
      const std::uint64_t m = wire_bit(c.gate(ps->gate).pin_wire(ps->pin));
      auto it = std::find_if(pin_forces.begin(), pin_forces.end(),
                             [&](const PinForce& p) { return p.gate == ps->gate; });
      if (it == pin_forces.end()) {
        pin_forces.push_back({ps->gate});
        it = pin_forces.end() - 1;
      }
      (f.stuck_value ? it->set_mask : it->clear_mask) |= m;
    } else {
      const auto& os = std::get<OutputSite>(f.site);
      (f.stuck_value ? out_set : out_clear) |= wire_bit(os.wire);
    }
  }
  std::sort(level_forces.begin(), level_forces.end(),
            [](const LevelForce& a, const LevelForce& b) {
              return a.level < b.level;
            });
  std::sort(pin_forces.begin(), pin_forces.end(),
            [](const PinForce& a, const PinForce& b) { return a.gate < b.gate; });

  std::uint64_t state = v.value();
  std::size_t next_force = 0;
  const auto apply_level_forces = [&](unsigned level) {
    while (next_force < level_forces.size() &&
           level_forces[next_force].level == level) {
      const LevelForce& f = level_forces[next_force++];
      const std::uint64_t m = wire_bit(f.wire);
      state = f.value ? (state | m) : (state & ~m);
    }
  };

  apply_level_forces(0);
  const auto& order = c.gates_by_level();
  for (unsigned level = 1; level <= c.depth(); ++level) {
    for (std::uint32_t i = c.level_begin(level), end = c.level_end(level);
         i < end; ++i) {
      const std::uint32_t g = order[i];
      auto it = std::lower_bound(
          pin_forces.begin(), pin_forces.end(), g,
          [](const PinForce& p, std::uint32_t gate) { return p.gate < gate; });
      if (it == pin_forces.end() || it->gate != g) {
        state = c.apply_gate(g, state);
        continue;
      }
      // Faulted gate: it reads (and re-drives) its wires through the
      // forced view.
      std::uint64_t view = (state | it->set_mask) & ~it->clear_mask;
      const std::uint64_t wires =
          c.control_mask(g) | c.target_mask(g);
      state = (state & ~wires) | (view & wires);
      if ((view & c.control_mask(g)) == c.control_mask(g))
        state ^= c.target_mask(g);
    }
    apply_level_forces(level);
  }
  state = (state | out_set) & ~out_clear;
  return BitVector(c.width(), state);
}

BitVector simulate_with_gate_override(const Circuit& c, const BitVector& v,
                                      std::size_t gate,
                                      std::span<const unsigned> table) {
  if (v.width() != c.width())
    throw Error("vector width does not match circuit width");
  if (gate >= c.gate_count()) throw Error("gate index out of range");
  const Gate& g = c.gate(gate);
  if (table.size() != (std::size_t{1} << g.size()))
    throw Error("override table must have 2^k entries");

  const unsigned n = c.width();
  std::uint64_t state = v.value();
  const auto& order = c.gates_by_level();
  for (std::uint32_t i = 0; i < c.gate_count(); ++i) {
    const std::uint32_t gi = order[i];
    if (gi != gate) {
      state = c.apply_gate(gi, state);
      continue;
    }
    unsigned pattern = 0;
    for (unsigned pin = 0; pin < g.size(); ++pin)
      pattern = (pattern << 1) |
                static_cast<unsigned>((state >> (n - 1 - g.pin_wire(pin))) & 1);
    unsigned out = table[pattern];
    for (unsigned pin = 0; pin < g.size(); ++pin) {
      const std::uint64_t m = std::uint64_t{1} << (n - 1 - g.pin_wire(pin));
      const bool bit = (out >> (g.size() - 1 - pin)) & 1u;
      state = bit ? (state | m) : (state & ~m);
    }
  }
  return BitVector(c.width(), state);
}

std::string to_string(const StuckAtFault& f) {
  const char p = f.stuck_value ? '1' : '0';
  if (const auto* ls = std::get_if<LevelSite>(&f.site))
    return std::string("SA") + p + "@L" + std::to_string(ls->level) + ".w" +
           std::to_string(ls->wire);
  if (const auto* ps = std::get_if<PinSite>(&f.site))
    return std::string("SA") + p + "@g" + std::to_string(ps->gate) + ".p" +
           std::to_string(ps->pin);
  const auto& os = std::get<OutputSite>(f.site);
  return std::string("SA") + p + "@out.w" + std::to_string(os.wire);
}

std::string to_string(const CellFaultRequirement& f, unsigned gate_size) {
  std::string bits(gate_size, '0');
  for (unsigned i = 0; i < gate_size; ++i)
    if ((f.pattern >> (gate_size - 1 - i)) & 1u) bits[i] = '1';
  return "CELL@g" + std::to_string(f.gate) + ":" + bits;
}

std::string to_string(const Fault& f) {
  if (const auto* sa = std::get_if<StuckAtFault>(&f)) return to_string(*sa);
  const auto& req = std::get<CellFaultRequirement>(f);
  // Pattern width is unknown without the circuit; print minimal width.
  unsigned width = 1;
  while ((1u << width) <= req.pattern) ++width;
  return to_string(req, width);
}

}  // namespace revtest
