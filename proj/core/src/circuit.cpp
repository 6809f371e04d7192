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

#include "revtest/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "revtest/error.hpp"

namespace revtest {
namespace {

std::uint64_t wire_mask(unsigned width, unsigned wire) {
  return std::uint64_t{1} << (width - 1 - wire);
}

}  // namespace

Circuit::Circuit(unsigned width, std::vector<Gate> gates,
                 std::vector<std::string> wire_names)
    : width_(width), gates_(std::move(gates)), wire_names_(std::move(wire_names)) {
  if (width_ == 0 || width_ > kMaxWires)
    throw Error("circuit width must be in 1..64, got " + std::to_string(width_));

  if (wire_names_.empty()) {
    wire_names_.reserve(width_);
    for (unsigned w = 0; w < width_; ++w)
      wire_names_.push_back("x" + std::to_string(w));
  } else if (wire_names_.size() != width_) {
    throw Error("expected " + std::to_string(width_) + " wire names, got " +
                std::to_string(wire_names_.size()));
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : wire_names_)
      if (!seen.insert(name).second)
        throw Error("duplicate wire name '" + name + "'");
  }

  gate_level_.reserve(gates_.size());
  control_mask_.reserve(gates_.size());
  target_mask_.reserve(gates_.size());

  std::vector<unsigned> wire_level(width_, 0);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.num_controls > 2)
      throw Error("gate " + std::to_string(i) + ": unsupported arity");
    unsigned level = 0;
    std::uint64_t cmask = 0;
    std::uint64_t seen = 0;
    for (unsigned pin = 0; pin < g.size(); ++pin) {
      const unsigned w = g.pin_wire(pin);
      if (w >= width_)
        throw Error("gate " + std::to_string(i) + ": wire index " +
                    std::to_string(w) + " out of range");
      const std::uint64_t m = wire_mask(width_, w);
      if (seen & m)
        throw Error("gate " + std::to_string(i) + ": duplicate wire " +
                    std::to_string(w));
      seen |= m;
      if (pin < g.num_controls) cmask |= m;
      level = std::max(level, wire_level[w]);
    }
    ++level;
    for (unsigned pin = 0; pin < g.size(); ++pin)
      wire_level[g.pin_wire(pin)] = level;

    gate_level_.push_back(level);
    control_mask_.push_back(cmask);
    target_mask_.push_back(wire_mask(width_, g.target));
    depth_ = std::max(depth_, level);
    total_gate_inputs_ += g.size();
  }

  level_order_.resize(gates_.size());
  std::iota(level_order_.begin(), level_order_.end(), 0);
  std::stable_sort(level_order_.begin(), level_order_.end(),
                   [this](std::uint32_t a, std::uint32_t b) {
                     return gate_level_[a] < gate_level_[b];
                   });
  level_offset_.assign(depth_ + 1, 0);
  for (std::size_t i = 0; i < gates_.size(); ++i)
    ++level_offset_[gate_level_[i]];
  std::partial_sum(level_offset_.begin(), level_offset_.end(),
                   level_offset_.begin());
}

namespace {

void check_levels(const Circuit& c, unsigned from, unsigned to) {
  if (from > to || to > c.depth())
    throw Error("level range " + std::to_string(from) + ".." +
                std::to_string(to) + " out of range for depth " +
                std::to_string(c.depth()));
}

void check_width(const Circuit& c, const BitVector& v) {
  if (v.width() != c.width())
    throw Error("vector width " + std::to_string(v.width()) +
                " does not match circuit width " + std::to_string(c.width()));
}

}  // namespace

BitVector simulate(const Circuit& c, const BitVector& v, unsigned from_level,
                   unsigned to_level) {
  check_width(c, v);
  check_levels(c, from_level, to_level);
  std::uint64_t state = v.value();
  if (from_level < to_level) {
    const auto& order = c.gates_by_level();
    for (std::uint32_t i = c.level_begin(from_level + 1),
                       end = c.level_end(to_level);
         i < end; ++i)
      state = c.apply_gate(order[i], state);
  }
  return BitVector(c.width(), state);
}

BitVector simulate(const Circuit& c, const BitVector& v) {
  return simulate(c, v, 0, c.depth());
}

BitVector simulate_inverse(const Circuit& c, const BitVector& v,
                           unsigned from_level, unsigned to_level) {
  check_width(c, v);
  check_levels(c, from_level, to_level);
  std::uint64_t state = v.value();
  if (from_level < to_level) {
    const auto& order = c.gates_by_level();
    std::uint32_t begin = c.level_begin(from_level + 1);
    std::uint32_t i = c.level_end(to_level);
    while (i > begin) state = c.apply_gate(order[--i], state);
  }
  return BitVector(c.width(), state);
}

BitVector simulate_inverse(const Circuit& c, const BitVector& v) {
  return simulate_inverse(c, v, 0, c.depth());
}

LevelTrace trace(const Circuit& c, const BitVector& v) {
  check_width(c, v);
  LevelTrace t;
  t.values.reserve(c.depth() + 1);
  t.values.push_back(v);
  std::uint64_t state = v.value();
  const auto& order = c.gates_by_level();
  for (unsigned level = 1; level <= c.depth(); ++level) {
    for (std::uint32_t i = c.level_begin(level), end = c.level_end(level);
         i < end; ++i)
      state = c.apply_gate(order[i], state);
    t.values.push_back(BitVector(c.width(), state));
  }
  return t;
}

}  // namespace revtest
