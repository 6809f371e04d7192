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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "revtest/error.hpp"

namespace revtest {

/// Maximum number of wires a circuit may have. A full wire state then fits
/// one machine word.
inline constexpr unsigned kMaxWires = 64;

/// The values of all wires at one level of a circuit, packed into a word.
///
/// Wire 0 is the most significant of the `width` low-order bits, so the
/// packed word of a vector equals the integer whose binary expansion,
/// written wire 0 first, is the vector. `BitVector(3, 2)` is the vector
/// "010". String forms are always wire 0 leftmost.
class BitVector {
 public:
  BitVector() = default;

  BitVector(unsigned width, std::uint64_t value) : width_(width), bits_(value) {
    if (width == 0 || width > kMaxWires)
      throw Error("vector width must be in 1..64, got " +
                  std::to_string(width));
    if (width < kMaxWires && (value >> width) != 0)
      throw Error("vector value " + std::to_string(value) +
                  " does not fit in " + std::to_string(width) + " bits");
  }

  static BitVector zeros(unsigned width) { return BitVector(width, 0); }

  static BitVector ones(unsigned width) {
    return BitVector(width, mask_for(width));
  }

  /// Parses a binary string such as "010", wire 0 leftmost.
  static BitVector parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxWires)
      throw Error("vector string must have 1..64 characters");
    std::uint64_t bits = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw Error(std::string("invalid character '") + c +
                    "' in vector string");
      bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitVector(static_cast<unsigned>(text.size()), bits);
  }

  unsigned width() const { return width_; }

  /// The packed word; also the candidate index used by the solver.
  std::uint64_t value() const { return bits_; }

  bool bit(unsigned wire) const { return (bits_ >> shift(wire)) & 1u; }

  BitVector with_bit(unsigned wire, bool value) const {
    BitVector r = *this;
    const std::uint64_t m = std::uint64_t{1} << shift(wire);
    r.bits_ = value ? (r.bits_ | m) : (r.bits_ & ~m);
    return r;
  }

  /// Number of 1 bits.
  unsigned weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

  /// Bitwise complement within the vector width.
  BitVector complemented() const {
    return BitVector(width_, ~bits_ & mask_for(width_));
  }

  std::string to_string() const {
    std::string s(width_, '0');
    for (unsigned w = 0; w < width_; ++w)
      if (bit(w)) s[w] = '1';
    return s;
  }

  static std::uint64_t mask_for(unsigned width) {
    return width >= kMaxWires ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << width) - 1;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a,
                                          const BitVector& b) {
    if (a.width_ != b.width_) return a.width_ <=> b.width_;
    return a.bits_ <=> b.bits_;
  }

 private:
  unsigned shift(unsigned wire) const { return width_ - 1 - wire; }

  unsigned width_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace revtest
