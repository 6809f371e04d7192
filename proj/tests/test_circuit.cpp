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

#include <doctest.h>

#include <set>

#include "revtest/circuit.hpp"
#include "revtest/circuit_io.hpp"
#include "revtest/error.hpp"
#include "test_util.hpp"

using namespace revtest;
using revtest::testing::example_circuit;

TEST_CASE("bitvector packing and strings") {
  const BitVector v = BitVector::parse("010");
  CHECK(v.width() == 3);
  CHECK(v.value() == 2);  // wire 0 is the most significant bit
  CHECK(v.bit(1));
  CHECK(!v.bit(0));
  CHECK(!v.bit(2));
  CHECK(v.to_string() == "010");
  CHECK(v.weight() == 1);
  CHECK(v.complemented().to_string() == "101");
  CHECK(BitVector::ones(4).to_string() == "1111");
  CHECK(BitVector::zeros(4).value() == 0);
  CHECK(BitVector(3, 2) == v);
  CHECK_THROWS_AS(BitVector::parse("01x"), Error);
  CHECK_THROWS_AS(BitVector::parse(""), Error);
  CHECK_THROWS_AS(BitVector(3, 8), Error);
  CHECK_THROWS_AS(BitVector(65, 0), Error);

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const unsigned width = 1 + static_cast<unsigned>(rng.below(64));
    const BitVector r(width, rng.next() & BitVector::mask_for(width));
    CHECK(BitVector::parse(r.to_string()) == r);
  }
}

TEST_CASE("parsing the example circuit") {
  const Circuit c = example_circuit();
  CHECK(c.width() == 3);
  CHECK(c.gate_count() == 2);
  CHECK(c.gate(0) == Gate::cnot(0, 1));
  CHECK(c.gate(1) == Gate::cnot(1, 2));
  CHECK(c.gate_level(0) == 1);  // the gates share wire b
  CHECK(c.gate_level(1) == 2);
  CHECK(c.depth() == 2);
  CHECK(c.wire_name(0) == "a");
  CHECK(c.total_gate_inputs() == 4);
}

TEST_CASE("parser accepts comments, blank lines and CRLF") {
  const Circuit c = parse_circuit(
      "# header comment\r\n.v a, b ,c\r\n\r\nt2 a,b  # inline\nt2 b,c\n");
  CHECK(c.width() == 3);
  CHECK(c.gate_count() == 2);
}

TEST_CASE("parser error cases") {
  CHECK_THROWS_AS(parse_circuit(".v a\nt2 a,a\n"), ParseError);   // duplicate
  CHECK_THROWS_AS(parse_circuit(".v a,b\nt2 a,z\n"), ParseError); // unknown
  CHECK_THROWS_AS(parse_circuit(".v a,b\nt4 a,b\n"), ParseError); // arity
  CHECK_THROWS_AS(parse_circuit("t1 a\n.v a\n"), ParseError);     // no header
  CHECK_THROWS_AS(parse_circuit(""), ParseError);
  CHECK_THROWS_AS(parse_circuit(".v a,a\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit(".v a,b\nt2 a b\n"), ParseError);

  try {
    parse_circuit(".v a,b\nxyz\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::string many = ".v x0";
  for (int i = 1; i < 65; ++i) many += ",x" + std::to_string(i);
  CHECK_THROWS_AS(parse_circuit(many + "\n"), ParseError);
}

TEST_CASE("single-wire header is a valid empty circuit") {
  const Circuit c = parse_circuit(".v a");
  CHECK(c.width() == 1);
  CHECK(c.gate_count() == 0);
  CHECK(c.depth() == 0);
}

TEST_CASE("emitter canonical form round-trips") {
  const Circuit c = example_circuit();
  CHECK(emit_circuit(c) == ".v a,b,c\nt2 a,b\nt2 b,c\n");

  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Rng sub = rng.split(i);
    const Circuit r = random_circuit(3 + i % 6, 1 + i, sub);
    const Circuit back = parse_circuit(emit_circuit(r));
    CHECK(back.width() == r.width());
    REQUIRE(back.gates() == r.gates());
    CHECK(back.depth() == r.depth());
  }
}

TEST_CASE("simulation matches the propagation tables") {
  const Circuit c = example_circuit();
  CHECK(simulate(c, BitVector::parse("010"), 0, 2).to_string() == "011");
  CHECK(simulate(c, BitVector::parse("111"), 0, 2).to_string() == "101");
  CHECK(simulate(c, BitVector::parse("000")).to_string() == "000");

  for (unsigned level = 0; level <= 2; ++level)
    for (std::uint64_t v = 0; v < 8; ++v)
      CHECK(simulate(c, BitVector(3, v), level, level) == BitVector(3, v));

  CHECK_THROWS_AS(simulate(c, BitVector::parse("01")), Error);
  CHECK_THROWS_AS(simulate(c, BitVector::parse("010"), 1, 3), Error);
  CHECK_THROWS_AS(simulate(c, BitVector::parse("010"), 2, 1), Error);
}

TEST_CASE("inverse simulation") {
  const Circuit c = example_circuit();
  CHECK(simulate_inverse(c, BitVector::parse("101"), 0, 2).to_string() ==
        "111");
  CHECK(simulate_inverse(c, BitVector::parse("111"), 0, 1).to_string() ==
        "101");
}

TEST_CASE("inverse round-trips on random circuits and level pairs") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    Rng sub = rng.split(i);
    const unsigned n = 3 + static_cast<unsigned>(sub.below(28));
    const Circuit c = random_circuit(n, 1 + static_cast<unsigned>(sub.below(200)), sub);
    for (int s = 0; s < 25; ++s) {
      const BitVector v(n, sub.next() & BitVector::mask_for(n));
      unsigned a = static_cast<unsigned>(sub.below(c.depth() + 1));
      unsigned b = static_cast<unsigned>(sub.below(c.depth() + 1));
      if (a > b) std::swap(a, b);
      CHECK(simulate(c, simulate_inverse(c, v, a, b), a, b) == v);
      CHECK(simulate_inverse(c, simulate(c, v, a, b), a, b) == v);
    }
  }
}

TEST_CASE("trace lists the state at every level") {
  const Circuit c = example_circuit();
  const LevelTrace t = trace(c, BitVector::parse("010"));
  REQUIRE(t.values.size() == 3);
  CHECK(t.at(0).to_string() == "010");
  CHECK(t.at(1).to_string() == "010");  // gate 1 leaves b alone when a=0
  CHECK(t.at(2).to_string() == "011");

  const LevelTrace zeros = trace(c, BitVector::parse("000"));
  for (const BitVector& v : zeros.values) CHECK(v.value() == 0);

  const Circuit empty = revtest::testing::empty_circuit(4);
  const LevelTrace e = trace(empty, BitVector::parse("1010"));
  REQUIRE(e.values.size() == 1);
  CHECK(e.at(0).to_string() == "1010");
}

TEST_CASE("trace materializes pass-through values at every level") {
  const Circuit c = parse_circuit(".v a,b\nt1 a\nt1 a\n");
  CHECK(c.depth() == 2);
  const LevelTrace t = trace(c, BitVector::parse("10"));
  CHECK(t.at(0).to_string() == "10");
  CHECK(t.at(1).to_string() == "00");
  CHECK(t.at(2).to_string() == "10");
}

TEST_CASE("gates on disjoint wires share a level") {
  const Circuit c = parse_circuit(".v a,b,c,d\nt2 a,b\nt2 c,d\nt1 a\n");
  CHECK(c.gate_level(0) == 1);
  CHECK(c.gate_level(1) == 1);
  CHECK(c.gate_level(2) == 2);
  CHECK(c.depth() == 2);
}

TEST_CASE("gate validation") {
  CHECK_THROWS_AS(Circuit(2, {Gate::cnot(0, 2)}), Error);
  CHECK_THROWS_AS(Circuit(2, {Gate::cnot(1, 1)}), Error);
  CHECK_THROWS_AS(Circuit(0, {}), Error);
  CHECK_THROWS_AS(Circuit(65, {}), Error);
}

TEST_CASE("full-circuit function is a permutation") {
  Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    Rng sub = rng.split(i);
    const unsigned n = 3 + static_cast<unsigned>(sub.below(6));
    const Circuit c =
        random_circuit(n, 1 + static_cast<unsigned>(sub.below(60)), sub);
    std::set<std::uint64_t> images;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
      images.insert(simulate(c, BitVector(n, v)).value());
    CHECK(images.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("levels increase strictly along every wire") {
  Rng rng(37);
  for (int i = 0; i < 25; ++i) {
    Rng sub = rng.split(i);
    const unsigned n = 3 + static_cast<unsigned>(sub.below(20));
    const Circuit c =
        random_circuit(n, 1 + static_cast<unsigned>(sub.below(150)), sub);
    std::vector<unsigned> last(n, 0);
    for (std::size_t g = 0; g < c.gate_count(); ++g)
      for (unsigned pin = 0; pin < c.gate(g).size(); ++pin) {
        const unsigned w = c.gate(g).pin_wire(pin);
        CHECK(c.gate_level(g) > last[w]);
        last[w] = c.gate_level(g);
      }
  }
}
