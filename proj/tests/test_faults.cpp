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

#include "revtest/faults.hpp"
#include "test_util.hpp"

using namespace revtest;
using revtest::testing::example_circuit;
using revtest::testing::small_circuit_suite;

TEST_CASE("fault universe counts") {
  const Circuit c = example_circuit();
  CHECK(enumerate_faults(c, FaultModel::stuck_at_level).size() == 18);
  CHECK(enumerate_faults(c, FaultModel::stuck_at_pin).size() == 14);
  CHECK(enumerate_faults(c, FaultModel::cell).size() == 8);

  const Circuit empty = revtest::testing::empty_circuit(2);
  CHECK(enumerate_faults(empty, FaultModel::stuck_at_level).size() == 4);
  CHECK(enumerate_faults(empty, FaultModel::stuck_at_pin).size() == 4);
  CHECK(enumerate_faults(empty, FaultModel::cell).size() == 0);
}

TEST_CASE("universe counts match the closed forms on random circuits") {
  for (const Circuit& c : small_circuit_suite(8, 60, 3, 99)) {
    const std::uint64_t sum_k = c.total_gate_inputs();
    CHECK(enumerate_faults(c, FaultModel::stuck_at_pin).size() ==
          2 * (c.width() + sum_k));
    CHECK(enumerate_faults(c, FaultModel::stuck_at_level).size() ==
          std::size_t{2} * c.width() * (c.depth() + 1));
  }
}

TEST_CASE("analytic detection on the example circuit") {
  const Circuit c = example_circuit();
  const BitVector all0 = BitVector::parse("000");

  // The all-zeros vector carries 0 on every pin, so it detects every
  // stuck-at-1 pin fault and no stuck-at-0 fault.
  for (const Fault& f : enumerate_faults(c, FaultModel::stuck_at_pin).faults) {
    const auto& sa = std::get<StuckAtFault>(f);
    CHECK(detects(c, all0, f) == sa.stuck_value);
  }

  CHECK(detects(c, BitVector::parse("010"),
                Fault{StuckAtFault{LevelSite{2, 2}, false}}));
  CHECK(!detects(c, all0, Fault{CellFaultRequirement{0, 3}}));
  CHECK(detects(c, BitVector::parse("111"), Fault{CellFaultRequirement{0, 3}}));
}

TEST_CASE("fault report strings") {
  CHECK(to_string(StuckAtFault{LevelSite{2, 1}, false}) == "SA0@L2.w1");
  CHECK(to_string(StuckAtFault{PinSite{3, 0}, true}) == "SA1@g3.p0");
  CHECK(to_string(StuckAtFault{OutputSite{5}, true}) == "SA1@out.w5");
  CHECK(to_string(CellFaultRequirement{1, 2}, 2) == "CELL@g1:10");
}

TEST_CASE("injection without faults is plain simulation") {
  const Circuit c = example_circuit();
  for (std::uint64_t v = 0; v < 8; ++v)
    CHECK(inject_and_simulate(c, BitVector(3, v), {}) ==
          simulate(c, BitVector(3, v)));
}

TEST_CASE("injection of the worked single fault") {
  const Circuit c = example_circuit();
  const MultipleFault mf{StuckAtFault{LevelSite{2, 2}, false}};
  CHECK(inject_and_simulate(c, BitVector::parse("010"), mf).to_string() ==
        "010");
  CHECK(simulate(c, BitVector::parse("010")).to_string() == "011");
}

TEST_CASE("injection rejects duplicate sites") {
  const Circuit c = example_circuit();
  const StuckAtFault f{LevelSite{1, 1}, false};
  CHECK_THROWS_AS(inject_and_simulate(c, BitVector::parse("000"), {f, f}),
                  Error);
}

TEST_CASE("analytic detection agrees with behavioral injection") {
  // The module's core oracle: for every single fault of every convention
  // and every input, output difference and detects() coincide.
  for (const Circuit& c : small_circuit_suite(6, 25, 2, 12345)) {
    std::vector<Fault> faults;
    for (auto model : {FaultModel::stuck_at_level, FaultModel::stuck_at_pin}) {
      const FaultUniverse u = enumerate_faults(c, model);
      faults.insert(faults.end(), u.faults.begin(), u.faults.end());
    }
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << c.width()); ++v) {
      const BitVector t(c.width(), v);
      const BitVector good = simulate(c, t);
      const LevelTrace tr = trace(c, t);
      for (const Fault& f : faults) {
        const BitVector bad =
            inject_and_simulate(c, t, {std::get<StuckAtFault>(f)});
        CHECK(detects(c, tr, f) == (bad != good));
      }
    }
  }
}

TEST_CASE("every vector covers exactly half of the pin faults") {
  for (const Circuit& c : small_circuit_suite(8, 40, 3, 777)) {
    const FaultUniverse u = enumerate_faults(c, FaultModel::stuck_at_pin);
    const std::size_t expect = c.width() + c.total_gate_inputs();
    Rng rng(c.gate_count() * 31 + c.width());
    for (int s = 0; s < 10; ++s) {
      const BitVector t(c.width(), rng.next() & BitVector::mask_for(c.width()));
      const LevelTrace tr = trace(c, t);
      std::size_t covered = 0;
      for (const Fault& f : u.faults)
        if (detects(c, tr, f)) ++covered;
      CHECK(covered == expect);
    }
  }
}

TEST_CASE("every fault is detected by exactly half of the inputs") {
  for (const Circuit& c : small_circuit_suite(6, 25, 2, 555)) {
    const std::uint64_t half = std::uint64_t{1} << (c.width() - 1);
    std::vector<LevelTrace> traces;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << c.width()); ++v)
      traces.push_back(trace(c, BitVector(c.width(), v)));
    for (auto model : {FaultModel::stuck_at_level, FaultModel::stuck_at_pin})
      for (const Fault& f : enumerate_faults(c, model).faults) {
        std::uint64_t detecting = 0;
        for (const LevelTrace& tr : traces)
          if (detects(c, tr, f)) ++detecting;
        CHECK(detecting == half);
      }
  }
}

TEST_CASE("every vector meets exactly l cell requirements") {
  for (const Circuit& c : small_circuit_suite(8, 40, 3, 4242)) {
    const FaultUniverse u = enumerate_faults(c, FaultModel::cell);
    Rng rng(c.gate_count() * 17 + 3);
    for (int s = 0; s < 10; ++s) {
      const BitVector t(c.width(), rng.next() & BitVector::mask_for(c.width()));
      const LevelTrace tr = trace(c, t);
      std::size_t met = 0;
      for (const Fault& f : u.faults)
        if (detects(c, tr, f)) ++met;
      CHECK(met == c.gate_count());
    }
  }
}

TEST_CASE("a k-gate requirement is met by exactly 2^(n-k) inputs") {
  for (const Circuit& c : small_circuit_suite(6, 25, 2, 31337)) {
    std::vector<LevelTrace> traces;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << c.width()); ++v)
      traces.push_back(trace(c, BitVector(c.width(), v)));
    for (const Fault& f : enumerate_faults(c, FaultModel::cell).faults) {
      const auto& req = std::get<CellFaultRequirement>(f);
      std::uint64_t met = 0;
      for (const LevelTrace& tr : traces)
        if (detects(c, tr, f)) ++met;
      CHECK(met == std::uint64_t{1}
                       << (c.width() - c.gate(req.gate).size()));
    }
  }
}

TEST_CASE("gate override simulates arbitrary cell corruption") {
  const Circuit c = example_circuit();
  const std::vector<unsigned> identity_cnot{0, 1, 3, 2};  // the true C-NOT
  for (std::uint64_t v = 0; v < 8; ++v)
    CHECK(simulate_with_gate_override(c, BitVector(3, v), 0, identity_cnot) ==
          simulate(c, BitVector(3, v)));

  // Corrupt gate 0 on pattern 01 only: inputs seeing that pattern change.
  std::vector<unsigned> faulty{0, 3, 3, 2};
  bool changed = false;
  for (std::uint64_t v = 0; v < 8; ++v) {
    const BitVector t(3, v);
    const bool sees = detects(c, t, Fault{CellFaultRequirement{0, 1}});
    const bool differs =
        simulate_with_gate_override(c, t, 0, faulty) != simulate(c, t);
    CHECK(differs == sees);
    changed |= differs;
  }
  CHECK(changed);
}
