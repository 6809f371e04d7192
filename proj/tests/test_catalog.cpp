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

#include "revtest/catalog.hpp"
#include "test_util.hpp"

using namespace revtest;

namespace {

const OptimalCatalog& catalog() {
  static const OptimalCatalog instance = enumerate_optimal_3wire();
  return instance;
}

std::array<std::uint8_t, 8> images_of(const Circuit& c) {
  std::array<std::uint8_t, 8> images{};
  for (unsigned x = 0; x < 8; ++x)
    images[x] = static_cast<std::uint8_t>(simulate(c, BitVector(3, x)).value());
  return images;
}

// Depth-limited search for any circuit of at most `depth` gates computing
// the target permutation; used to re-certify BFS optimality independently.
bool reachable_within(const std::array<std::uint8_t, 8>& target,
                      const std::array<std::uint8_t, 8>& state,
                      unsigned depth) {
  if (state == target) return true;
  if (depth == 0) return false;
  for (unsigned g = 0; g < OptimalCatalog::kGateUniverse; ++g) {
    const auto images = OptimalCatalog::gate_images(g);
    std::array<std::uint8_t, 8> next;
    for (unsigned x = 0; x < 8; ++x) next[x] = images[state[x]];
    if (reachable_within(target, next, depth - 1)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("lehmer rank and unrank are inverse") {
  for (std::uint32_t rank : {0u, 1u, 5039u, 40319u, 12345u, 30000u}) {
    const auto perm = OptimalCatalog::perm_of_rank(rank);
    CHECK(OptimalCatalog::rank_of_perm(perm) == rank);
  }
  const std::array<std::uint8_t, 8> identity{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(OptimalCatalog::rank_of_perm(identity) == 0);
}

TEST_CASE("catalog histogram matches the known length distribution") {
  const auto histogram = catalog().length_histogram();
  const std::array<std::uint32_t, 9> expected{1,    12,    102,  625, 2780,
                                              8921, 17049, 10253, 577};
  CHECK(histogram == expected);
  std::uint64_t total = 0;
  for (std::uint32_t h : histogram) total += h;
  CHECK(total == 40320);
  CHECK(catalog().max_length() == 8);
}

TEST_CASE("witness circuits compute their permutation at witness length") {
  Rng rng(4096);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t rank =
        static_cast<std::uint32_t>(rng.below(OptimalCatalog::kFunctions));
    const Circuit c = catalog().circuit_for(rank);
    CHECK(c.gate_count() == catalog().entry(rank).length);
    CHECK(images_of(c) == OptimalCatalog::perm_of_rank(rank));
  }
}

TEST_CASE("no shorter circuit exists for sampled catalog entries") {
  Rng rng(2048);
  const std::array<std::uint8_t, 8> identity{0, 1, 2, 3, 4, 5, 6, 7};
  unsigned checked = 0;
  while (checked < 60) {
    const std::uint32_t rank =
        static_cast<std::uint32_t>(rng.below(OptimalCatalog::kFunctions));
    const unsigned length = catalog().entry(rank).length;
    if (length == 0 || length > 5) continue;
    const auto target = OptimalCatalog::perm_of_rank(rank);
    CHECK(!reachable_within(target, identity, length - 1));
    ++checked;
  }
}
