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

#include "revtest/catalog.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "revtest/error.hpp"
#include "revtest/random.hpp"

namespace revtest {

std::uint32_t OptimalCatalog::rank_of_perm(
    const std::array<std::uint8_t, 8>& perm) {
  // Lehmer code: digit i counts smaller images to the right.
  std::uint32_t rank = 0;
  for (unsigned i = 0; i < 8; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < 8; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (8 - i) + smaller;
  }
  return rank;
}

std::array<std::uint8_t, 8> OptimalCatalog::perm_of_rank(std::uint32_t rank) {
  std::array<std::uint8_t, 8> digits{};
  for (unsigned i = 8; i-- > 0;) {
    digits[i] = static_cast<std::uint8_t>(rank % (8 - i));
    rank /= (8 - i);
  }
  std::array<std::uint8_t, 8> pool{0, 1, 2, 3, 4, 5, 6, 7};
  std::array<std::uint8_t, 8> perm{};
  std::uint8_t size = 8;
  for (unsigned i = 0; i < 8; ++i) {
    const std::uint8_t d = digits[i];
    perm[i] = pool[d];
    for (std::uint8_t j = d; j + 1 < size; ++j) pool[j] = pool[j + 1];
    --size;
  }
  return perm;
}

Gate OptimalCatalog::universe_gate(unsigned index) {
  return decode_gate(3, index, GateLibrary::nct);
}

std::array<std::uint8_t, 8> OptimalCatalog::gate_images(unsigned index) {
  const Gate g = universe_gate(index);
  std::uint64_t cmask = 0;
  for (unsigned k = 0; k < g.num_controls; ++k)
    cmask |= std::uint64_t{1} << (2 - g.controls[k]);
  const std::uint64_t tmask = std::uint64_t{1} << (2 - g.target);
  std::array<std::uint8_t, 8> images{};
  for (unsigned x = 0; x < 8; ++x)
    images[x] = static_cast<std::uint8_t>(
        (x & cmask) == cmask ? x ^ tmask : x);
  return images;
}

OptimalCatalog enumerate_optimal_3wire() {
  OptimalCatalog catalog;
  catalog.entries_.assign(OptimalCatalog::kFunctions, OptimalCatalog::Entry{});
  std::vector<bool> seen(OptimalCatalog::kFunctions, false);

  std::array<std::array<std::uint8_t, 8>, OptimalCatalog::kGateUniverse> images;
  for (unsigned g = 0; g < OptimalCatalog::kGateUniverse; ++g)
    images[g] = OptimalCatalog::gate_images(g);

  const std::array<std::uint8_t, 8> identity{0, 1, 2, 3, 4, 5, 6, 7};
  const std::uint32_t root = OptimalCatalog::rank_of_perm(identity);
  seen[root] = true;
  catalog.entries_[root] = {0, -1, -1};

  std::deque<std::pair<std::uint32_t, std::array<std::uint8_t, 8>>> queue;
  queue.emplace_back(root, identity);
  while (!queue.empty()) {
    const auto [rank, perm] = queue.front();
    queue.pop_front();
    const std::uint8_t depth = catalog.entries_[rank].length;
    for (unsigned g = 0; g < OptimalCatalog::kGateUniverse; ++g) {
      std::array<std::uint8_t, 8> next;
      for (unsigned x = 0; x < 8; ++x) next[x] = images[g][perm[x]];
      const std::uint32_t next_rank = OptimalCatalog::rank_of_perm(next);
      if (seen[next_rank]) continue;
      seen[next_rank] = true;
      catalog.entries_[next_rank] = {static_cast<std::uint8_t>(depth + 1),
                                     static_cast<std::int8_t>(g),
                                     static_cast<std::int32_t>(rank)};
      queue.emplace_back(next_rank, next);
    }
  }

  for (bool s : seen)
    if (!s) throw Error("internal: 3-wire enumeration missed a permutation");
  return catalog;
}

std::array<std::uint32_t, 9> OptimalCatalog::length_histogram() const {
  std::array<std::uint32_t, 9> histogram{};
  for (const Entry& e : entries_) ++histogram[e.length];
  return histogram;
}

unsigned OptimalCatalog::max_length() const {
  unsigned max = 0;
  for (const Entry& e : entries_) max = std::max<unsigned>(max, e.length);
  return max;
}

Circuit OptimalCatalog::circuit_for(std::uint32_t rank) const {
  std::vector<Gate> gates;
  std::uint32_t at = rank;
  while (entries_[at].via_gate >= 0) {
    gates.push_back(universe_gate(static_cast<unsigned>(entries_[at].via_gate)));
    at = static_cast<std::uint32_t>(entries_[at].parent);
  }
  std::reverse(gates.begin(), gates.end());
  return Circuit(3, std::move(gates));
}

std::array<std::uint32_t, 9> TestSizeDistribution::length_totals() const {
  std::array<std::uint32_t, 9> totals{};
  for (const auto& row : count)
    for (unsigned l = 0; l < 9; ++l) totals[l] += row[l];
  return totals;
}

TestSizeDistribution test_size_distribution(const OptimalCatalog& catalog) {
  TestSizeDistribution dist;
  for (std::uint32_t rank = 0; rank < OptimalCatalog::kFunctions; ++rank) {
    const Circuit c = catalog.circuit_for(rank);
    const std::size_t size = min_test_set(c, FaultModel::stuck_at_level).size();
    ++dist.count[size][catalog.entry(rank).length];
    dist.max_test_size = std::max<unsigned>(dist.max_test_size,
                                            static_cast<unsigned>(size));
  }
  return dist;
}

Circuit find_suboptimal_3wire(const OptimalCatalog& catalog) {
  std::vector<Gate> gates;
  for (unsigned subset = 0; subset < 256; ++subset) {
    if (std::popcount(subset) != 4) continue;
    // A permutation parking this 4-subset on wire-0 = 0, i.e. images 0..3.
    std::array<std::uint8_t, 8> perm{};
    std::uint8_t lo = 0, hi = 4;
    for (unsigned x = 0; x < 8; ++x)
      perm[x] = (subset >> x) & 1u ? lo++ : hi++;
    const Circuit witness =
        catalog.circuit_for(OptimalCatalog::rank_of_perm(perm));
    const std::vector<Gate>& w = witness.gates();
    gates.insert(gates.end(), w.begin(), w.end());
    gates.insert(gates.end(), w.rbegin(), w.rend());

    Circuit c(3, gates);
    if (min_test_set(c, FaultModel::stuck_at_level).size() == 5) return c;
  }
  throw Error("internal: no 5-vector 3-wire circuit found");
}

}  // namespace revtest
