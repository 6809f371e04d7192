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

#include "revtest/cover.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "revtest/error.hpp"

namespace revtest {
namespace {

using Words = std::vector<std::uint64_t>;

std::size_t popcount(const Words& w) {
  std::size_t n = 0;
  for (std::uint64_t x : w) n += std::popcount(x);
  return n;
}

bool is_subset(const Words& a, const Words& b) {  // a subset of b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

struct WordsHash {
  std::size_t operator()(const Words& w) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t x : w) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

template <typename F>
void for_each_bit(const Words& words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      f(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

class Search {
 public:
  Search(const CoverProblem& p, SolveLimits limits) : p_(p), limits_(limits) {
    words_ = p.words_per_row();
  }

  Solution run();

 private:
  const CoverProblem& p_;
  SolveLimits limits_;
  std::size_t words_ = 0;

  // Problem view after preprocessing.
  std::vector<Words> rows_;
  std::vector<std::uint32_t> live_cols_;
  std::vector<std::uint32_t> forced_;
  unsigned forced_cost_ = 0;

  // Mutual exclusion: columns of one group, minus dead columns.
  std::unordered_map<std::int32_t, std::vector<std::uint32_t>> group_members_;

  // Search state.
  std::vector<Words> col_rows_;  // column -> rows bitset
  std::size_t row_words_ = 0;
  std::vector<std::uint32_t> row_live_count_;
  std::vector<bool> row_covered_;
  std::size_t uncovered_ = 0;
  std::vector<std::uint32_t> excluded_;  // exclusion counters per column
  Words cost0_cols_;
  std::vector<std::uint32_t> chosen_;
  unsigned chosen_cost_ = 0;

  std::vector<std::uint32_t> best_;
  unsigned best_cost_ = 0;
  bool have_best_ = false;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_ = false;

  void preprocess();
  void build_search_state();
  void greedy_incumbent();
  unsigned lower_bound() const;
  void exclude(std::uint32_t col);
  void unexclude(std::uint32_t col);
  void select(std::uint32_t col, std::vector<std::uint32_t>& covered_undo,
              std::vector<std::uint32_t>& excluded_undo);
  void unselect(std::uint32_t col,
                const std::vector<std::uint32_t>& covered_undo,
                const std::vector<std::uint32_t>& excluded_undo);
  void recurse();
  bool out_of_budget();
};

void Search::preprocess() {
  const std::size_t n_rows = p_.rows.size();

  // Duplicate rows collapse to one.
  std::vector<std::uint32_t> uniq;
  uniq.reserve(n_rows);
  {
    std::unordered_map<Words, std::uint32_t, WordsHash> seen;
    for (std::uint32_t r = 0; r < n_rows; ++r) {
      if (popcount(p_.rows[r]) == 0)
        throw InfeasibleError("cover row " + std::to_string(r) +
                              " has no covering column");
      if (seen.emplace(p_.rows[r], r).second) uniq.push_back(r);
    }
  }

  // A row whose coverer set contains another row's is implied by it.
  std::vector<bool> drop(uniq.size(), false);
  if (uniq.size() <= 2048) {
    std::vector<std::uint32_t> by_size(uniq.size());
    for (std::uint32_t i = 0; i < uniq.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return popcount(p_.rows[uniq[a]]) <
                              popcount(p_.rows[uniq[b]]);
                     });
    for (std::size_t i = 0; i < by_size.size(); ++i) {
      if (drop[by_size[i]]) continue;
      const Words& small = p_.rows[uniq[by_size[i]]];
      for (std::size_t j = i + 1; j < by_size.size(); ++j) {
        if (drop[by_size[j]]) continue;
        if (is_subset(small, p_.rows[uniq[by_size[j]]])) drop[by_size[j]] = true;
      }
    }
  }

  rows_.clear();
  for (std::size_t i = 0; i < uniq.size(); ++i)
    if (!drop[i]) rows_.push_back(p_.rows[uniq[i]]);

  // Forcing fixpoint: a row with a single live coverer forces that column;
  // a forced column removes the rows it covers and kills its group
  // siblings, which may force further columns.
  std::vector<bool> col_forced(p_.num_columns, false);
  std::vector<bool> col_dead(p_.num_columns, false);
  for (bool changed = true; changed;) {
    changed = false;
    Words dead_mask(words_, 0);
    bool have_dead = false;
    for (const Words& row : rows_) {
      if (popcount(row) != 1) continue;
      for_each_bit(row, [&](std::uint32_t col) {
        if (col_forced[col]) return;
        col_forced[col] = true;
        changed = true;
        if (p_.group[col] >= 0)
          for (std::uint32_t sibling = 0; sibling < p_.num_columns; ++sibling)
            if (sibling != col && p_.group[sibling] == p_.group[col] &&
                !col_dead[sibling] && !col_forced[sibling]) {
              col_dead[sibling] = true;
              dead_mask[sibling / 64] |= std::uint64_t{1} << (sibling % 64);
              have_dead = true;
            }
      });
    }
    if (!changed) break;
    Words forced_mask(words_, 0);
    for (std::uint32_t c = 0; c < p_.num_columns; ++c)
      if (col_forced[c]) forced_mask[c / 64] |= std::uint64_t{1} << (c % 64);
    std::vector<Words> remaining;
    remaining.reserve(rows_.size());
    for (Words& row : rows_) {
      bool covered = false;
      for (std::size_t w = 0; w < words_ && !covered; ++w)
        covered = (row[w] & forced_mask[w]) != 0;
      if (covered) continue;
      if (have_dead) {
        bool empty = true;
        for (std::size_t w = 0; w < words_; ++w) {
          row[w] &= ~dead_mask[w];
          empty = empty && row[w] == 0;
        }
        if (empty)
          throw InfeasibleError(
              "mutually exclusive columns leave a row uncoverable");
      }
      remaining.push_back(std::move(row));
    }
    rows_ = std::move(remaining);
  }
  for (std::uint32_t c = 0; c < p_.num_columns; ++c)
    if (col_forced[c]) {
      forced_.push_back(c);
      forced_cost_ += p_.cost[c];
    }

  // Live columns: not forced, not dead, still covering something.
  Words useful(words_, 0);
  for (const Words& row : rows_)
    for (std::size_t w = 0; w < words_; ++w) useful[w] |= row[w];
  for (std::uint32_t c = 0; c < p_.num_columns; ++c)
    if (!col_forced[c] && !col_dead[c] &&
        ((useful[c / 64] >> (c % 64)) & 1u))
      live_cols_.push_back(c);

  // Dominated-column removal on small instances. A grouped column may only
  // be dominated from inside its own group; an ungrouped dominator is
  // always safe.
  if (!rows_.empty() && live_cols_.size() >= 2 &&
      live_cols_.size() * live_cols_.size() * ((rows_.size() + 63) / 64) <=
          (std::size_t{1} << 26)) {
    const std::size_t rw = (rows_.size() + 63) / 64;
    std::vector<Words> cover(live_cols_.size(), Words(rw, 0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t i = 0; i < live_cols_.size(); ++i)
        if ((rows_[r][live_cols_[i] / 64] >> (live_cols_[i] % 64)) & 1u)
          cover[i][r / 64] |= std::uint64_t{1} << (r % 64);

    auto order_before = [&](std::size_t a, std::size_t b) {
      if (p_.cost[live_cols_[a]] != p_.cost[live_cols_[b]])
        return p_.cost[live_cols_[a]] < p_.cost[live_cols_[b]];
      if (p_.column_key[live_cols_[a]] != p_.column_key[live_cols_[b]])
        return p_.column_key[live_cols_[a]] < p_.column_key[live_cols_[b]];
      return live_cols_[a] < live_cols_[b];
    };
    std::vector<bool> dead(live_cols_.size(), false);
    for (std::size_t i = 0; i < live_cols_.size(); ++i) {
      for (std::size_t j = 0; j < live_cols_.size() && !dead[i]; ++j) {
        if (i == j || dead[j]) continue;
        const std::uint32_t ci = live_cols_[i], cj = live_cols_[j];
        // A grouped dominator may be unavailable when its group is already
        // used, so it can only displace columns of its own group.
        if (p_.group[cj] >= 0 && p_.group[cj] != p_.group[ci]) continue;
        if (p_.cost[cj] > p_.cost[ci]) continue;
        if (!is_subset(cover[i], cover[j])) continue;
        const bool equal =
            is_subset(cover[j], cover[i]) && p_.cost[ci] == p_.cost[cj];
        if (equal && order_before(i, j)) continue;  // keep the earlier one
        dead[i] = true;
      }
    }
    std::vector<std::uint32_t> kept;
    kept.reserve(live_cols_.size());
    for (std::size_t i = 0; i < live_cols_.size(); ++i)
      if (!dead[i]) kept.push_back(live_cols_[i]);
    live_cols_ = std::move(kept);

    Words keep_mask(words_, 0);
    for (std::uint32_t c : live_cols_)
      keep_mask[c / 64] |= std::uint64_t{1} << (c % 64);
    for (Words& row : rows_)
      for (std::size_t w = 0; w < words_; ++w) row[w] &= keep_mask[w];
  }

  for (std::uint32_t c : live_cols_)
    if (p_.group[c] >= 0) group_members_[p_.group[c]].push_back(c);
}

void Search::build_search_state() {
  row_words_ = (rows_.size() + 63) / 64;
  col_rows_.assign(p_.num_columns, Words(row_words_, 0));
  row_live_count_.assign(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for_each_bit(rows_[r], [&](std::uint32_t col) {
      col_rows_[col][r / 64] |= std::uint64_t{1} << (r % 64);
      ++row_live_count_[r];
    });
  row_covered_.assign(rows_.size(), false);
  uncovered_ = rows_.size();
  excluded_.assign(p_.num_columns, 0);
  cost0_cols_.assign(words_, 0);
  for (std::uint32_t c : live_cols_)
    if (p_.cost[c] == 0) cost0_cols_[c / 64] |= std::uint64_t{1} << (c % 64);
}

void Search::greedy_incumbent() {
  std::vector<bool> covered = row_covered_;
  std::vector<bool> blocked(p_.num_columns, false);
  std::size_t uncovered = uncovered_;
  std::vector<std::uint32_t> picks;
  unsigned cost = 0;

  while (uncovered > 0) {
    std::int64_t best = -1;
    std::size_t best_new = 0;
    for (std::uint32_t c : live_cols_) {
      if (blocked[c]) continue;
      std::size_t nc = 0;
      for_each_bit(col_rows_[c], [&](std::uint32_t r) {
        if (!covered[r]) ++nc;
      });
      if (nc == 0) continue;
      if (best < 0) {
        best = c;
        best_new = nc;
        continue;
      }
      const std::uint32_t b = static_cast<std::uint32_t>(best);
      if (p_.cost[c] != p_.cost[b]) {
        if (p_.cost[c] < p_.cost[b]) {
          best = c;
          best_new = nc;
        }
        continue;
      }
      if (nc != best_new) {
        if (nc > best_new) {
          best = c;
          best_new = nc;
        }
        continue;
      }
      if (p_.column_key[c] < p_.column_key[b]) {
        best = c;
        best_new = nc;
      }
    }
    if (best < 0)
      throw InfeasibleError(
          "mutually exclusive columns leave a row uncoverable");
    const std::uint32_t c = static_cast<std::uint32_t>(best);
    picks.push_back(c);
    cost += p_.cost[c];
    for_each_bit(col_rows_[c], [&](std::uint32_t r) {
      if (!covered[r]) {
        covered[r] = true;
        --uncovered;
      }
    });
    if (p_.group[c] >= 0)
      for (std::uint32_t sibling : group_members_[p_.group[c]])
        blocked[sibling] = true;
  }
  best_ = std::move(picks);
  best_cost_ = cost;
  have_best_ = true;
}

unsigned Search::lower_bound() const {
  unsigned lb = 0;
  Words used(words_, 0);
  Words live(words_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row_covered_[r]) continue;
    bool zero_cost = false;
    bool disjoint = true;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t masked = rows_[r][w];
      std::uint64_t probe = masked;
      while (probe) {
        const std::uint32_t col =
            static_cast<std::uint32_t>(w * 64 + std::countr_zero(probe));
        probe &= probe - 1;
        if (excluded_[col]) masked &= ~(std::uint64_t{1} << (col % 64));
      }
      live[w] = masked;
      if (masked & cost0_cols_[w]) zero_cost = true;
      if (masked & used[w]) disjoint = false;
    }
    if (zero_cost || !disjoint) {
      for (std::size_t w = 0; w < words_; ++w) live[w] = 0;
      continue;
    }
    ++lb;
    for (std::size_t w = 0; w < words_; ++w) {
      used[w] |= live[w];
      live[w] = 0;
    }
  }
  return lb;
}

void Search::exclude(std::uint32_t col) {
  if (excluded_[col]++ == 0)
    for_each_bit(col_rows_[col], [&](std::uint32_t r) { --row_live_count_[r]; });
}

void Search::unexclude(std::uint32_t col) {
  if (--excluded_[col] == 0)
    for_each_bit(col_rows_[col], [&](std::uint32_t r) { ++row_live_count_[r]; });
}

void Search::select(std::uint32_t col,
                    std::vector<std::uint32_t>& covered_undo,
                    std::vector<std::uint32_t>& excluded_undo) {
  chosen_.push_back(col);
  chosen_cost_ += p_.cost[col];
  for_each_bit(col_rows_[col], [&](std::uint32_t r) {
    if (!row_covered_[r]) {
      row_covered_[r] = true;
      --uncovered_;
      covered_undo.push_back(r);
    }
  });
  if (p_.group[col] >= 0)
    for (std::uint32_t sibling : group_members_[p_.group[col]])
      if (sibling != col) {
        exclude(sibling);
        excluded_undo.push_back(sibling);
      }
}

void Search::unselect(std::uint32_t col,
                      const std::vector<std::uint32_t>& covered_undo,
                      const std::vector<std::uint32_t>& excluded_undo) {
  chosen_.pop_back();
  chosen_cost_ -= p_.cost[col];
  for (std::uint32_t r : covered_undo) {
    row_covered_[r] = false;
    ++uncovered_;
  }
  for (std::uint32_t sibling : excluded_undo) unexclude(sibling);
}

bool Search::out_of_budget() {
  if (limits_.max_nodes && nodes_ > limits_.max_nodes) return true;
  if (has_deadline_ && (nodes_ % 1024 == 0) &&
      std::chrono::steady_clock::now() > deadline_)
    return true;
  return false;
}

void Search::recurse() {
  ++nodes_;
  if (aborted_ || (aborted_ = out_of_budget())) return;

  if (uncovered_ == 0) {
    if (!have_best_ || chosen_cost_ < best_cost_) {
      best_ = chosen_;
      best_cost_ = chosen_cost_;
      have_best_ = true;
    }
    return;
  }
  if (have_best_ && chosen_cost_ + lower_bound() >= best_cost_) return;

  // Branch on the uncovered row with the fewest live coverers.
  std::size_t branch_row = rows_.size();
  std::uint32_t branch_count = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row_covered_[r]) continue;
    if (branch_row == rows_.size() || row_live_count_[r] < branch_count) {
      branch_row = r;
      branch_count = row_live_count_[r];
      if (branch_count <= 1) break;
    }
  }
  if (branch_count == 0) return;  // all coverers excluded on this path

  std::vector<std::uint32_t> candidates;
  candidates.reserve(branch_count);
  for_each_bit(rows_[branch_row], [&](std::uint32_t col) {
    if (!excluded_[col]) candidates.push_back(col);
  });
  std::vector<std::size_t> newcov(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::size_t nc = 0;
    for_each_bit(col_rows_[candidates[i]], [&](std::uint32_t r) {
      if (!row_covered_[r]) ++nc;
    });
    newcov[i] = nc;
  }
  std::vector<std::uint32_t> idx(candidates.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t ca = candidates[a], cb = candidates[b];
    if (p_.cost[ca] != p_.cost[cb]) return p_.cost[ca] < p_.cost[cb];
    if (newcov[a] != newcov[b]) return newcov[a] > newcov[b];
    if (p_.column_key[ca] != p_.column_key[cb])
      return p_.column_key[ca] < p_.column_key[cb];
    return ca < cb;
  });

  std::vector<std::uint32_t> excluded_here;
  std::vector<std::uint32_t> covered_undo, excluded_undo;
  for (std::uint32_t i : idx) {
    const std::uint32_t col = candidates[i];
    if (excluded_[col]) continue;  // a sibling of an earlier child
    covered_undo.clear();
    excluded_undo.clear();
    select(col, covered_undo, excluded_undo);
    recurse();
    unselect(col, covered_undo, excluded_undo);
    if (aborted_) break;
    exclude(col);
    excluded_here.push_back(col);
  }
  for (std::uint32_t col : excluded_here) unexclude(col);
}

Solution Search::run() {
  if (limits_.max_seconds > 0) {
    has_deadline_ = true;
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(limits_.max_seconds));
  }
  preprocess();
  build_search_state();
  if (!rows_.empty()) {
    greedy_incumbent();
    recurse();
  } else {
    best_.clear();
    have_best_ = true;
  }

  Solution s;
  s.selected = forced_;
  s.selected.insert(s.selected.end(), best_.begin(), best_.end());
  std::sort(s.selected.begin(), s.selected.end());
  s.objective = forced_cost_ + best_cost_;
  s.optimal = !aborted_;
  s.nodes = nodes_;
  return s;
}

}  // namespace

Solution solve_exact(const CoverProblem& p, SolveLimits limits) {
  Search search(p, limits);
  return search.run();
}

CoverProblem cover_problem_from_matrix(const CoverageMatrix& m) {
  CoverProblem p(m.columns());
  for (std::size_t c = 0; c < m.columns(); ++c)
    p.column_key[c] = m.candidates[c].value();
  p.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    p.rows.emplace_back(row.begin(), row.end());
    p.rows.back().resize(p.words_per_row(), 0);
  }
  return p;
}

TestSet min_test_set(const Circuit& c, FaultModel model, SolveLimits limits) {
  if (c.width() > 16)
    throw Error("min_test_set enumerates all 2^n candidates; width " +
                std::to_string(c.width()) + " exceeds the 16-wire guard");
  const CoverageMatrix m = build_matrix_full(c, model);
  const Solution s = solve_exact(cover_problem_from_matrix(m), limits);
  TestSet tests;
  tests.reserve(s.selected.size());
  for (std::uint32_t col : s.selected) tests.push_back(m.candidates[col]);
  return tests;
}

TestSet compact(const Circuit& c, const TestSet& tests, FaultModel model,
                SolveLimits limits) {
  if (model == FaultModel::cell) {
    const CellReport report = is_complete_cell(c, tests);
    if (!report.complete)
      throw Error("test set is not cell-complete; " +
                  std::to_string(report.uncovered.size()) +
                  " requirements uncovered, first " +
                  to_string(CellFaultRequirement{report.uncovered[0].gate,
                                                 report.uncovered[0].pattern},
                            c.gate(report.uncovered[0].gate).size()));
  } else {
    const StuckAtReport report = is_complete_stuck_at(c, tests);
    if (!report.complete)
      throw Error(
          "test set is not stuck-at-complete; " +
          std::to_string(report.uncovered.size()) + " sites uncovered, first " +
          to_string(StuckAtFault{LevelSite{report.uncovered[0].level,
                                           report.uncovered[0].wire},
                                 !report.uncovered[0].value}));
  }
  const CoverageMatrix m = build_matrix(c, model, tests);
  const Solution s = solve_exact(cover_problem_from_matrix(m), limits);
  TestSet subset;
  subset.reserve(s.selected.size());
  for (std::uint32_t col : s.selected) subset.push_back(m.candidates[col]);
  return subset;
}

}  // namespace revtest
