// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amenable/group.hpp"
#include "amenable/rational.hpp"
#include "amenable/subshift.hpp"

namespace amenable::internal {

// Cell-by-cell dynamic program over a fixed ordering of a finite domain.
// Every occurrence of a forbidden pattern inside the domain is checked at
// the step that assigns its last cell. The state after step t holds the
// symbols of the cells that are still needed by a later check (the
// frontier), so patterns sharing a frontier are merged.
class FrontierEngine {
 public:
  FrontierEngine(const Subshift& sft, std::vector<GroupElement> cells);

  std::size_t steps() const { return cells_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<GroupElement>& cells() const { return cells_; }

  // Assigns `symbol` to cell t in `state` (the state before step t). Returns
  // false when a forbidden pattern completes; otherwise writes the state
  // after step t into `next`.
  bool advance(std::size_t t, const std::string& state, Symbol symbol,
               std::string& next) const;

  // layers[t] lists the distinct reachable states before step t;
  // transitions[t][state * |A| + symbol] is the index in layers[t + 1], or
  // -1 for a rejected assignment. alive[t][state] marks states with at least
  // one completion to the final step.
  struct Graph {
    std::vector<std::vector<std::string>> layers;
    std::vector<std::vector<std::int32_t>> transitions;
    std::vector<std::vector<char>> alive;
  };
  Graph build_graph() const;

  // Number of assignments to the first `prefix` cells that complete to an
  // admissible assignment of every cell.
  BigInt count_completable(std::size_t prefix) const;

  // Depth-first enumeration in lexicographic order of the symbol string.
  // Calls visit(assignment) for each admissible full assignment; stops early
  // when visit returns false.
  template <typename Visit>
  void enumerate(Visit&& visit) const;

 private:
  static constexpr std::uint32_t kCurrent = 0xffffffffu;

  struct Check {
    std::vector<std::uint32_t> slots;  // frontier slot, or kCurrent
    std::vector<Symbol> symbols;
  };
  struct Step {
    std::vector<Check> checks;
    std::vector<std::uint32_t> carry;  // next frontier slot <- slot / kCurrent
  };

  // Direct checks for enumeration: cell indices instead of frontier slots.
  struct CellCheck {
    std::vector<std::uint32_t> cells;
    std::vector<Symbol> symbols;
  };

  bool violates(const std::vector<Symbol>& assignment, std::size_t t) const;

  std::size_t alphabet_size_;
  std::vector<GroupElement> cells_;
  std::vector<Step> steps_;
  std::vector<std::vector<CellCheck>> cell_checks_;
};

template <typename Visit>
void FrontierEngine::enumerate(Visit&& visit) const {
  std::vector<Symbol> assignment(cells_.size(), 0);
  if (cells_.empty()) {
    visit(assignment);
    return;
  }
  // Iterative backtracking; assignment[t] is the next symbol to try at t.
  std::size_t t = 0;
  std::vector<std::size_t> next_symbol(cells_.size(), 0);
  while (true) {
    if (next_symbol[t] == alphabet_size_) {
      next_symbol[t] = 0;
      if (t == 0) return;
      --t;
      continue;
    }
    assignment[t] = static_cast<Symbol>(next_symbol[t]++);
    if (violates(assignment, t)) continue;
    if (t + 1 == cells_.size()) {
      if (!visit(assignment)) return;
      continue;
    }
    ++t;
  }
}

}  // namespace amenable::internal
