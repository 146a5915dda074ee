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

#include "frontier.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "amenable/errors.hpp"

namespace amenable::internal {
namespace {

constexpr std::size_t kMaxLayerStates = std::size_t{1} << 22;

}  // namespace

FrontierEngine::FrontierEngine(const Subshift& sft, std::vector<GroupElement> cells)
    : alphabet_size_(sft.alphabet_size()), cells_(std::move(cells)) {
  const std::size_t m = cells_.size();
  std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> position;
  position.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) {
    if (!sft.group().contains(cells_[i])) {
      throw UsageError("cell " + cells_[i].to_string() + " is not in " + sft.group().name());
    }
    if (!position.emplace(cells_[i], static_cast<std::uint32_t>(i)).second) {
      throw UsageError("duplicate cell " + cells_[i].to_string());
    }
  }

  // Every h with dom(P) h inside the domain is found exactly once by placing
  // the first domain element of P on each cell in turn.
  cell_checks_.assign(m, {});
  std::vector<std::size_t> last_use(m, 0);
  std::vector<bool> used(m, false);
  for (const Pattern& p : sft.forbidden()) {
    const FiniteSubset& d = p.domain();
    const GroupElement lead_inverse = inverse(d[0]);
    for (std::size_t f = 0; f < m; ++f) {
      const GroupElement h = multiply(lead_inverse, cells_[f]);
      CellCheck check;
      check.cells.reserve(d.size());
      bool inside = true;
      for (const GroupElement& offset : d) {
        auto it = position.find(multiply(offset, h));
        if (it == position.end()) {
          inside = false;
          break;
        }
        check.cells.push_back(it->second);
      }
      if (!inside) continue;
      check.symbols.assign(p.symbols().begin(), p.symbols().end());
      std::uint32_t fire = 0;
      for (std::uint32_t c : check.cells) fire = std::max(fire, c);
      for (std::uint32_t c : check.cells) {
        last_use[c] = used[c] ? std::max(last_use[c], std::size_t{fire}) : fire;
        used[c] = true;
      }
      cell_checks_[fire].push_back(std::move(check));
    }
  }

  steps_.resize(m);
  std::vector<std::uint32_t> frontier;  // cells held before step t
  std::vector<std::uint32_t> slot_of(m, kCurrent);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      slot_of[frontier[k]] = static_cast<std::uint32_t>(k);
    }
    Step& step = steps_[t];
    for (const CellCheck& cc : cell_checks_[t]) {
      Check check;
      check.symbols = cc.symbols;
      for (std::uint32_t c : cc.cells) {
        check.slots.push_back(c == t ? kCurrent : slot_of[c]);
      }
      step.checks.push_back(std::move(check));
    }
    std::vector<std::uint32_t> next;
    for (std::uint32_t c : frontier) {
      if (last_use[c] > t) {
        next.push_back(c);
        step.carry.push_back(slot_of[c]);
      }
    }
    if (used[t] && last_use[t] > t) {
      next.push_back(static_cast<std::uint32_t>(t));
      step.carry.push_back(kCurrent);
    }
    for (std::uint32_t c : frontier) slot_of[c] = kCurrent;
    frontier = std::move(next);
  }
}

bool FrontierEngine::advance(std::size_t t, const std::string& state, Symbol symbol,
                             std::string& next) const {
  const Step& step = steps_[t];
  for (const Check& check : step.checks) {
    bool match = true;
    for (std::size_t k = 0; k < check.slots.size() && match; ++k) {
      const std::uint32_t slot = check.slots[k];
      const Symbol have = slot == kCurrent ? symbol : static_cast<Symbol>(state[slot]);
      match = have == check.symbols[k];
    }
    if (match) return false;
  }
  next.resize(step.carry.size());
  for (std::size_t k = 0; k < step.carry.size(); ++k) {
    const std::uint32_t slot = step.carry[k];
    next[k] = static_cast<char>(slot == kCurrent ? symbol : static_cast<Symbol>(state[slot]));
  }
  return true;
}

bool FrontierEngine::violates(const std::vector<Symbol>& assignment, std::size_t t) const {
  for (const CellCheck& check : cell_checks_[t]) {
    bool match = true;
    for (std::size_t k = 0; k < check.cells.size() && match; ++k) {
      match = assignment[check.cells[k]] == check.symbols[k];
    }
    if (match) return true;
  }
  return false;
}

FrontierEngine::Graph FrontierEngine::build_graph() const {
  const std::size_t m = cells_.size();
  const std::size_t k = alphabet_size_;
  Graph g;
  g.layers.resize(m + 1);
  g.transitions.resize(m);
  g.alive.resize(m + 1);
  g.layers[0].push_back(std::string());
  std::string next;
  for (std::size_t t = 0; t < m; ++t) {
    std::unordered_map<std::string, std::int32_t> index;
    auto& out = g.layers[t + 1];
    auto& trans = g.transitions[t];
    trans.assign(g.layers[t].size() * k, -1);
    for (std::size_t s = 0; s < g.layers[t].size(); ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        if (!advance(t, g.layers[t][s], static_cast<Symbol>(a), next)) continue;
        auto [it, inserted] = index.emplace(next, static_cast<std::int32_t>(out.size()));
        if (inserted) {
          out.push_back(next);
          if (out.size() > kMaxLayerStates) {
            throw DomainError("frontier state space exceeds " +
                              std::to_string(kMaxLayerStates) + " states");
          }
        }
        trans[s * k + a] = it->second;
      }
    }
  }
  g.alive[m].assign(g.layers[m].size(), 1);
  for (std::size_t t = m; t-- > 0;) {
    g.alive[t].assign(g.layers[t].size(), 0);
    for (std::size_t s = 0; s < g.layers[t].size(); ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        const std::int32_t to = g.transitions[t][s * k + a];
        if (to >= 0 && g.alive[t + 1][static_cast<std::size_t>(to)]) {
          g.alive[t][s] = 1;
          break;
        }
      }
    }
  }
  return g;
}

BigInt FrontierEngine::count_completable(std::size_t prefix) const {
  if (prefix > cells_.size()) throw UsageError("prefix longer than the cell order");
  const Graph g = build_graph();
  const std::size_t k = alphabet_size_;
  std::vector<BigInt> counts(g.layers[0].size(), 0);
  if (!g.alive[0][0]) return 0;
  counts[0] = 1;
  for (std::size_t t = 0; t < prefix; ++t) {
    std::vector<BigInt> next(g.layers[t + 1].size(), 0);
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] == 0) continue;
      for (std::size_t a = 0; a < k; ++a) {
        const std::int32_t to = g.transitions[t][s * k + a];
        if (to >= 0 && g.alive[t + 1][static_cast<std::size_t>(to)]) {
          next[static_cast<std::size_t>(to)] += counts[s];
        }
      }
    }
    counts = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& c : counts) total += c;
  return total;
}

}  // namespace amenable::internal
