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

#include "cover_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <tuple>
#include <utility>

#include "amenable/errors.hpp"
#include "frontier.hpp"

namespace amenable::internal {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxGreedyUniverse = std::size_t{1} << 20;

// Nested sequence: cylinders at successive scales form a tree. Cells are
// ordered shell by shell so that F_n is a prefix of the order, and the
// frontier graph merges patterns whose subtrees are identical.
class TreeCoverModel final : public CoverModel {
 public:
  TreeCoverModel(const Subshift& sft, const FoelnerSequence& seq, std::size_t top) {
    std::vector<GroupElement> cells;
    FiniteSubset previous(seq.group());
    scales_at_layer_.resize(1);
    for (std::size_t n = 1; n <= top; ++n) {
      const FiniteSubset f = seq.set(n);
      if (!previous.is_subset_of(f)) throw UsageError("sequence is not nested");
      for (const GroupElement& g : set_difference(f, previous)) cells.push_back(g);
      scales_at_layer_.resize(cells.size() + 1);
      scales_at_layer_[cells.size()].push_back(n);
      previous = f;
    }
    FrontierEngine engine(sft, std::move(cells));
    alphabet_size_ = engine.alphabet_size();
    graph_ = engine.build_graph();
  }

  double log_min_cost(std::size_t lo, std::size_t hi, const LogWeight& w) const override {
    const std::size_t layers = graph_.layers.size();
    const std::size_t k = alphabet_size_;
    std::vector<double> value(graph_.layers[layers - 1].size(), kInf);
    apply_scales(layers - 1, lo, hi, w, value);
    for (std::size_t t = layers - 1; t-- > 0;) {
      std::vector<double> current(graph_.layers[t].size(), -kInf);
      for (std::size_t s = 0; s < current.size(); ++s) {
        if (!graph_.alive[t][s]) continue;
        double acc = -kInf;
        for (std::size_t a = 0; a < k; ++a) {
          const std::int32_t to = graph_.transitions[t][s * k + a];
          if (to < 0 || !graph_.alive[t + 1][static_cast<std::size_t>(to)]) continue;
          acc = log_add(acc, value[static_cast<std::size_t>(to)]);
        }
        current[s] = acc;
      }
      apply_scales(t, lo, hi, w, current);
      value = std::move(current);
    }
    return graph_.alive[0][0] ? value[0] : -kInf;
  }

 private:
  void apply_scales(std::size_t layer, std::size_t lo, std::size_t hi, const LogWeight& w,
                    std::vector<double>& value) const {
    for (std::size_t n : scales_at_layer_[layer]) {
      if (n < lo || n > hi) continue;
      const double own = w(n);
      for (std::size_t s = 0; s < value.size(); ++s) {
        if (graph_.alive[layer][s]) value[s] = std::min(value[s], own);
      }
    }
  }

  std::size_t alphabet_size_ = 0;
  FrontierEngine::Graph graph_;
  std::vector<std::vector<std::size_t>> scales_at_layer_;
};

// Any sequence: enumerate the admissible patterns on the union of
// F_1, ..., F_top and group them by their restriction to each F_n.
class GreedyCoverModel final : public CoverModel {
 public:
  GreedyCoverModel(const Subshift& sft, const FoelnerSequence& seq, std::size_t top)
      : members_(top + 1) {
    FiniteSubset whole(seq.group());
    for (std::size_t n = 1; n <= top; ++n) whole = set_union(whole, seq.set(n));
    const std::vector<Pattern> universe =
        enumerate_locally_admissible(sft, whole, kMaxGreedyUniverse);
    universe_size_ = universe.size();
    for (std::size_t n = 1; n <= top; ++n) {
      const FiniteSubset f = seq.set(n);
      std::vector<std::size_t> positions;
      for (const GroupElement& g : f) positions.push_back(*whole.index_of(g));
      std::map<std::vector<Symbol>, std::size_t> index;
      for (std::size_t u = 0; u < universe.size(); ++u) {
        std::vector<Symbol> key;
        key.reserve(positions.size());
        for (std::size_t p : positions) key.push_back(universe[u].symbols()[p]);
        auto [it, inserted] = index.emplace(std::move(key), members_[n].size());
        if (inserted) members_[n].emplace_back();
        members_[n][it->second].push_back(u);
      }
    }
  }

  double log_min_cost(std::size_t lo, std::size_t hi, const LogWeight& w) const override {
    if (universe_size_ == 0) return -kInf;
    std::vector<const std::vector<std::size_t>*> sets;
    std::vector<double> weights;
    for (std::size_t n = lo; n <= hi && n < members_.size(); ++n) {
      const double own = w(n);
      for (const auto& m : members_[n]) {
        sets.push_back(&m);
        weights.push_back(own);
      }
    }
    const auto chosen = greedy_cover_log(universe_size_, sets, weights);
    if (!chosen) return kInf;
    double acc = -kInf;
    for (std::size_t i : *chosen) acc = log_add(acc, weights[i]);
    return acc;
  }

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::vector<std::vector<std::size_t>>> members_;
};

}  // namespace

double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  if (a == kInf || b == kInf) return kInf;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

std::optional<std::vector<std::size_t>> greedy_cover_log(
    std::size_t universe_size, const std::vector<const std::vector<std::size_t>*>& sets,
    const std::vector<double>& log_weights) {
  std::vector<char> covered(universe_size, 0);
  std::size_t remaining = universe_size;
  auto fresh = [&](std::size_t i) {
    std::size_t count = 0;
    for (std::size_t u : *sets[i]) count += covered[u] ? 0 : 1;
    return count;
  };
  // (ratio, index, fresh count when the ratio was computed)
  using Entry = std::tuple<double, std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::size_t f = fresh(i);
    if (f > 0) heap.emplace(log_weights[i] - std::log(static_cast<double>(f)), i, f);
  }
  std::vector<std::size_t> chosen;
  while (remaining > 0 && !heap.empty()) {
    auto [ratio, i, stored] = heap.top();
    heap.pop();
    const std::size_t f = fresh(i);
    if (f == 0) continue;
    if (f != stored) {
      heap.emplace(log_weights[i] - std::log(static_cast<double>(f)), i, f);
      continue;
    }
    chosen.push_back(i);
    for (std::size_t u : *sets[i]) {
      if (!covered[u]) {
        covered[u] = 1;
        --remaining;
      }
    }
  }
  if (remaining > 0) return std::nullopt;
  return chosen;
}

std::unique_ptr<CoverModel> make_cover_model(const Subshift& sft, const FoelnerSequence& seq,
                                             std::size_t top, CoverSolver solver) {
  if (!(seq.group() == sft.group())) throw UsageError("sequence and subshift groups differ");
  if (top == 0) throw UsageError("scales start at 1");
  if (solver == CoverSolver::kAuto) {
    solver = seq.is_nested() ? CoverSolver::kExact : CoverSolver::kGreedy;
  }
  if (solver == CoverSolver::kExact) {
    if (!seq.is_nested()) throw UsageError("exact cover solver needs a nested sequence");
    return std::make_unique<TreeCoverModel>(sft, seq, top);
  }
  return std::make_unique<GreedyCoverModel>(sft, seq, top);
}

}  // namespace amenable::internal
