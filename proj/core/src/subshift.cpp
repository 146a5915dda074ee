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

#include "amenable/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "amenable/errors.hpp"
#include "frontier.hpp"

namespace amenable {
namespace {

std::vector<GroupElement> to_vector(const FiniteSubset& s) {
  return {s.begin(), s.end()};
}

// Cells of F in lexicographic order followed by the rest of the margin.
std::vector<GroupElement> margin_order(const FiniteSubset& f, const FiniteSubset& margin) {
  std::vector<GroupElement> cells = to_vector(f);
  for (const GroupElement& g : set_difference(margin, f)) cells.push_back(g);
  return cells;
}

Pattern pattern_from_assignment(const FiniteSubset& domain, const std::vector<Symbol>& values) {
  return Pattern(domain, values);
}

}  // namespace

Pattern::Pattern(FiniteSubset domain, std::vector<Symbol> symbols)
    : domain_(std::move(domain)), symbols_(std::move(symbols)) {
  if (symbols_.size() != domain_.size()) {
    throw UsageError("pattern has " + std::to_string(symbols_.size()) + " symbols for " +
                     std::to_string(domain_.size()) + " cells");
  }
}

Pattern Pattern::from_cells(const Group& group,
                            std::vector<std::pair<GroupElement, Symbol>> cells) {
  std::sort(cells.begin(), cells.end());
  std::vector<GroupElement> elements;
  std::vector<Symbol> symbols;
  elements.reserve(cells.size());
  symbols.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0 && cells[i].first == cells[i - 1].first) {
      throw UsageError("pattern assigns cell " + cells[i].first.to_string() + " twice");
    }
    if (!group.contains(cells[i].first)) {
      throw UsageError("cell " + cells[i].first.to_string() + " is not in " + group.name());
    }
    elements.push_back(cells[i].first);
    symbols.push_back(cells[i].second);
  }
  return Pattern(from_sorted(group, std::move(elements)), std::move(symbols));
}

Pattern Pattern::constant(FiniteSubset domain, Symbol symbol) {
  std::vector<Symbol> symbols(domain.size(), symbol);
  return Pattern(std::move(domain), std::move(symbols));
}

std::optional<Symbol> Pattern::find(const GroupElement& g) const {
  const auto index = domain_.index_of(g);
  if (!index) return std::nullopt;
  return symbols_[*index];
}

Symbol Pattern::at(const GroupElement& g) const {
  const auto symbol = find(g);
  if (!symbol) throw UsageError("pattern is not defined at " + g.to_string());
  return *symbol;
}

Pattern Pattern::restrict_to(const FiniteSubset& sub) const {
  std::vector<Symbol> symbols;
  symbols.reserve(sub.size());
  for (const GroupElement& g : sub) symbols.push_back(at(g));
  return Pattern(sub, std::move(symbols));
}

Subshift::Subshift(Group group, std::vector<std::string> alphabet, std::vector<Pattern> forbidden)
    : group_(std::move(group)), alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
  if (alphabet_.empty()) throw UsageError("alphabet must not be empty");
  if (alphabet_.size() > kMaxAlphabet) {
    throw UsageError("alphabet has more than " + std::to_string(kMaxAlphabet) + " symbols");
  }
  std::set<std::string> seen;
  for (const std::string& name : alphabet_) {
    if (name.empty()) throw UsageError("empty symbol name");
    if (!seen.insert(name).second) throw UsageError("duplicate symbol '" + name + "'");
  }
  for (const Pattern& p : forbidden_) {
    if (p.domain().empty()) throw UsageError("forbidden pattern with empty domain");
    if (!(p.domain().group() == group_)) {
      throw UsageError("forbidden pattern over " + p.domain().group().name() + ", expected " +
                       group_.name());
    }
    for (Symbol s : p.symbols()) {
      if (s >= alphabet_.size()) throw UsageError("forbidden pattern uses an unknown symbol");
    }
  }
}

Subshift Subshift::full_shift(const Group& group, std::size_t symbols) {
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < symbols; ++i) alphabet.push_back(std::to_string(i));
  return Subshift(group, std::move(alphabet), {});
}

Subshift Subshift::golden_mean() {
  const Group z = Group::integer_lattice(1);
  Pattern ones = Pattern::from_cells(z, {{z.element({0}), 1}, {z.element({1}), 1}});
  return Subshift(z, {"0", "1"}, {std::move(ones)});
}

Subshift Subshift::hard_square() {
  const Group z2 = Group::integer_lattice(2);
  Pattern horizontal = Pattern::from_cells(z2, {{z2.element({0, 0}), 1}, {z2.element({1, 0}), 1}});
  Pattern vertical = Pattern::from_cells(z2, {{z2.element({0, 0}), 1}, {z2.element({0, 1}), 1}});
  return Subshift(z2, {"0", "1"}, {std::move(horizontal), std::move(vertical)});
}

std::optional<Symbol> Subshift::symbol_index(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Cylinder make_cylinder(const FoelnerSequence& seq, std::size_t scale, Pattern pattern) {
  if (!(pattern.domain() == seq.set(scale))) {
    throw UsageError("cylinder pattern domain differs from F_" + std::to_string(scale));
  }
  return Cylinder{scale, std::move(pattern)};
}

bool cylinder_contains(const Pattern& x, const Cylinder& c) {
  const auto cells = c.pattern.domain();
  const auto symbols = c.pattern.symbols();
  bool agree = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto have = x.find(cells[i]);
    if (!have) throw UsageError("point is not defined at " + cells[i].to_string());
    if (*have != symbols[i]) agree = false;
  }
  return agree;
}

Pattern shift_pattern(const Pattern& x, const GroupElement& by) {
  const GroupElement by_inverse = inverse(by);
  std::vector<std::pair<GroupElement, Symbol>> cells;
  cells.reserve(x.size());
  const auto domain = x.domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    cells.emplace_back(multiply(domain[i], by_inverse), x.symbols()[i]);
  }
  return Pattern::from_cells(domain.group(), std::move(cells));
}

bool is_locally_admissible(const Subshift& sft, const Pattern& x) {
  const FiniteSubset& domain = x.domain();
  for (const Pattern& p : sft.forbidden()) {
    const GroupElement lead_inverse = inverse(p.domain()[0]);
    for (const GroupElement& f : domain) {
      const GroupElement h = multiply(lead_inverse, f);
      bool occurs = true;
      for (std::size_t k = 0; k < p.size() && occurs; ++k) {
        const auto have = x.find(multiply(p.domain()[k], h));
        occurs = have && *have == p.symbols()[k];
      }
      if (occurs) return false;
    }
  }
  return true;
}

BigInt count_locally_admissible(const Subshift& sft, const FiniteSubset& f) {
  internal::FrontierEngine engine(sft, to_vector(f));
  return engine.count_completable(engine.steps());
}

BigInt count_extendable(const Subshift& sft, const FiniteSubset& f, const FiniteSubset& margin) {
  if (!f.is_subset_of(margin)) throw UsageError("F is not contained in the margin");
  internal::FrontierEngine engine(sft, margin_order(f, margin));
  return engine.count_completable(f.size());
}

std::vector<Pattern> enumerate_locally_admissible(const Subshift& sft, const FiniteSubset& f,
                                                  std::size_t limit) {
  internal::FrontierEngine engine(sft, to_vector(f));
  std::vector<Pattern> out;
  bool overflow = false;
  engine.enumerate([&](const std::vector<Symbol>& assignment) {
    if (out.size() == limit) {
      overflow = true;
      return false;
    }
    out.push_back(pattern_from_assignment(f, assignment));
    return true;
  });
  if (overflow) {
    throw DomainError("more than " + std::to_string(limit) + " admissible patterns");
  }
  return out;
}

std::vector<EntropyPoint> entropy_curve(const Subshift& sft, const FoelnerSequence& seq,
                                        std::size_t n_max, EntropyMode mode) {
  if (n_max == 0) throw UsageError("n_max must be positive");
  if (!(seq.group() == sft.group())) throw UsageError("sequence and subshift groups differ");
  std::vector<EntropyPoint> curve;
  curve.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const FiniteSubset f = seq.set(n);
    EntropyPoint point;
    point.n = n;
    point.cells = f.size();
    point.count = mode.kind == CountMode::kLocal
                      ? count_locally_admissible(sft, f)
                      : count_extendable(sft, f, seq.set(n + mode.margin_growth));
    point.rate = log_per_unit(point.count, f.size());
    curve.push_back(std::move(point));
  }
  return curve;
}

double foelner_metric(const Pattern& x, const Pattern& y, const FoelnerSequence& seq,
                      std::size_t depth) {
  if (depth == 0) throw UsageError("truncation depth must be positive");
  std::optional<std::size_t> agree;
  for (std::size_t n = 1; n <= depth; ++n) {
    const FiniteSubset f = seq.set(n);
    bool same = true;
    for (const GroupElement& g : f) {
      const auto a = x.find(g);
      const auto b = y.find(g);
      if (!a || !b) throw UsageError("point is not defined on F_" + std::to_string(n));
      if (*a != *b) same = false;
    }
    if (n == 1 && !same) return 1.0;
    if (same) agree = n;
  }
  if (*agree == depth) return 0.0;
  return std::exp(-static_cast<double>(seq.set_size(*agree)));
}

}  // namespace amenable
