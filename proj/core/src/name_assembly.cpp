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

#include "amenable/name_assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "amenable/errors.hpp"

namespace amenable {
namespace {

using Word = std::vector<Symbol>;

// Symbols of ax on `shape`, that is x_{h a} for h in shape; nullopt when x
// is not defined on shape * a.
std::optional<Word> translated_word(const Pattern& x, const FiniteSubset& shape,
                                    const GroupElement& a) {
  Word word;
  word.reserve(shape.size());
  for (const GroupElement& h : shape) {
    const auto symbol = x.find(multiply(h, a));
    if (!symbol) return std::nullopt;
    word.push_back(*symbol);
  }
  return word;
}

const CoverFamily& family_for_row(std::span<const CoverFamily> families, std::size_t row) {
  for (const CoverFamily& f : families) {
    if (f.index == row) return f;
  }
  throw ContractViolation("no cover family for row " + std::to_string(row));
}

}  // namespace

CoverFamily admissible_cover_family(const Subshift& sft, const FoelnerSequence& seq,
                                    std::size_t index, std::vector<std::size_t> scales) {
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  if (scales.empty()) throw UsageError("a cover family needs at least one scale");
  CoverFamily family;
  family.index = index;
  family.scales = scales;
  for (std::size_t n : scales) {
    for (Pattern& p : enumerate_locally_admissible(sft, seq.set(n))) {
      family.cylinders.push_back(Cylinder{n, std::move(p)});
    }
  }
  verify_cover_family(sft, seq, family);
  return family;
}

bool verify_cover_family(const Subshift& sft, const FoelnerSequence& seq, CoverFamily& family) {
  if (family.scales.empty()) throw UsageError("a cover family needs at least one scale");
  const std::size_t top = *std::max_element(family.scales.begin(), family.scales.end());
  std::vector<FiniteSubset> sets;
  std::vector<std::set<Word>> words(family.scales.size());
  for (std::size_t n : family.scales) sets.push_back(seq.set(n));
  for (const Cylinder& c : family.cylinders) {
    const auto it = std::find(family.scales.begin(), family.scales.end(), c.scale);
    if (it == family.scales.end()) {
      throw UsageError("cylinder at scale " + std::to_string(c.scale) +
                       " outside the family's scales");
    }
    const std::size_t j = static_cast<std::size_t>(it - family.scales.begin());
    if (!(c.pattern.domain() == sets[j])) {
      throw UsageError("cylinder domain is not F_" + std::to_string(c.scale));
    }
    words[j].emplace(c.pattern.symbols().begin(), c.pattern.symbols().end());
  }
  bool covers = true;
  for (const Pattern& p : enumerate_locally_admissible(sft, seq.set(top))) {
    bool hit = false;
    for (std::size_t j = 0; j < sets.size() && !hit; ++j) {
      const Pattern r = p.restrict_to(sets[j]);
      hit = words[j].count(Word(r.symbols().begin(), r.symbols().end())) > 0;
    }
    if (!hit) {
      covers = false;
      break;
    }
  }
  family.covers_x = covers;
  return covers;
}

double cover_series_constant(std::span<const CoverFamily> families, double s) {
  if (!(s >= 0)) throw DomainError("s must be nonnegative");
  double r = 0;
  for (const CoverFamily& f : families) {
    for (const Cylinder& c : f.cylinders) r += std::exp(-s * static_cast<double>(c.pattern.size()));
  }
  if (r >= 1) return std::numeric_limits<double>::infinity();
  return r / (1 - r);
}

std::vector<std::vector<FiniteSubset>> proof_base_points(const Pattern& x,
                                                         std::span<const CoverFamily> families,
                                                         const FoelnerSequence& seq) {
  const FiniteSubset& domain = x.domain();
  std::vector<std::vector<FiniteSubset>> out;
  out.reserve(families.size());
  for (const CoverFamily& family : families) {
    std::vector<FiniteSubset> row;
    for (std::size_t n : family.scales) {
      const FiniteSubset shape = seq.set(n);
      std::set<Word> words;
      for (const Cylinder& c : family.cylinders) {
        if (c.scale == n) words.emplace(c.pattern.symbols().begin(), c.pattern.symbols().end());
      }
      std::vector<GroupElement> bases;
      for (const GroupElement& a : domain) {
        const auto word = translated_word(x, shape, a);
        if (word && words.count(*word) > 0) bases.push_back(a);
      }
      row.push_back(from_sorted(domain.group(), std::move(bases)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

NameAssembly assemble_name(const Pattern& x, const SelectionResult& selection,
                           std::span<const CoverFamily> families, ResidualRule rule) {
  (void)rule;  // kCopyPoint is the only rule
  const FiniteSubset& domain = x.domain();
  const std::size_t m = domain.size();
  std::vector<std::size_t> hits(m, 0);
  std::vector<std::size_t> owner(m, 0);
  std::vector<std::size_t> cylinder_of;
  std::vector<const Pattern*> words;

  for (std::size_t k = 0; k < selection.selected.size(); ++k) {
    const SelectedTranslate& st = selection.selected[k];
    const FiniteSubset shape = right_translate(st.translate, inverse(st.base));
    for (const GroupElement& g : st.translate) {
      const auto index = domain.index_of(g);
      if (!index) throw UsageError("selected translate leaves the domain at " + g.to_string());
      ++hits[*index];
      owner[*index] = k;
    }
    const CoverFamily& family = family_for_row(families, st.row);
    const auto word = translated_word(x, shape, st.base);
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < family.cylinders.size() && !found; ++c) {
      const Pattern& u = family.cylinders[c].pattern;
      if (!(u.domain() == shape)) continue;
      if (std::equal(u.symbols().begin(), u.symbols().end(), word->begin(), word->end())) {
        found = c;
      }
    }
    if (!found) {
      throw ContractViolation("no cylinder of family " + std::to_string(st.row) +
                              " contains the point translated by " + st.base.to_string());
    }
    cylinder_of.push_back(*found);
    words.push_back(&family.cylinders[*found].pattern);
  }

  std::vector<Symbol> symbols(m);
  std::vector<CellProvenance> provenance(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (hits[i] == 1) {
      const SelectedTranslate& st = selection.selected[owner[i]];
      symbols[i] = words[owner[i]]->at(multiply(domain[i], inverse(st.base)));
      provenance[i] = {NameCase::kSingleTranslate, owner[i]};
    } else {
      symbols[i] = x.symbols()[i];
      provenance[i] = {hits[i] == 0 ? NameCase::kUncovered : NameCase::kOverlap, std::nullopt};
    }
  }
  return NameAssembly{Pattern(domain, std::move(symbols)), std::move(provenance),
                      std::move(cylinder_of)};
}

}  // namespace amenable
