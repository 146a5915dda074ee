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

#include "amenable/foelner.hpp"

#include <array>

#include "amenable/errors.hpp"

namespace amenable {

FoelnerSequence FoelnerSequence::lattice_boxes(std::size_t rank) {
  return FoelnerSequence(Group::integer_lattice(rank), FoelnerKind::kLatticeBoxes);
}

FoelnerSequence FoelnerSequence::lattice_centered_boxes(std::size_t rank) {
  return FoelnerSequence(Group::integer_lattice(rank), FoelnerKind::kLatticeCenteredBoxes);
}

FoelnerSequence FoelnerSequence::heisenberg_boxes() {
  return FoelnerSequence(Group::heisenberg(), FoelnerKind::kHeisenbergBoxes);
}

FoelnerSequence FoelnerSequence::explicit_sets(Group group, std::vector<FiniteSubset> sets) {
  if (sets.empty()) throw UsageError("explicit Foelner sequence needs at least one set");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!(sets[i].group() == group)) {
      throw UsageError("explicit set " + std::to_string(i + 1) + " is not in " + group.name());
    }
    if (sets[i].empty()) {
      throw UsageError("explicit set " + std::to_string(i + 1) + " is empty");
    }
  }
  FoelnerSequence seq(std::move(group), FoelnerKind::kExplicit);
  for (std::size_t i = 1; i < sets.size() && seq.nested_; ++i) {
    seq.nested_ = sets[i - 1].is_subset_of(sets[i]);
  }
  seq.explicit_sets_ = std::move(sets);
  return seq;
}

std::string FoelnerSequence::name() const {
  switch (kind_) {
    case FoelnerKind::kLatticeBoxes:
      return group_.name() + " boxes [0,n)^d";
    case FoelnerKind::kLatticeCenteredBoxes:
      return group_.name() + " centered boxes [-n,n]^d";
    case FoelnerKind::kHeisenbergBoxes:
      return "Heisenberg boxes |x|,|y|<=n, |z|<=n^2";
    case FoelnerKind::kExplicit:
      return "explicit sequence of " + std::to_string(explicit_sets_.size()) + " sets";
  }
  return "unknown";
}

std::optional<std::size_t> FoelnerSequence::length() const {
  if (kind_ == FoelnerKind::kExplicit) return explicit_sets_.size();
  return std::nullopt;
}

void FoelnerSequence::check_index(std::size_t n) const {
  if (n == 0) throw UsageError("Foelner sets are indexed from n = 1");
  if (kind_ == FoelnerKind::kExplicit && n > explicit_sets_.size()) {
    throw UsageError("index " + std::to_string(n) + " exceeds explicit sequence length " +
                     std::to_string(explicit_sets_.size()));
  }
}

FiniteSubset FoelnerSequence::set(std::size_t n) const {
  check_index(n);
  const auto m = static_cast<std::int64_t>(n);
  switch (kind_) {
    case FoelnerKind::kLatticeBoxes:
      return FiniteSubset::cube(group_, 0, m);
    case FoelnerKind::kLatticeCenteredBoxes:
      return FiniteSubset::cube(group_, -m, m + 1);
    case FoelnerKind::kHeisenbergBoxes: {
      std::vector<GroupElement> out;
      out.reserve(set_size(n));
      for (std::int64_t x = -m; x <= m; ++x)
        for (std::int64_t y = -m; y <= m; ++y)
          for (std::int64_t z = -m * m; z <= m * m; ++z) out.push_back(group_.element({x, y, z}));
      return from_sorted(group_, std::move(out));
    }
    case FoelnerKind::kExplicit:
      return explicit_sets_[n - 1];
  }
  throw UsageError("unknown Foelner kind");
}

std::size_t FoelnerSequence::set_size(std::size_t n) const {
  check_index(n);
  std::size_t side = 0;
  switch (kind_) {
    case FoelnerKind::kLatticeBoxes:
      side = n;
      break;
    case FoelnerKind::kLatticeCenteredBoxes:
      side = 2 * n + 1;
      break;
    case FoelnerKind::kHeisenbergBoxes:
      return (2 * n + 1) * (2 * n + 1) * (2 * n * n + 1);
    case FoelnerKind::kExplicit:
      return explicit_sets_[n - 1].size();
  }
  std::size_t out = 1;
  for (std::size_t i = 0; i < group_.rank(); ++i) out *= side;
  return out;
}

Rational temperedness_constant(const FoelnerSequence& seq, std::size_t n_max) {
  if (n_max < 2) throw DomainError("temperedness needs n_max >= 2");
  // U_{k<n} F_k^{-1} F_n = (U_{k<n} F_k)^{-1} F_n, so one running union
  // replaces the inner loop over k.
  FiniteSubset prefix = seq.set(1);
  Rational best = 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const FiniteSubset fn = seq.set(n);
    const FiniteSubset spread = product_set(inverse_set(prefix), fn);
    const Rational ratio(spread.size(), fn.size());
    if (ratio > best) best = ratio;
    prefix = set_union(prefix, fn);
  }
  return best;
}

std::optional<std::size_t> invariance_threshold(const FoelnerSequence& seq,
                                                const FiniteSubset& k, const Rational& delta,
                                                std::size_t n_max) {
  if (delta <= 0) throw DomainError("delta must be positive");
  if (k.empty()) throw DomainError("invariance window K is empty");
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  std::optional<std::size_t> threshold;
  for (std::size_t n = n_max; n >= 1; --n) {
    if (!is_k_delta_invariant(seq.set(n), k, delta)) break;
    threshold = n;
  }
  return threshold;
}

FiniteSubset generating_window(const Group& group) {
  std::vector<GroupElement> elems = group.generators();
  elems.push_back(group.identity());
  return FiniteSubset(group, std::move(elems));
}

std::vector<DefectRow> defect_table(const FoelnerSequence& seq, std::size_t n_lo,
                                    std::size_t n_hi, std::span<const GroupElement> columns) {
  if (n_lo < 1 || n_hi < n_lo) throw UsageError("defect table needs 1 <= n_lo <= n_hi");
  const std::vector<GroupElement> gens(columns.empty() ? seq.group().generators()
                                                       : std::vector<GroupElement>(
                                                             columns.begin(), columns.end()));
  const FiniteSubset window = generating_window(seq.group());
  std::vector<DefectRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const FiniteSubset fn = seq.set(n);
    DefectRow row;
    row.n = n;
    row.size = fn.size();
    for (const GroupElement& g : gens) row.defects.push_back(foelner_defect(fn, g));
    row.boundary_ratio = Rational(k_boundary(fn, window).size(), fn.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace amenable
