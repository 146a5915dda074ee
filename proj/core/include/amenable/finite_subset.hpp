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
#include <optional>
#include <span>
#include <vector>

#include "amenable/group.hpp"
#include "amenable/rational.hpp"

namespace amenable {

/// A finite set of elements of one group, kept sorted lexicographically and
/// free of duplicates. Value type; immutable once built.
class FiniteSubset {
 public:
  explicit FiniteSubset(Group group) : group_(std::move(group)) {}
  /// Sorts and deduplicates. Throws UsageError if an element belongs to a
  /// different group.
  FiniteSubset(Group group, std::vector<GroupElement> elements);

  static FiniteSubset singleton(const GroupElement& g, const Group& group) {
    return FiniteSubset(group, {g});
  }
  /// Lattice box [lo_0,hi_0) x ... x [lo_{d-1},hi_{d-1}).
  static FiniteSubset box(const Group& lattice,
                          std::span<const std::int64_t> lo,
                          std::span<const std::int64_t> hi);
  /// Cube [lo,hi)^d.
  static FiniteSubset cube(const Group& lattice, std::int64_t lo,
                           std::int64_t hi);

  const Group& group() const { return group_; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const GroupElement& g) const;
  /// Position of g in the sorted element list.
  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool is_subset_of(const FiniteSubset& other) const;

  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  struct Sorted {};
  FiniteSubset(Group group, std::vector<GroupElement> elements, Sorted)
      : group_(std::move(group)), elements_(std::move(elements)) {}
  friend FiniteSubset from_sorted(Group, std::vector<GroupElement>);

  Group group_;
  std::vector<GroupElement> elements_;
};

/// Wraps an already sorted, duplicate-free vector without re-sorting.
FiniteSubset from_sorted(Group group, std::vector<GroupElement> elements);

/// gA = {g a : a in A}.
FiniteSubset left_translate(const GroupElement& g, const FiniteSubset& a);
/// Ag = {a g : a in A}.
FiniteSubset right_translate(const FiniteSubset& a, const GroupElement& g);

/// KA = {k a : k in K, a in A}.
FiniteSubset product_set(const FiniteSubset& k, const FiniteSubset& a);
/// A^{-1} = {a^{-1} : a in A}.
FiniteSubset inverse_set(const FiniteSubset& a);

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset symmetric_difference(const FiniteSubset& a,
                                  const FiniteSubset& b);

/// |gF (symmetric difference) F| / |F|, exact. Throws DomainError on empty F.
Rational foelner_defect(const FiniteSubset& f, const GroupElement& g);

/// B(A,K) = {g : Kg meets A and Kg meets the complement of A}. Uses right
/// translates Kg. Throws DomainError on empty K.
FiniteSubset k_boundary(const FiniteSubset& a, const FiniteSubset& k);

/// |B(A,K)| / |A| < delta, strictly. Throws DomainError on empty A or
/// non-positive delta.
bool is_k_delta_invariant(const FiniteSubset& a, const FiniteSubset& k,
                          const Rational& delta);

}  // namespace amenable
