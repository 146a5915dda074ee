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
#include <string>
#include <vector>

#include "amenable/finite_subset.hpp"
#include "amenable/group.hpp"
#include "amenable/rational.hpp"

namespace amenable {

enum class FoelnerKind {
  kLatticeBoxes,          // F_n = [0,n)^d
  kLatticeCenteredBoxes,  // F_n = [-n,n]^d
  kHeisenbergBoxes,       // F_n = {|x|,|y| <= n, |z| <= n^2}
  kExplicit,              // user-supplied list
};

/// An indexed family n -> F_n (n >= 1) of nonempty finite subsets.
///
/// Built-in kinds are nested with union G. Explicit sequences are accepted
/// as given: the Foelner property cannot be decided from finitely many sets,
/// so only nonemptiness and group membership are checked. Nestedness of an
/// explicit list is detected and reported through is_nested().
class FoelnerSequence {
 public:
  static FoelnerSequence lattice_boxes(std::size_t rank);
  static FoelnerSequence lattice_centered_boxes(std::size_t rank);
  static FoelnerSequence heisenberg_boxes();
  static FoelnerSequence explicit_sets(Group group, std::vector<FiniteSubset> sets);

  const Group& group() const { return group_; }
  FoelnerKind kind() const { return kind_; }
  std::string name() const;

  /// F_n. Throws UsageError for n = 0 or n past the end of an explicit list.
  FiniteSubset set(std::size_t n) const;
  /// |F_n| without materializing built-in sets.
  std::size_t set_size(std::size_t n) const;

  /// Number of available sets; empty for the infinite built-in kinds.
  std::optional<std::size_t> length() const;
  bool is_nested() const { return nested_; }

 private:
  FoelnerSequence(Group group, FoelnerKind kind) : group_(std::move(group)), kind_(kind) {}
  void check_index(std::size_t n) const;

  Group group_;
  FoelnerKind kind_;
  std::vector<FiniteSubset> explicit_sets_;
  bool nested_ = true;
};

inline FiniteSubset foelner_set(const FoelnerSequence& seq, std::size_t n) {
  return seq.set(n);
}

/// max over 2 <= n <= n_max of |U_{k<n} F_k^{-1} F_n| / |F_n|: the least
/// constant witnessing temperedness up to the horizon n_max.
Rational temperedness_constant(const FoelnerSequence& seq, std::size_t n_max);

/// Least n <= n_max such that F_m is (K,delta)-invariant for every m in
/// [n, n_max]; empty when F_{n_max} itself is not.
std::optional<std::size_t> invariance_threshold(const FoelnerSequence& seq,
                                                const FiniteSubset& k, const Rational& delta,
                                                std::size_t n_max);

struct DefectRow {
  std::size_t n = 0;
  std::size_t size = 0;
  std::vector<Rational> defects;  // one per column element
  Rational boundary_ratio;        // |B(F_n, K)| / |F_n| for K = {e} u generators
};

/// One row per n in [n_lo, n_hi]; defect columns are the group's generators
/// unless `columns` is given.
std::vector<DefectRow> defect_table(const FoelnerSequence& seq, std::size_t n_lo,
                                    std::size_t n_hi,
                                    std::span<const GroupElement> columns = {});

/// {e} together with the symmetric generating set.
FiniteSubset generating_window(const Group& group);

}  // namespace amenable
