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

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "amenable/errors.hpp"
#include "amenable/foelner.hpp"

namespace amenable {
namespace {

// The cube [lo, hi]^d with both ends included.
FiniteSubset closed_cube(const Group& lattice, std::int64_t lo, std::int64_t hi) {
  return FiniteSubset::cube(lattice, lo, hi + 1);
}

// Direct evaluation of max_n |U_{k<n} F_k^{-1} F_n| / |F_n| with explicit
// loops over k and over element pairs.
Rational brute_temperedness(const FoelnerSequence& seq, std::size_t n_max) {
  Rational best = 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const FiniteSubset fn = seq.set(n);
    std::set<GroupElement> spread;
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& x : seq.set(k))
        for (const auto& y : fn) spread.insert(multiply(inverse(x), y));
    }
    best = std::max(best, Rational(spread.size(), fn.size()));
  }
  return best;
}

TEST(FoelnerTest, BuiltInSetSizes) {
  const auto boxes = FoelnerSequence::lattice_boxes(2);
  EXPECT_EQ(boxes.set(3).size(), 9u);
  EXPECT_EQ(boxes.set_size(7), 49u);
  const auto centered = FoelnerSequence::lattice_centered_boxes(1);
  EXPECT_EQ(centered.set(2).size(), 5u);
  EXPECT_EQ(centered.set_size(4), 9u);
  const auto heis = FoelnerSequence::heisenberg_boxes();
  EXPECT_EQ(heis.set(1).size(), 27u);  // 3 * 3 * 3
  EXPECT_EQ(heis.set_size(2), 5u * 5u * 9u);
  EXPECT_EQ(heis.set(2).size(), heis.set_size(2));
}

TEST(FoelnerTest, BuiltInSequencesAreNested) {
  for (const auto& seq : {FoelnerSequence::lattice_boxes(2), FoelnerSequence::lattice_centered_boxes(3),
                          FoelnerSequence::heisenberg_boxes()}) {
    EXPECT_TRUE(seq.is_nested());
    for (std::size_t n = 1; n < 4; ++n) EXPECT_TRUE(seq.set(n).is_subset_of(seq.set(n + 1)));
  }
}

TEST(FoelnerTest, IndexZeroAndPastTheEndAreUsageErrors) {
  const Group z = Group::integer_lattice(1);
  const auto seq = FoelnerSequence::explicit_sets(z, {closed_cube(z, 0, 0)});
  EXPECT_THROW(seq.set(0), UsageError);
  EXPECT_THROW(seq.set(2), UsageError);
  EXPECT_EQ(seq.length(), 1u);
  EXPECT_FALSE(FoelnerSequence::lattice_boxes(1).length().has_value());
}

TEST(FoelnerTest, ExplicitNestingIsDetected) {
  const Group z = Group::integer_lattice(1);
  const auto nested = FoelnerSequence::explicit_sets(
      z, {closed_cube(z, 0, 0), closed_cube(z, -1, 1)});
  EXPECT_TRUE(nested.is_nested());
  const auto loose = FoelnerSequence::explicit_sets(
      z, {closed_cube(z, 0, 0), closed_cube(z, 1, 2)});
  EXPECT_FALSE(loose.is_nested());
  EXPECT_THROW(FoelnerSequence::explicit_sets(z, {FiniteSubset(z)}), UsageError);
}

TEST(FoelnerTest, TemperednessMatchesDirectUnion) {
  const Group z = Group::integer_lattice(1);
  const auto loose = FoelnerSequence::explicit_sets(
      z, {closed_cube(z, 0, 0), closed_cube(z, 5, 7), closed_cube(z, -3, 3),
          closed_cube(z, 10, 20)});
  EXPECT_EQ(temperedness_constant(loose, 4), brute_temperedness(loose, 4));
  for (const auto& seq : {FoelnerSequence::lattice_boxes(1), FoelnerSequence::lattice_boxes(2),
                          FoelnerSequence::lattice_centered_boxes(2), FoelnerSequence::heisenberg_boxes()}) {
    const std::size_t n_max = seq.group().kind() == GroupKind::kHeisenberg ? 3 : 6;
    EXPECT_EQ(temperedness_constant(seq, n_max), brute_temperedness(seq, n_max)) << seq.name();
  }
}

TEST(FoelnerTest, LatticeBoxesTemperednessClosedForm) {
  // The union is [-(n-2), n-1]^d, so the ratio is ((2n-2)/n)^d, largest at n_max.
  for (std::size_t d = 1; d <= 3; ++d) {
    Rational expected = 1;
    for (std::size_t i = 0; i < d; ++i) expected *= Rational(2 * 12 - 2, 12);
    EXPECT_EQ(temperedness_constant(FoelnerSequence::lattice_boxes(d), 12), expected);
  }
  EXPECT_THROW(temperedness_constant(FoelnerSequence::lattice_boxes(1), 1), DomainError);
}

TEST(FoelnerTest, DefectTableOfIntervals) {
  const auto rows = defect_table(FoelnerSequence::lattice_boxes(1), 1, 5);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.defects.size(), 2u);
    const Rational expected = row.n == 1 ? Rational(2) : Rational(2, row.n);
    EXPECT_EQ(row.defects[0], expected);
    EXPECT_EQ(row.defects[1], expected);
    // B([0,n), {-1,0,1}) = {-1, 0, n-1, n}, or {-1, 0, 1} when n = 1.
    EXPECT_EQ(row.boundary_ratio, Rational(row.n == 1 ? 3 : 4, row.n));
  }
}

TEST(FoelnerTest, DefectsDecayForHeisenbergBoxes) {
  const auto rows = defect_table(FoelnerSequence::heisenberg_boxes(), 1, 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < rows[i].defects.size(); ++c) {
      EXPECT_LT(rows[i].defects[c], rows[i - 1].defects[c]);
    }
  }
}

TEST(FoelnerTest, InvarianceThreshold) {
  const Group z = Group::integer_lattice(1);
  const auto seq = FoelnerSequence::lattice_boxes(1);
  const auto k = generating_window(z);
  // |B(F_n, K)| / n = 4 / n < 1/2 iff n > 8.
  EXPECT_EQ(invariance_threshold(seq, k, Rational(1, 2), 20), 9u);
  EXPECT_FALSE(invariance_threshold(seq, k, Rational(1, 2), 8).has_value());
}

}  // namespace
}  // namespace amenable
