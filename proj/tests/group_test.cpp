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

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "amenable/errors.hpp"
#include "amenable/finite_subset.hpp"
#include "amenable/group.hpp"

namespace amenable {
namespace {

using Matrix = std::array<std::array<std::int64_t, 3>, 3>;

// Heisenberg element (x, y, z) as the unitriangular matrix [[1,x,z],[0,1,y],[0,0,1]].
Matrix as_matrix(const GroupElement& g) {
  return {{{1, g[0], g[2]}, {0, 1, g[1]}, {0, 0, 1}}};
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

GroupElement random_element(const Group& g, std::mt19937_64& rng, std::int64_t r) {
  std::uniform_int_distribution<std::int64_t> dist(-r, r);
  std::vector<std::int64_t> coords(g.rank());
  for (auto& c : coords) c = dist(rng);
  return g.element(coords);
}

FiniteSubset random_set(const Group& g, std::mt19937_64& rng, std::size_t n, std::int64_t r) {
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(random_element(g, rng, r));
  return FiniteSubset(g, elems);
}

// B(A, K) straight from the definition: g with Kg meeting A and its complement.
std::set<GroupElement> brute_boundary(const FiniteSubset& a, const FiniteSubset& k) {
  std::set<GroupElement> out;
  std::set<GroupElement> candidates;
  for (const auto& x : k)
    for (const auto& y : a) candidates.insert(multiply(inverse(x), y));
  for (const auto& g : candidates) {
    bool in = false, out_side = false;
    for (const auto& x : k) {
      if (a.contains(multiply(x, g))) in = true; else out_side = true;
    }
    if (in && out_side) out.insert(g);
  }
  return out;
}

TEST(GroupTest, LatticeArithmetic) {
  const Group z2 = Group::integer_lattice(2);
  EXPECT_EQ(multiply(z2.element({1, 2}), z2.element({3, -5})), z2.element({4, -3}));
  EXPECT_EQ(inverse(z2.element({1, -2})), z2.element({-1, 2}));
  EXPECT_EQ(z2.name(), "Z^2");
  EXPECT_EQ(Group::integer_lattice(1).name(), "Z");
  EXPECT_EQ(z2.generators().size(), 4u);
}

TEST(GroupTest, HeisenbergExamples) {
  const Group h = Group::heisenberg();
  EXPECT_EQ(multiply(h.element({1, 0, 0}), h.element({0, 1, 0})), h.element({1, 1, 1}));
  EXPECT_EQ(multiply(h.element({0, 1, 0}), h.element({1, 0, 0})), h.element({1, 1, 0}));
  EXPECT_EQ(inverse(h.element({2, 3, 5})), h.element({-2, -3, 1}));
  EXPECT_EQ(h.name(), "H3(Z)");
}

TEST(GroupTest, HeisenbergMatchesMatrixProduct) {
  const Group h = Group::heisenberg();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const GroupElement a = random_element(h, rng, 50);
    const GroupElement b = random_element(h, rng, 50);
    EXPECT_EQ(as_matrix(multiply(a, b)), matmul(as_matrix(a), as_matrix(b)));
  }
}

TEST(GroupTest, GroupAxiomsHoldOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (const Group& g : {Group::integer_lattice(1), Group::integer_lattice(3), Group::heisenberg()}) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = random_element(g, rng, 20);
      const auto b = random_element(g, rng, 20);
      const auto c = random_element(g, rng, 20);
      EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
      EXPECT_EQ(multiply(a, inverse(a)), g.identity());
      EXPECT_EQ(multiply(inverse(a), a), g.identity());
      EXPECT_EQ(multiply(a, g.identity()), a);
    }
  }
}

TEST(GroupTest, MixedGroupsAreRejected) {
  const Group z2 = Group::integer_lattice(2);
  const Group h = Group::heisenberg();
  EXPECT_THROW(multiply(z2.element({1, 2}), h.element({1, 2, 3})), UsageError);
  EXPECT_THROW(z2.element({1, 2, 3}), UsageError);
  EXPECT_THROW(Group::integer_lattice(0), UsageError);
}

TEST(GroupTest, OverflowIsADomainError) {
  const Group z = Group::integer_lattice(1);
  const auto big = z.element({INT64_MAX});
  EXPECT_THROW(multiply(big, z.element({1})), DomainError);
}

TEST(FiniteSubsetTest, SortedAndDeduplicated) {
  const Group z = Group::integer_lattice(1);
  FiniteSubset s(z, {z.element({3}), z.element({1}), z.element({3})});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], z.element({1}));
  EXPECT_TRUE(s.contains(z.element({3})));
  EXPECT_FALSE(s.contains(z.element({2})));
}

TEST(FiniteSubsetTest, ProductSetMatchesDoubleLoop) {
  std::mt19937_64 rng(3);
  for (const Group& g : {Group::integer_lattice(2), Group::heisenberg()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto k = random_set(g, rng, 1 + trial % 7, 4);
      const auto a = random_set(g, rng, 1 + trial % 11, 6);
      std::vector<GroupElement> pairs;
      for (const auto& x : k)
        for (const auto& y : a) pairs.push_back(multiply(x, y));
      EXPECT_EQ(product_set(k, a), FiniteSubset(g, pairs));
    }
  }
}

TEST(FiniteSubsetTest, SparseProductSetMatchesDoubleLoop) {
  const Group z2 = Group::integer_lattice(2);
  const FiniteSubset k(z2, {z2.element({0, 0}), z2.element({1000000, -3})});
  const FiniteSubset a(z2, {z2.element({0, 5}), z2.element({-7, 2000000})});
  std::vector<GroupElement> pairs;
  for (const auto& x : k)
    for (const auto& y : a) pairs.push_back(multiply(x, y));
  EXPECT_EQ(product_set(k, a), FiniteSubset(z2, pairs));
}

TEST(FiniteSubsetTest, SetAlgebra) {
  const Group z = Group::integer_lattice(1);
  const auto a = FiniteSubset::cube(z, 0, 4);
  const auto b = FiniteSubset::cube(z, 2, 6);
  EXPECT_EQ(set_union(a, b), FiniteSubset::cube(z, 0, 6));
  EXPECT_EQ(set_intersection(a, b), FiniteSubset::cube(z, 2, 4));
  EXPECT_EQ(set_difference(a, b), FiniteSubset::cube(z, 0, 2));
  EXPECT_EQ(symmetric_difference(a, b).size(), 4u);
  EXPECT_EQ(inverse_set(a), FiniteSubset::cube(z, -3, 1));
}

TEST(FiniteSubsetTest, FoelnerDefectOfIntervals) {
  const Group z = Group::integer_lattice(1);
  const auto f = FiniteSubset::cube(z, 0, 10);
  EXPECT_EQ(foelner_defect(f, z.element({1})), Rational(2, 10));
  EXPECT_EQ(foelner_defect(f, z.element({3})), Rational(6, 10));
  EXPECT_EQ(foelner_defect(f, z.element({20})), Rational(2));
  EXPECT_THROW(foelner_defect(FiniteSubset(z), z.element({1})), DomainError);
}

TEST(FiniteSubsetTest, FoelnerDefectMatchesSymmetricDifference) {
  std::mt19937_64 rng(5);
  const Group h = Group::heisenberg();
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_set(h, rng, 1 + trial % 13, 3);
    const auto g = random_element(h, rng, 3);
    const auto diff = symmetric_difference(left_translate(g, f), f);
    EXPECT_EQ(foelner_defect(f, g), Rational(diff.size(), f.size()));
  }
}

TEST(FiniteSubsetTest, BoundaryOfSquareWithCornerWindow) {
  const Group z2 = Group::integer_lattice(2);
  const auto a = FiniteSubset::cube(z2, 0, 3);
  const FiniteSubset k(z2, {z2.element({0, 0}), z2.element({1, 0}), z2.element({0, 1})});
  const auto b = k_boundary(a, k);
  // Five cells of A on its upper edges plus six cells just below or left of A.
  EXPECT_EQ(b.size(), 11u);
  EXPECT_TRUE(b.contains(z2.element({2, 2})));
  EXPECT_TRUE(b.contains(z2.element({-1, 0})));
  EXPECT_FALSE(b.contains(z2.element({-1, -1})));
}

TEST(FiniteSubsetTest, BoundaryMatchesDefinition) {
  std::mt19937_64 rng(9);
  for (const Group& g : {Group::integer_lattice(2), Group::heisenberg()}) {
    for (int trial = 0; trial < 150; ++trial) {
      const auto a = random_set(g, rng, 1 + trial % 17, 3);
      const auto k = random_set(g, rng, 1 + trial % 4, 2);
      const auto expected = brute_boundary(a, k);
      const auto b = k_boundary(a, k);
      EXPECT_EQ(std::set<GroupElement>(b.begin(), b.end()), expected);
    }
  }
}

TEST(FiniteSubsetTest, StrictInvariance) {
  const Group z = Group::integer_lattice(1);
  const auto a = FiniteSubset::cube(z, 0, 10);
  const auto k = FiniteSubset::cube(z, -1, 2);
  // B(A, K) = {-1, 0, 9, 10}.
  EXPECT_EQ(k_boundary(a, k).size(), 4u);
  EXPECT_FALSE(is_k_delta_invariant(a, k, Rational(4, 10)));
  EXPECT_TRUE(is_k_delta_invariant(a, k, Rational(41, 100)));
  EXPECT_THROW(is_k_delta_invariant(a, k, Rational(0)), DomainError);
  EXPECT_THROW(k_boundary(a, FiniteSubset(z)), DomainError);
}

}  // namespace
}  // namespace amenable
