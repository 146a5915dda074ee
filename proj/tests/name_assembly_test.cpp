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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "amenable/covering.hpp"
#include "amenable/errors.hpp"
#include "amenable/name_assembly.hpp"

namespace amenable {
namespace {

// Uniformly random symbol choices subject to "no 1 after 1".
Pattern random_golden_mean_point(const FoelnerSequence& seq, std::size_t n, std::mt19937_64& rng) {
  const FiniteSubset domain = seq.set(n);
  std::vector<Symbol> symbols(domain.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const bool after_one = i > 0 && symbols[i - 1] == 1;
    symbols[i] = after_one ? 0 : static_cast<Symbol>(rng() % 2);
  }
  return Pattern(domain, std::move(symbols));
}

struct Scenario {
  Pattern x;
  std::vector<CoverFamily> families;
  SelectionResult selection;
};

// Row 0 uses singletons, row 1 two larger boxes; every base point comes from
// the occurrences of family cylinders inside x.
Scenario make_scenario(std::uint64_t seed, std::size_t n) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  const Group& z = seq.group();
  std::mt19937_64 rng(seed);
  Pattern x = random_golden_mean_point(seq, n, rng);
  std::vector<CoverFamily> families = {
      admissible_cover_family(Subshift::golden_mean(), seq, 0, {1}),
      admissible_cover_family(Subshift::golden_mean(), seq, 1, {3, 5})};
  const auto bases = proof_base_points(x, families, seq);
  const std::vector<std::vector<FiniteSubset>> shapes = {{seq.set(1)}, {seq.set(3), seq.set(5)}};
  const CoveringInstance instance(z, shapes, bases, x.domain(), Rational(1, 200),
                                  FiniteSubset::singleton(z.identity(), z), Rational(2));
  SelectionResult selection = lindenstrauss_select(instance, SelectOptions{seed});
  return Scenario{std::move(x), std::move(families), std::move(selection)};
}

TEST(CoverFamilyTest, FullFamiliesCover) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  const auto family = admissible_cover_family(Subshift::golden_mean(), seq, 0, {4, 2});
  EXPECT_TRUE(family.covers_x);
  EXPECT_EQ(family.scales, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(family.cylinders.size(), 3u + 8u);
}

TEST(CoverFamilyTest, VerificationDetectsGaps) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  auto family = admissible_cover_family(Subshift::golden_mean(), seq, 0, {3});
  family.cylinders.pop_back();
  EXPECT_FALSE(verify_cover_family(Subshift::golden_mean(), seq, family));
  EXPECT_FALSE(family.covers_x);
  // A larger-scale cylinder is covered by a smaller-scale one.
  family.scales = {1, 3};
  family.cylinders.push_back(make_cylinder(seq, 1, Pattern::constant(seq.set(1), 0)));
  family.cylinders.push_back(make_cylinder(seq, 1, Pattern::constant(seq.set(1), 1)));
  EXPECT_TRUE(verify_cover_family(Subshift::golden_mean(), seq, family));
  family.cylinders.push_back(Cylinder{2, Pattern::constant(seq.set(2), 0)});
  EXPECT_THROW(verify_cover_family(Subshift::golden_mean(), seq, family), UsageError);
}

TEST(CoverFamilyTest, SeriesConstant) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  const std::vector<CoverFamily> families = {
      admissible_cover_family(Subshift::golden_mean(), seq, 0, {4})};
  const double r = 8 * std::exp(-4.0);
  EXPECT_NEAR(cover_series_constant(families, 1.0), r / (1 - r), 1e-15);
  EXPECT_EQ(cover_series_constant(families, 0.1), std::numeric_limits<double>::infinity());
  EXPECT_THROW(cover_series_constant(families, -1.0), DomainError);
}

TEST(ProofBasePointsTest, MatchesDirectScan) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  std::mt19937_64 rng(3);
  const Pattern x = random_golden_mean_point(seq, 40, rng);
  auto family = admissible_cover_family(Subshift::golden_mean(), seq, 0, {3});
  // Keep only the all-zero word.
  std::erase_if(family.cylinders, [](const Cylinder& c) {
    for (Symbol s : c.pattern.symbols())
      if (s != 0) return true;
    return false;
  });
  const auto bases = proof_base_points(x, std::vector<CoverFamily>{family}, seq);
  ASSERT_EQ(bases.size(), 1u);
  ASSERT_EQ(bases[0].size(), 1u);
  std::size_t expected = 0;
  for (std::size_t a = 0; a + 3 <= 40; ++a) {
    const bool zeros = x.symbols()[a] == 0 && x.symbols()[a + 1] == 0 && x.symbols()[a + 2] == 0;
    EXPECT_EQ(bases[0][0].contains(seq.group().element({static_cast<std::int64_t>(a)})), zeros);
    expected += zeros;
  }
  EXPECT_EQ(bases[0][0].size(), expected);
}

TEST(AssembleNameTest, NameContainsThePoint) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scenario s = make_scenario(seed, 60);
    const NameAssembly out = assemble_name(s.x, s.selection, s.families);
    EXPECT_TRUE(cylinder_contains(s.x, Cylinder{60, out.name}));
    EXPECT_EQ(out.cylinder_of.size(), s.selection.selected.size());
  }
}

TEST(AssembleNameTest, ProvenancePartitionsTheDomain) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Scenario s = make_scenario(seed, 80);
    const NameAssembly out = assemble_name(s.x, s.selection, s.families);
    const FiniteSubset& domain = s.x.domain();
    ASSERT_EQ(out.provenance.size(), domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      std::size_t hits = 0;
      std::size_t last = 0;
      for (std::size_t k = 0; k < s.selection.selected.size(); ++k) {
        if (s.selection.selected[k].translate.contains(domain[i])) {
          ++hits;
          last = k;
        }
      }
      const CellProvenance& p = out.provenance[i];
      EXPECT_EQ(s.selection.covered.contains(domain[i]), hits > 0);
      if (hits == 0) {
        EXPECT_EQ(p.kind, NameCase::kUncovered);
      } else if (hits == 1) {
        EXPECT_EQ(p.kind, NameCase::kSingleTranslate);
        ASSERT_TRUE(p.translate.has_value());
        EXPECT_EQ(*p.translate, last);
      } else {
        EXPECT_EQ(p.kind, NameCase::kOverlap);
        EXPECT_FALSE(p.translate.has_value());
      }
    }
  }
}

TEST(AssembleNameTest, MissingCylinderIsAContractViolation) {
  Scenario s = make_scenario(7, 60);
  ASSERT_FALSE(s.selection.selected.empty());
  const std::size_t row = s.selection.selected.front().row;
  for (CoverFamily& f : s.families) {
    if (f.index == row) f.cylinders.clear();
  }
  EXPECT_THROW(assemble_name(s.x, s.selection, s.families), ContractViolation);
}

}  // namespace
}  // namespace amenable
