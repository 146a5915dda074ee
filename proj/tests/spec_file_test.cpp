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

#include <string>

#include <gtest/gtest.h>

#include "amenable/errors.hpp"
#include "amenable/spec_file.hpp"
#include "json.hpp"

namespace amenable {
namespace {

// The cube [lo, hi]^d with both ends included.
FiniteSubset closed_cube(const Group& lattice, std::int64_t lo, std::int64_t hi) {
  return FiniteSubset::cube(lattice, lo, hi + 1);
}

void expect_same_subshift(const Subshift& a, const Subshift& b) {
  EXPECT_TRUE(a.group() == b.group());
  EXPECT_EQ(a.alphabet(), b.alphabet());
  EXPECT_EQ(a.forbidden(), b.forbidden());
}

TEST(SpecFileTest, ParsesSubshiftAndSequence) {
  const SpecFile spec = parse_spec(R"({
    "group": {"kind": "lattice", "d": 1},
    "alphabet": ["0", "1"],
    "forbidden": [{"cells": [{"offset": [0], "symbol": "1"}, {"offset": [1], "symbol": "1"}]}],
    "foelner": {"kind": "boxes"}
  })");
  ASSERT_TRUE(spec.subshift.has_value());
  expect_same_subshift(*spec.subshift, Subshift::golden_mean());
  ASSERT_TRUE(spec.foelner.has_value());
  EXPECT_EQ(spec.foelner->kind(), FoelnerKind::kLatticeBoxes);
  EXPECT_FALSE(spec.covering.has_value());
}

TEST(SpecFileTest, RoundTrips) {
  const Group z2 = Group::integer_lattice(2);
  SpecFile spec;
  spec.group = z2;
  spec.subshift = Subshift::hard_square();
  spec.foelner = FoelnerSequence::lattice_centered_boxes(2);
  const SpecFile back = parse_spec(to_spec_json(spec));
  EXPECT_TRUE(*back.group == z2);
  expect_same_subshift(*back.subshift, *spec.subshift);
  EXPECT_EQ(back.foelner->kind(), FoelnerKind::kLatticeCenteredBoxes);
  EXPECT_EQ(to_spec_json(back), to_spec_json(spec));

  SpecFile h;
  h.group = Group::heisenberg();
  h.subshift = Subshift::full_shift(Group::heisenberg(), 3);
  h.foelner = FoelnerSequence::heisenberg_boxes();
  EXPECT_EQ(to_spec_json(parse_spec(to_spec_json(h))), to_spec_json(h));
}

TEST(SpecFileTest, ExplicitSequencesRoundTrip) {
  const Group z = Group::integer_lattice(1);
  SpecFile spec;
  spec.group = z;
  spec.foelner = FoelnerSequence::explicit_sets(
      z, {closed_cube(z, 0, 0), closed_cube(z, -1, 1), closed_cube(z, 5, 9)});
  const SpecFile back = parse_spec(to_spec_json(spec));
  ASSERT_TRUE(back.foelner.has_value());
  EXPECT_EQ(back.foelner->length(), std::optional<std::size_t>(3));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(back.foelner->set(n), spec.foelner->set(n));
  EXPECT_FALSE(back.foelner->is_nested());
}

TEST(SpecFileTest, CoveringInstancesRoundTrip) {
  const Group z = Group::integer_lattice(1);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SpecFile spec;
    spec.group = z;
    spec.covering = random_instance(z, seed);
    const SpecFile back = parse_spec(to_spec_json(spec));
    ASSERT_TRUE(back.covering.has_value());
    EXPECT_TRUE(*back.covering == *spec.covering);
  }
}

TEST(SpecFileTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_spec("{"), UsageError);
  EXPECT_THROW(parse_spec("{}"), UsageError);
  EXPECT_THROW(parse_spec(R"({"group": {"kind": "free"}})"), UsageError);
  EXPECT_THROW(parse_spec(R"({"group": {"kind": "lattice", "d": 9}})"), UsageError);
  EXPECT_THROW(parse_spec(R"({"group": {"kind": "lattice", "d": 1}, "alphabet": ["0"],
      "forbidden": [{"cells": [{"offset": [0], "symbol": "7"}]}]})"),
               UsageError);
  EXPECT_THROW(parse_spec(R"({"group": {"kind": "heisenberg"}, "foelner": {"kind": "boxes"}})"),
               UsageError);
  EXPECT_THROW(load_spec("/nonexistent/file.spec"), UsageError);
}

TEST(SpecFileTest, OutputIsJson) {
  SpecFile spec;
  spec.group = Group::integer_lattice(1);
  spec.subshift = Subshift::golden_mean();
  const auto j = nlohmann::json::parse(to_spec_json(spec));
  EXPECT_EQ(j.at("group").at("kind"), "lattice");
  EXPECT_EQ(j.at("alphabet").size(), 2u);
}

}  // namespace
}  // namespace amenable
