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

#include "amenable/covering.hpp"
#include "amenable/foelner.hpp"
#include "amenable/rational.hpp"
#include "amenable/subshift.hpp"

namespace amenable {

/// A finite list of cylinders at scales n_1 < ... < n_k, used as one row of
/// shapes in the covering construction.
struct CoverFamily {
  std::size_t index = 0;
  std::vector<std::size_t> scales;
  std::vector<Cylinder> cylinders;
  bool covers_x = false;  // set by verify_cover_family
};

/// All locally admissible patterns on F_n for each listed scale. Scales are
/// sorted and deduplicated; covers_x is verified before returning.
CoverFamily admissible_cover_family(const Subshift& sft, const FoelnerSequence& seq,
                                    std::size_t index, std::vector<std::size_t> scales);

/// Sets family.covers_x: every locally admissible pattern on the largest
/// scale lies in some member cylinder. Returns the flag.
bool verify_cover_family(const Subshift& sft, const FoelnerSequence& seq, CoverFamily& family);

/// S = sum_{k>=1} r^k with r = sum of exp(-s m(U)) over all cylinders of all
/// families; +inf when r >= 1.
double cover_series_constant(std::span<const CoverFamily> families, double s);

/// Base points for row i, column j: the a with F_{n_{i,j}} a inside dom(x)
/// such that some family-i cylinder on F_{n_{i,j}} contains ax, where
/// (ax)_h = x_{h a}. Indexed [row][column] following families[row].scales.
std::vector<std::vector<FiniteSubset>> proof_base_points(const Pattern& x,
                                                         std::span<const CoverFamily> families,
                                                         const FoelnerSequence& seq);

enum class NameCase {
  kSingleTranslate,  // inside exactly one selected translate
  kUncovered,        // outside every selected translate
  kOverlap,          // inside two or more selected translates
};

struct CellProvenance {
  NameCase kind = NameCase::kUncovered;
  std::optional<std::size_t> translate;  // index into selection.selected
};

/// Symbol choice for uncovered and overlap cells.
enum class ResidualRule { kCopyPoint };

struct NameAssembly {
  Pattern name;
  std::vector<CellProvenance> provenance;  // parallel to name.domain()
  std::vector<std::size_t> cylinder_of;    // family cylinder used per translate
};

/// Builds the name of x over dom(x). A cell inside exactly one selected
/// translate F a takes U_{g a^{-1}} from the first cylinder U of family
/// `row` whose domain is F and which contains ax; every other cell takes
/// x's own symbol. Throws UsageError when a translate leaves dom(x) and
/// ContractViolation when no such cylinder exists.
NameAssembly assemble_name(const Pattern& x, const SelectionResult& selection,
                           std::span<const CoverFamily> families,
                           ResidualRule rule = ResidualRule::kCopyPoint);

}  // namespace amenable
