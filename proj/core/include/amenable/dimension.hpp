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
#include <span>
#include <vector>

#include "amenable/foelner.hpp"
#include "amenable/subshift.hpp"

namespace amenable {

/// Sum over the cover of exp(-s |F_n|). Throws DomainError for s < 0 and
/// UsageError when a cylinder's domain is not F_n of `seq`.
double cover_cost(std::span<const Cylinder> cover, double s, const FoelnerSequence& seq);

/// log diam([w]_{F_n}) = -|F_n| under the Foelner metric.
double cylinder_log_diameter(const FoelnerSequence& seq, std::size_t n);

struct SetCoverSolution {
  std::vector<std::size_t> chosen;  // in selection order
  double cost = 0;
};

/// Greedy weighted set cover: repeatedly takes the set minimizing
/// weight / (newly covered elements), lowest index on ties. Throws
/// DomainError when the sets do not cover {0, ..., universe_size - 1}.
SetCoverSolution greedy_weighted_set_cover(std::size_t universe_size,
                                           std::span<const std::vector<std::size_t>> sets,
                                           std::span<const double> weights);

enum class CoverSolver {
  kAuto,     // kExact for nested sequences, kGreedy otherwise
  kExact,    // tree dynamic program; nested sequences only
  kGreedy,   // greedy set cover over enumerated patterns
};

/// Upper approximation of the infimum of sum exp(-s |F_n|) over covers of X
/// by cylinders with scales in [n_lo, n_max]. Points of X are represented by
/// the locally admissible patterns on F_{n_max}.
///
/// For nested sequences the cylinders form a tree, so the minimum is exact
/// for that universe: each node costs min(own weight, sum over children).
double bowen_outer_measure(const Subshift& sft, const FoelnerSequence& seq, std::size_t n_lo,
                           double s, std::size_t n_max, CoverSolver solver = CoverSolver::kAuto);

struct EstimateParams {
  std::size_t n_min = 4;
  std::size_t n_max = 16;
  double tolerance = 1e-3;
  CoverSolver solver = CoverSolver::kAuto;
};

/// Critical exponent of the outer measure by bisection on [0, log|A| + 1].
/// The range [n_min, n_max] is split into three windows of w scales; s is
/// classified as above the critical point when the measure restricted to
/// successive windows drops by a factor of at least 1 - 1e-6 twice in a row.
/// Requires n_max >= n_min + 3.
double bowen_entropy_estimate(const Subshift& sft, const FoelnerSequence& seq,
                              const EstimateParams& params);

/// The same bisection with cylinder costs diam^s. Requires a nested
/// sequence. Evaluates the entropy route as well and throws
/// ContractViolation unless both results are bit-identical.
double hausdorff_dimension_estimate(const Subshift& sft, const FoelnerSequence& seq,
                                    const EstimateParams& params);

}  // namespace amenable
