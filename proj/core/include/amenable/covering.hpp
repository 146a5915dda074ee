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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amenable/finite_subset.hpp"
#include "amenable/group.hpp"
#include "amenable/rational.hpp"

namespace amenable {

/// Input of the multi-scale covering lemma.
///
/// Row i (0-based here) holds shapes F[i][0..N_i) and base-point sets
/// A[i][0..N_i); the candidate translates are F[i][j]*a for a in A[i][j].
/// Rows are ordered by increasing scale: later rows are the large ones.
/// `window` is the set D and `temper_bound` the constant C of the
/// hypotheses. delta must lie in (0, 1/100).
class CoveringInstance {
 public:
  CoveringInstance(Group group, std::vector<std::vector<FiniteSubset>> shapes,
                   std::vector<std::vector<FiniteSubset>> bases, FiniteSubset ambient,
                   Rational delta, FiniteSubset window, Rational temper_bound);

  const Group& group() const { return group_; }
  std::size_t rows() const { return shapes_.size(); }
  const std::vector<std::vector<FiniteSubset>>& shapes() const { return shapes_; }
  const std::vector<std::vector<FiniteSubset>>& bases() const { return bases_; }
  const FiniteSubset& ambient() const { return ambient_; }
  const Rational& delta() const { return delta_; }
  const FiniteSubset& window() const { return window_; }
  const Rational& temper_bound() const { return temper_bound_; }

  friend bool operator==(const CoveringInstance&, const CoveringInstance&) = default;

 private:
  Group group_;
  std::vector<std::vector<FiniteSubset>> shapes_;
  std::vector<std::vector<FiniteSubset>> bases_;
  FiniteSubset ambient_;
  Rational delta_;
  FiniteSubset window_;
  Rational temper_bound_;
};

struct HypothesisReport {
  /// Row i: |U_{k'<k} F[i][k']^{-1} F[i][k]| <= C |F[i][k]| for all k >= 1.
  std::vector<bool> row_tempered;
  /// cross_row[i][k]: |D (U_{i'<i} F[i'][*])^{-1} F[i][k]| <= (1+delta)|F[i][k]|.
  /// Vacuously true for row 0.
  std::vector<std::vector<bool>> cross_row;
  /// min_i |D A[i][*]| / |F|.
  Rational alpha;
  /// F[i][j] a is inside the ambient set for every base point.
  bool containment = false;

  bool all_hold() const;
};

HypothesisReport check_hypotheses(const CoveringInstance& instance);

/// Exact delta-disjointness test. Returns pairwise disjoint cores
/// A'_k subset of A_k with |A'_k| >= ceil((1-delta)|A_k|), or nothing when no
/// such cores exist. Decided by a bipartite feasibility flow.
std::optional<std::vector<FiniteSubset>> delta_disjoint_decide(
    std::span<const FiniteSubset> collection, const Rational& delta);

/// Same decision with explicit per-set core sizes. Cores are grown with any
/// element left unassigned by the flow, so a pairwise disjoint collection
/// gets its own sets back.
std::optional<std::vector<FiniteSubset>> disjoint_cores(
    std::span<const FiniteSubset> collection, std::span<const std::size_t> quotas);

/// Rational bracket of delta^(1/4) and the derived thresholds used to certify
/// the selection: a translate T needs a core of at least
/// ceil((1 - 10 lo)|T|) elements and the union must reach (alpha - lo)|F|.
/// Using the lower endpoint makes both checks at least as strict as the
/// real-valued statement.
struct SelectionThresholds {
  RationalInterval root;  // delta^(1/4)
  std::size_t core_quota(std::size_t translate_size) const;
  Rational coverage_target(const Rational& alpha, std::size_t ambient_size) const;
};
SelectionThresholds selection_thresholds(const Rational& delta);

struct SelectedTranslate {
  std::size_t row = 0;
  std::size_t column = 0;
  GroupElement base;
  FiniteSubset translate;  // F[row][column] * base
};

struct SelectionResult {
  explicit SelectionResult(const Group& group) : covered(group), base_points(group) {}

  std::vector<SelectedTranslate> selected;
  std::vector<FiniteSubset> cores;  // parallel to selected, pairwise disjoint
  FiniteSubset covered;             // union of the selected translates
  Rational coverage;                // |covered| / |F|
  Rational alpha;
  FiniteSubset base_points;                 // distinct base points a
  std::vector<std::size_t> multiplicity;    // n(a), parallel to base_points
};

struct SelectOptions {
  /// Permutes base points within each (row, column) bucket.
  std::uint64_t seed = 0;
};

/// Greedy multi-scale selection: candidates are visited from the largest row
/// down, largest shape first; a translate is admitted when it adds new
/// elements and the enlarged collection still admits cores of the required
/// size. Every candidate is considered. The result is re-verified (flow-checked cores, exact coverage) before returning;
/// throws GuaranteeUnmet if either check fails or the hypotheses do not hold.
SelectionResult lindenstrauss_select(const CoveringInstance& instance,
                                     const SelectOptions& options = {});

struct RandomInstanceParams {
  std::size_t rows = 2;
  std::size_t shapes_per_row = 2;
  /// Ambient set is the cube [0, extent)^d.
  std::int64_t ambient_extent = 1000;
  /// Row-0 cube sides are drawn from [1, bottom_max_side]; side 1 is always
  /// present.
  std::int64_t bottom_max_side = 3;
  Rational delta{1, 200};
};

/// Deterministic random instance over Z^d built from nested cubes. Later rows
/// are sized so the cross-row hypothesis holds; generation retries until
/// check_hypotheses passes and throws GenerationFailed after a bounded
/// number of attempts. Throws DomainError for delta outside (0, 1/100).
CoveringInstance random_instance(const Group& group, std::uint64_t seed,
                                 const RandomInstanceParams& params = {});

}  // namespace amenable
