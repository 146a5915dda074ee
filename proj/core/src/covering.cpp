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

#include "amenable/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "amenable/errors.hpp"
#include "max_flow.hpp"

namespace amenable {
namespace {

const Rational kDeltaCeiling(1, 100);

BigInt ceil_rational(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

FiniteSubset row_union(const std::vector<FiniteSubset>& row, const Group& group) {
  FiniteSubset out(group);
  for (const FiniteSubset& s : row) out = set_union(out, s);
  return out;
}

// Deterministic Fisher-Yates; std::shuffle's output is implementation-defined.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace

CoveringInstance::CoveringInstance(Group group, std::vector<std::vector<FiniteSubset>> shapes,
                                   std::vector<std::vector<FiniteSubset>> bases,
                                   FiniteSubset ambient, Rational delta, FiniteSubset window,
                                   Rational temper_bound)
    : group_(std::move(group)),
      shapes_(std::move(shapes)),
      bases_(std::move(bases)),
      ambient_(std::move(ambient)),
      delta_(std::move(delta)),
      window_(std::move(window)),
      temper_bound_(std::move(temper_bound)) {
  if (delta_ <= 0 || delta_ >= kDeltaCeiling) {
    throw DomainError("covering delta must lie in (0, 1/100), got " + to_string(delta_));
  }
  if (temper_bound_ <= 0) throw DomainError("temperedness constant C must be positive");
  if (shapes_.empty()) throw UsageError("covering instance needs at least one row");
  if (shapes_.size() != bases_.size()) throw UsageError("shape and base arrays differ in rows");
  if (window_.empty()) throw UsageError("window D must be nonempty");
  auto same_group = [&](const FiniteSubset& s, const std::string& what) {
    if (!(s.group() == group_)) throw UsageError(what + " is not a subset of " + group_.name());
  };
  same_group(ambient_, "ambient set");
  same_group(window_, "window D");
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (shapes_[i].empty()) throw UsageError("row " + std::to_string(i) + " has no shapes");
    if (shapes_[i].size() != bases_[i].size()) {
      throw UsageError("row " + std::to_string(i) + ": shape and base counts differ");
    }
    for (std::size_t j = 0; j < shapes_[i].size(); ++j) {
      same_group(shapes_[i][j], "shape");
      same_group(bases_[i][j], "base set");
      if (shapes_[i][j].empty()) throw UsageError("shapes must be nonempty");
    }
  }
}

bool HypothesisReport::all_hold() const {
  if (!containment) return false;
  for (bool b : row_tempered)
    if (!b) return false;
  for (const auto& row : cross_row)
    for (bool b : row)
      if (!b) return false;
  return true;
}

HypothesisReport check_hypotheses(const CoveringInstance& inst) {
  HypothesisReport report;
  const Group& group = inst.group();
  const auto& shapes = inst.shapes();

  for (const auto& row : shapes) {
    bool ok = true;
    FiniteSubset prefix = row[0];
    for (std::size_t k = 1; k < row.size() && ok; ++k) {
      const FiniteSubset spread = product_set(inverse_set(prefix), row[k]);
      ok = Rational(spread.size()) <= inst.temper_bound() * row[k].size();
      prefix = set_union(prefix, row[k]);
    }
    report.row_tempered.push_back(ok);
  }

  FiniteSubset lower(group);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    std::vector<bool> flags;
    if (i == 0) {
      flags.assign(shapes[i].size(), true);
    } else {
      const FiniteSubset spread = product_set(inst.window(), inverse_set(lower));
      for (const FiniteSubset& shape : shapes[i]) {
        const std::size_t size = product_set(spread, shape).size();
        flags.push_back(Rational(size) <= (1 + inst.delta()) * shape.size());
      }
    }
    report.cross_row.push_back(std::move(flags));
    lower = set_union(lower, row_union(shapes[i], group));
  }

  report.containment = true;
  for (std::size_t i = 0; i < shapes.size() && report.containment; ++i) {
    for (std::size_t j = 0; j < shapes[i].size() && report.containment; ++j) {
      for (const GroupElement& a : inst.bases()[i][j]) {
        for (const GroupElement& f : shapes[i][j]) {
          if (!inst.ambient().contains(multiply(f, a))) {
            report.containment = false;
            break;
          }
        }
        if (!report.containment) break;
      }
    }
  }

  if (inst.ambient().empty()) throw DomainError("ambient set is empty");
  std::optional<Rational> alpha;
  for (const auto& row : inst.bases()) {
    const std::size_t size = product_set(inst.window(), row_union(row, group)).size();
    const Rational ratio(size, inst.ambient().size());
    if (!alpha || ratio < *alpha) alpha = ratio;
  }
  report.alpha = *alpha;
  return report;
}

std::optional<std::vector<FiniteSubset>> disjoint_cores(std::span<const FiniteSubset> collection,
                                                        std::span<const std::size_t> quotas) {
  if (collection.size() != quotas.size()) throw UsageError("one quota per set is required");
  if (collection.empty()) return std::vector<FiniteSubset>{};
  const Group& group = collection.front().group();

  std::vector<GroupElement> universe;
  for (const FiniteSubset& s : collection) {
    if (!(s.group() == group)) throw UsageError("collection mixes groups");
    universe.insert(universe.end(), s.begin(), s.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  std::size_t demand = 0;
  for (std::size_t k = 0; k < collection.size(); ++k) {
    if (quotas[k] > collection[k].size()) return std::nullopt;
    demand += quotas[k];
  }
  if (demand > universe.size()) return std::nullopt;

  // source -> set k (quota) -> element (1) -> sink (1)
  const int sets = static_cast<int>(collection.size());
  const int source = 0;
  const int sink = 1;
  const int set_base = 2;
  const int elem_base = set_base + sets;
  internal::MaxFlow flow(elem_base + static_cast<int>(universe.size()));
  std::vector<std::vector<std::pair<int, std::size_t>>> arcs(collection.size());
  for (int k = 0; k < sets; ++k) {
    flow.add_edge(source, set_base + k, static_cast<std::int64_t>(quotas[k]));
    for (const GroupElement& g : collection[k]) {
      const auto e = static_cast<std::size_t>(
          std::lower_bound(universe.begin(), universe.end(), g) - universe.begin());
      arcs[k].emplace_back(flow.add_edge(set_base + k, elem_base + static_cast<int>(e), 1), e);
    }
  }
  for (std::size_t e = 0; e < universe.size(); ++e) {
    flow.add_edge(elem_base + static_cast<int>(e), sink, 1);
  }
  if (flow.solve(source, sink) != static_cast<std::int64_t>(demand)) return std::nullopt;

  std::vector<int> owner(universe.size(), -1);
  for (int k = 0; k < sets; ++k) {
    for (const auto& [arc, e] : arcs[k]) {
      if (flow.flow_on(arc) > 0) owner[e] = k;
    }
  }
  for (int k = 0; k < sets; ++k) {
    for (const auto& [arc, e] : arcs[k]) {
      if (owner[e] < 0) owner[e] = k;
    }
  }
  std::vector<std::vector<GroupElement>> cores(collection.size());
  for (std::size_t e = 0; e < universe.size(); ++e) {
    if (owner[e] >= 0) cores[static_cast<std::size_t>(owner[e])].push_back(universe[e]);
  }
  std::vector<FiniteSubset> out;
  out.reserve(cores.size());
  for (auto& c : cores) out.push_back(from_sorted(group, std::move(c)));
  return out;
}

std::optional<std::vector<FiniteSubset>> delta_disjoint_decide(
    std::span<const FiniteSubset> collection, const Rational& delta) {
  if (delta < 0 || delta >= 1) {
    throw DomainError("delta-disjointness needs delta in [0, 1), got " + to_string(delta));
  }
  std::vector<std::size_t> quotas;
  quotas.reserve(collection.size());
  for (const FiniteSubset& s : collection) {
    quotas.push_back(ceil_rational((1 - delta) * s.size()).convert_to<std::size_t>());
  }
  return disjoint_cores(collection, quotas);
}

SelectionThresholds selection_thresholds(const Rational& delta) {
  if (delta <= 0) throw DomainError("delta must be positive");
  return {fourth_root_bounds(delta)};
}

std::size_t SelectionThresholds::core_quota(std::size_t translate_size) const {
  const Rational fraction = 1 - 10 * root.lo;
  if (fraction <= 0) return 0;
  return ceil_rational(fraction * translate_size).convert_to<std::size_t>();
}

Rational SelectionThresholds::coverage_target(const Rational& alpha,
                                              std::size_t ambient_size) const {
  return (alpha - root.lo) * ambient_size;
}

SelectionResult lindenstrauss_select(const CoveringInstance& inst, const SelectOptions& options) {
  const HypothesisReport report = check_hypotheses(inst);
  if (!report.all_hold()) {
    throw GuaranteeUnmet("covering hypotheses do not hold for this instance");
  }
  const Group& group = inst.group();
  const FiniteSubset& ambient = inst.ambient();
  const SelectionThresholds thresholds = selection_thresholds(inst.delta());
  const Rational target = thresholds.coverage_target(report.alpha, ambient.size());

  struct Candidate {
    std::size_t row;
    std::size_t column;
    GroupElement base;
  };
  std::mt19937_64 rng(options.seed);
  std::vector<Candidate> candidates;
  for (std::size_t i = inst.rows(); i-- > 0;) {
    for (std::size_t j = inst.shapes()[i].size(); j-- > 0;) {
      std::vector<GroupElement> bases(inst.bases()[i][j].begin(), inst.bases()[i][j].end());
      seeded_shuffle(bases, rng);
      for (const GroupElement& a : bases) candidates.push_back({i, j, a});
    }
  }

  std::vector<char> covered(ambient.size(), 0);
  std::size_t covered_count = 0;
  std::vector<SelectedTranslate> selected;
  std::vector<FiniteSubset> selected_sets;
  std::vector<std::size_t> quotas;
  std::vector<std::vector<std::size_t>> cores;  // ambient indices

  std::vector<std::size_t> cells;
  std::vector<std::size_t> fresh;
  for (const Candidate& cand : candidates) {
    const FiniteSubset translate = right_translate(inst.shapes()[cand.row][cand.column], cand.base);
    cells.clear();
    fresh.clear();
    for (const GroupElement& g : translate) {
      const std::size_t idx = *ambient.index_of(g);  // containment checked above
      cells.push_back(idx);
      if (!covered[idx]) fresh.push_back(idx);
    }
    if (fresh.empty()) continue;
    const std::size_t quota = thresholds.core_quota(translate.size());

    if (fresh.size() >= quota) {
      // Uncovered cells are disjoint from every existing core.
      cores.push_back(fresh);
    } else {
      std::size_t union_size = covered_count + fresh.size();
      std::size_t demand = std::accumulate(quotas.begin(), quotas.end(), quota);
      if (demand > union_size) continue;
      std::vector<FiniteSubset> trial = selected_sets;
      trial.push_back(translate);
      std::vector<std::size_t> trial_quotas = quotas;
      trial_quotas.push_back(quota);
      auto rebalanced = disjoint_cores(trial, trial_quotas);
      if (!rebalanced) continue;
      cores.clear();
      for (const FiniteSubset& core : *rebalanced) {
        std::vector<std::size_t> idx;
        for (const GroupElement& g : core) idx.push_back(*ambient.index_of(g));
        cores.push_back(std::move(idx));
      }
    }
    for (std::size_t idx : fresh) covered[idx] = 1;
    covered_count += fresh.size();
    selected.push_back({cand.row, cand.column, cand.base, translate});
    selected_sets.push_back(translate);
    quotas.push_back(quota);
  }

  SelectionResult result(group);
  result.alpha = report.alpha;
  std::vector<int> core_owner(ambient.size(), -1);
  for (std::size_t k = 0; k < cores.size(); ++k) {
    std::vector<GroupElement> elems;
    for (std::size_t idx : cores[k]) {
      if (core_owner[idx] >= 0) throw GuaranteeUnmet("selection produced overlapping cores");
      core_owner[idx] = static_cast<int>(k);
      elems.push_back(ambient[idx]);
    }
    FiniteSubset core(group, std::move(elems));
    if (core.size() < quotas[k] || !core.is_subset_of(selected_sets[k])) {
      throw GuaranteeUnmet("selection produced an undersized core");
    }
    result.cores.push_back(std::move(core));
  }
  if (!disjoint_cores(selected_sets, quotas)) {
    throw GuaranteeUnmet("flow check rejects the disjointness of the selection");
  }
  std::vector<GroupElement> union_elems;
  for (std::size_t idx = 0; idx < ambient.size(); ++idx) {
    if (covered[idx]) union_elems.push_back(ambient[idx]);
  }
  result.covered = from_sorted(group, std::move(union_elems));
  result.coverage = Rational(result.covered.size(), ambient.size());
  if (Rational(result.covered.size()) < target) {
    throw GuaranteeUnmet("selection covers " + std::to_string(result.covered.size()) + " of " +
                         std::to_string(ambient.size()) + " elements, below the target " +
                         format_real(to_double(target)));
  }

  std::vector<GroupElement> bases;
  for (const SelectedTranslate& s : selected) bases.push_back(s.base);
  result.base_points = FiniteSubset(group, bases);
  result.multiplicity.assign(result.base_points.size(), 0);
  for (const GroupElement& a : bases) ++result.multiplicity[*result.base_points.index_of(a)];
  result.selected = std::move(selected);
  return result;
}

CoveringInstance random_instance(const Group& group, std::uint64_t seed,
                                 const RandomInstanceParams& params) {
  if (params.delta <= 0 || params.delta >= kDeltaCeiling) {
    throw DomainError("covering delta must lie in (0, 1/100), got " + to_string(params.delta));
  }
  if (group.kind() != GroupKind::kIntegerLattice) {
    throw UsageError("random covering instances are generated over Z^d only");
  }
  if (params.rows < 1 || params.shapes_per_row < 1 || params.ambient_extent < 1 ||
      params.bottom_max_side < 1) {
    throw UsageError("random instance parameters must be positive");
  }
  const std::size_t d = group.rank();
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto pow_d = [d](std::int64_t x) {
    BigInt out = 1;
    for (std::size_t i = 0; i < d; ++i) out *= x;
    return out;
  };

  const FiniteSubset ambient = FiniteSubset::cube(group, 0, params.ambient_extent);
  const FiniteSubset window = FiniteSubset::singleton(group.identity(), group);
  const Rational temper_bound(pow_d(2));

  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<std::vector<std::int64_t>> sides(params.rows);
    // Row 0: side 1 plus distinct sides from [2, bottom_max_side].
    std::vector<std::int64_t> pool;
    for (std::int64_t s = 2; s <= params.bottom_max_side; ++s) pool.push_back(s);
    seeded_shuffle(pool, rng);
    sides[0].push_back(1);
    for (std::size_t j = 0; j + 1 < params.shapes_per_row && j < pool.size(); ++j) {
      sides[0].push_back(pool[j]);
    }
    std::sort(sides[0].begin(), sides[0].end());

    std::int64_t largest = sides[0].back();
    bool fits = true;
    for (std::size_t i = 1; i < params.rows && fits; ++i) {
      // Least R with (R + L - 1)^d <= (1 + delta) R^d, and R > L.
      std::int64_t r = largest + 1;
      if (largest > 1) {
        const double guess = static_cast<double>(largest - 1) /
                             (std::pow(1.0 + to_double(params.delta), 1.0 / d) - 1.0);
        r = std::max<std::int64_t>(r, static_cast<std::int64_t>(guess) - 2);
        while (Rational(pow_d(r + largest - 1)) > (1 + params.delta) * Rational(pow_d(r))) ++r;
      }
      for (std::size_t j = 0; j < params.shapes_per_row; ++j) {
        sides[i].push_back(r);
        r += 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(r / 4 + 1));
      }
      largest = sides[i].back();
      fits = largest <= params.ambient_extent;
    }
    if (!fits) continue;

    std::vector<std::vector<FiniteSubset>> shapes(params.rows), bases(params.rows);
    for (std::size_t i = 0; i < params.rows; ++i) {
      for (std::int64_t side : sides[i]) {
        shapes[i].push_back(FiniteSubset::cube(group, 0, side));
        const double density = 0.2 + 0.7 * uniform();
        std::vector<GroupElement> chosen;
        const FiniteSubset positions =
            FiniteSubset::cube(group, 0, params.ambient_extent - side + 1);
        for (const GroupElement& a : positions) {
          if (uniform() < density) chosen.push_back(a);
        }
        if (chosen.empty()) chosen.push_back(positions[rng() % positions.size()]);
        bases[i].push_back(from_sorted(group, std::move(chosen)));
      }
    }
    CoveringInstance inst(group, std::move(shapes), std::move(bases), ambient, params.delta,
                          window, temper_bound);
    if (check_hypotheses(inst).all_hold()) return inst;
  }
  throw GenerationFailed("no valid covering instance after 32 attempts (seed " +
                         std::to_string(seed) + ")");
}

}  // namespace amenable
