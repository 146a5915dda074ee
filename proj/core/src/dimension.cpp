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

#include "amenable/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "amenable/errors.hpp"
#include "cover_model.hpp"

namespace amenable {
namespace {

constexpr double kDecayRatio = 1e-6;

enum class CostRoute { kEntropy, kDiameter };

void check_params(const EstimateParams& params) {
  if (!(params.tolerance > 0)) throw UsageError("tolerance must be positive");
  if (params.n_min == 0) throw UsageError("n_min must be positive");
  if (params.n_max < params.n_min + 3) throw UsageError("n_max must be at least n_min + 3");
}

double estimate(const Subshift& sft, const FoelnerSequence& seq, const EstimateParams& params,
                CostRoute route) {
  check_params(params);
  const std::size_t w = std::max<std::size_t>(1, (params.n_max - params.n_min) / 3);
  const std::size_t top = params.n_min + 3 * w;
  const auto model = internal::make_cover_model(sft, seq, top, params.solver);
  const double drop = std::log1p(-kDecayRatio);

  auto decays = [&](double s) {
    internal::LogWeight weight;
    if (route == CostRoute::kEntropy) {
      weight = [&seq, s](std::size_t n) {
        return -s * static_cast<double>(seq.set_size(n));
      };
    } else {
      weight = [&seq, s](std::size_t n) { return s * cylinder_log_diameter(seq, n); };
    }
    double m[3];
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t lo = params.n_min + k * w;
      m[k] = model->log_min_cost(lo, lo + w, weight);
    }
    if (m[2] == -std::numeric_limits<double>::infinity()) return true;
    return m[1] < m[0] + drop && m[2] < m[1] + drop;
  };

  double lo = 0;
  double hi = std::log(static_cast<double>(sft.alphabet_size())) + 1;
  while (hi - lo > params.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (decays(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double cover_cost(std::span<const Cylinder> cover, double s, const FoelnerSequence& seq) {
  if (!(s >= 0)) throw DomainError("s must be nonnegative");
  double total = 0;
  for (const Cylinder& c : cover) {
    const std::size_t size = seq.set_size(c.scale);
    if (c.pattern.size() != size) {
      throw UsageError("cylinder domain is not F_" + std::to_string(c.scale));
    }
    total += std::exp(-s * static_cast<double>(size));
  }
  return total;
}

double cylinder_log_diameter(const FoelnerSequence& seq, std::size_t n) {
  return -static_cast<double>(seq.set_size(n));
}

SetCoverSolution greedy_weighted_set_cover(std::size_t universe_size,
                                           std::span<const std::vector<std::size_t>> sets,
                                           std::span<const double> weights) {
  if (sets.size() != weights.size()) throw UsageError("one weight per set is required");
  std::vector<const std::vector<std::size_t>*> pointers;
  std::vector<double> log_weights;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!(weights[i] >= 0)) throw DomainError("set weights must be nonnegative");
    for (std::size_t u : sets[i]) {
      if (u >= universe_size) throw UsageError("set element outside the universe");
    }
    pointers.push_back(&sets[i]);
    log_weights.push_back(std::log(weights[i]));
  }
  const auto chosen = internal::greedy_cover_log(universe_size, pointers, log_weights);
  if (!chosen) throw DomainError("sets do not cover the universe");
  SetCoverSolution solution;
  solution.chosen = *chosen;
  for (std::size_t i : solution.chosen) solution.cost += weights[i];
  return solution;
}

double bowen_outer_measure(const Subshift& sft, const FoelnerSequence& seq, std::size_t n_lo,
                           double s, std::size_t n_max, CoverSolver solver) {
  if (n_lo == 0) throw UsageError("N must be positive");
  if (n_lo > n_max) throw UsageError("N must not exceed n_max");
  if (!(s >= 0)) throw DomainError("s must be nonnegative");
  const auto model = internal::make_cover_model(sft, seq, n_max, solver);
  const double log_cost = model->log_min_cost(n_lo, n_max, [&seq, s](std::size_t n) {
    return -s * static_cast<double>(seq.set_size(n));
  });
  return std::exp(log_cost);
}

double bowen_entropy_estimate(const Subshift& sft, const FoelnerSequence& seq,
                              const EstimateParams& params) {
  return estimate(sft, seq, params, CostRoute::kEntropy);
}

double hausdorff_dimension_estimate(const Subshift& sft, const FoelnerSequence& seq,
                                    const EstimateParams& params) {
  if (!seq.is_nested()) throw UsageError("the Foelner metric needs a nested sequence");
  const double dim = estimate(sft, seq, params, CostRoute::kDiameter);
  const double entropy = estimate(sft, seq, params, CostRoute::kEntropy);
  if (dim != entropy) {
    throw ContractViolation("dimension estimate " + format_real(dim) +
                            " differs from entropy estimate " + format_real(entropy));
  }
  return dim;
}

}  // namespace amenable
