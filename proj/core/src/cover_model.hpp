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
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "amenable/dimension.hpp"
#include "amenable/foelner.hpp"
#include "amenable/subshift.hpp"

namespace amenable::internal {

// log w(n) for a cylinder at scale n.
using LogWeight = std::function<double(std::size_t)>;

// Cheapest cover of a fixed universe of points (admissible patterns on the
// top scale) by cylinders of bounded scale, in the log domain.
class CoverModel {
 public:
  virtual ~CoverModel() = default;
  // log of the minimal (or greedy) cost using scales in [lo, hi]; +inf when
  // no such cover exists and -inf when the universe is empty.
  virtual double log_min_cost(std::size_t lo, std::size_t hi,
                              const LogWeight& log_weight) const = 0;
};

std::unique_ptr<CoverModel> make_cover_model(const Subshift& sft, const FoelnerSequence& seq,
                                             std::size_t top, CoverSolver solver);

// Greedy cover with log-domain weights. Returns the chosen set indices, or
// nullopt when the sets leave part of the universe uncovered.
std::optional<std::vector<std::size_t>> greedy_cover_log(
    std::size_t universe_size, const std::vector<const std::vector<std::size_t>*>& sets,
    const std::vector<double>& log_weights);

// log(exp(a) + exp(b)) with -inf as the neutral element.
double log_add(double a, double b);

}  // namespace amenable::internal
