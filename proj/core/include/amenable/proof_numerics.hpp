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

#include <cstdint>

#include "amenable/rational.hpp"

namespace amenable {

/// -t log t - (1 - t) log(1 - t), natural log. DomainError unless 0 < t < 1.
double binary_entropy(double t);

/// H(2 delta + 11 delta^(1/4)), the entropy of the fraction of cells that a
/// name leaves to free choice. DomainError unless delta > 0 and
/// 2 delta + 11 delta^(1/4) < 1.
double entropy_condition_lhs(double delta);

/// Largest delta = 10^-k with delta < min(epsilon, 1/100) and
/// entropy_condition_lhs(delta) < epsilon. DomainError if epsilon <= 0 or
/// no k <= 300 qualifies.
double delta_for_epsilon(double epsilon);

/// 1 / (delta (1 - 10 delta^(1/4))): the size above which a Foelner set makes
/// the selected base points a delta fraction. DomainError unless
/// 0 < delta and 10 delta^(1/4) < 1.
double min_scale(double delta);

/// log Q(n) for k = floor(delta n):
///   Q(n) = delta/(1-delta) n sqrt(n / (2 pi (n-k) k)) e^(a_n - a_{n-k} - a_k + 1)
/// with a_n replaced by 1/(12n) and a_{n-k}, a_k by 1/(12m+1), which makes
/// Q an upper bound for every admissible choice of the Stirling remainders.
/// DomainError unless 0 < delta < 1 and 1 <= k < n.
double log_stirling_q(std::uint64_t n, const Rational& delta);
double stirling_q(std::uint64_t n, const Rational& delta);

struct BinomialBoundCheck {
  std::uint64_t n = 0;
  Rational delta;
  std::uint64_t terms = 0;  // floor(delta n)
  BigInt exact_sum;         // sum_{m=1}^{terms} C(n, m)
  double log_exact_sum = 0;
  double log_bound = 0;     // log Q(n) + H(delta) n
  double bound = 0;         // exp(log_bound); may be +inf
  bool holds = false;       // exact_sum <= Q(n) exp(H(delta) n)
};

/// Compares the exact binomial tail sum with the Stirling bound in the log
/// domain. Same domain as log_stirling_q.
BinomialBoundCheck binomial_bound_check(std::uint64_t n, const Rational& delta);

}  // namespace amenable
