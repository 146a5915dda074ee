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

#include "amenable/proof_numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "amenable/errors.hpp"

namespace amenable {
namespace {

std::uint64_t floor_product(std::uint64_t n, const Rational& delta) {
  const BigInt scaled = numerator(delta) * n / denominator(delta);
  return scaled.convert_to<std::uint64_t>();
}

void check_tail(std::uint64_t n, const Rational& delta, std::uint64_t k) {
  if (delta <= 0 || delta >= 1) throw DomainError("delta must lie in (0, 1)");
  if (k == 0) {
    throw DomainError("floor(delta n) = 0 for n = " + std::to_string(n) + ", delta = " +
                      to_string(delta));
  }
  if (k >= n) throw DomainError("floor(delta n) must be below n");
}

}  // namespace

double binary_entropy(double t) {
  if (!(t > 0 && t < 1)) throw DomainError("binary entropy needs 0 < t < 1");
  return -t * std::log(t) - (1 - t) * std::log1p(-t);
}

double entropy_condition_lhs(double delta) {
  if (!(delta > 0)) throw DomainError("delta must be positive");
  const double t = 2 * delta + 11 * std::pow(delta, 0.25);
  if (!(t < 1)) throw DomainError("2 delta + 11 delta^(1/4) must be below 1");
  return binary_entropy(t);
}

double delta_for_epsilon(double epsilon) {
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  for (int k = 3; k <= 300; ++k) {
    const double delta = std::pow(10.0, -k);
    if (!(delta < epsilon)) continue;
    const double t = 2 * delta + 11 * std::pow(delta, 0.25);
    if (t < 1 && entropy_condition_lhs(delta) < epsilon) return delta;
  }
  throw DomainError("no delta = 10^-k with k <= 300 satisfies the entropy condition");
}

double min_scale(double delta) {
  if (!(delta > 0)) throw DomainError("delta must be positive");
  const double slack = 1 - 10 * std::pow(delta, 0.25);
  if (!(slack > 0)) throw DomainError("10 delta^(1/4) must be below 1");
  return 1 / (delta * slack);
}

double log_stirling_q(std::uint64_t n, const Rational& delta) {
  const std::uint64_t k = floor_product(n, delta);
  check_tail(n, delta, k);
  const long double d = static_cast<long double>(to_double(delta));
  const long double nn = static_cast<long double>(n);
  const long double kk = static_cast<long double>(k);
  const long double rest = nn - kk;
  const long double alpha_n = 1.0L / (12.0L * nn);
  const long double alpha_rest = 1.0L / (12.0L * rest + 1.0L);
  const long double alpha_k = 1.0L / (12.0L * kk + 1.0L);
  const long double log_q =
      std::log(d / (1 - d)) + std::log(nn) +
      0.5L * (std::log(nn) - std::log(2.0L * std::numbers::pi_v<long double> * rest * kk)) +
      (alpha_n - alpha_rest - alpha_k + 1.0L);
  return static_cast<double>(log_q);
}

double stirling_q(std::uint64_t n, const Rational& delta) {
  return std::exp(log_stirling_q(n, delta));
}

BinomialBoundCheck binomial_bound_check(std::uint64_t n, const Rational& delta) {
  BinomialBoundCheck check;
  check.n = n;
  check.delta = delta;
  check.terms = floor_product(n, delta);
  check_tail(n, delta, check.terms);

  BigInt term = 1;  // C(n, 0)
  BigInt sum = 0;
  for (std::uint64_t m = 1; m <= check.terms; ++m) {
    term = term * (n - m + 1) / m;
    sum += term;
  }
  check.exact_sum = sum;
  check.log_exact_sum = static_cast<double>(log_big(sum));

  const long double d = static_cast<long double>(to_double(delta));
  const long double entropy = -d * std::log(d) - (1 - d) * std::log1p(-d);
  const long double log_bound =
      static_cast<long double>(log_stirling_q(n, delta)) + entropy * static_cast<long double>(n);
  check.log_bound = static_cast<double>(log_bound);
  check.bound = std::exp(check.log_bound);
  check.holds = log_big(sum) <= log_bound;
  return check;
}

}  // namespace amenable
