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
#include <vector>

#include <gtest/gtest.h>

#include "amenable/errors.hpp"
#include "amenable/proof_numerics.hpp"

namespace amenable {
namespace {

TEST(BinaryEntropyTest, KnownValues) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), std::log(2.0));
  EXPECT_NEAR(binary_entropy(0.01), 0.056001534, 1e-9);
  for (double t : {0.001, 0.1, 0.3, 0.45}) EXPECT_DOUBLE_EQ(binary_entropy(t), binary_entropy(1 - t));
  EXPECT_THROW(binary_entropy(0.0), DomainError);
  EXPECT_THROW(binary_entropy(1.0), DomainError);
}

TEST(BinaryEntropyTest, SmallArgumentsMatchSeries) {
  // -t log t + t - t^2/2 - t^3/6 ... for (1 - t) log(1 - t) expanded in t.
  for (double t : {1e-3, 1e-5, 1e-9}) {
    const double series = -t * std::log(t) + t - t * t / 2 - t * t * t / 6;
    EXPECT_NEAR(binary_entropy(t), series, 1e-12 * std::max(1.0, series));
  }
}

TEST(EntropyConditionTest, MonotoneAndVanishing) {
  double previous = 0;
  for (int k = 40; k >= 5; --k) {
    const double v = entropy_condition_lhs(std::pow(10.0, -k));
    EXPECT_GT(v, previous);
    previous = v;
  }
  EXPECT_LT(entropy_condition_lhs(1e-40), 1e-6);
  EXPECT_THROW(entropy_condition_lhs(1e-3), DomainError);
  EXPECT_THROW(entropy_condition_lhs(0.0), DomainError);
}

TEST(EntropyConditionTest, DeltaForEpsilon) {
  EXPECT_EQ(delta_for_epsilon(0.1), 1e-11);
  for (double eps : {0.5, 0.1, 0.01}) {
    const double delta = delta_for_epsilon(eps);
    EXPECT_LT(entropy_condition_lhs(delta), eps);
    EXPECT_LT(delta, eps);
    if (delta < 1e-3) {
      EXPECT_GE(entropy_condition_lhs(delta * 10), eps);
    }
  }
  EXPECT_THROW(delta_for_epsilon(0.0), DomainError);
}

TEST(MinScaleTest, Values) {
  EXPECT_NEAR(min_scale(1e-8) * 1e-8 * 0.9, 1.0, 1e-12);
  EXPECT_TRUE(std::isfinite(min_scale(1e-8)));
  EXPECT_THROW(min_scale(1e-4), DomainError);
  EXPECT_THROW(min_scale(-1.0), DomainError);
}

// Pascal's triangle oracle, in doubles, for small n.
double pascal_tail(std::uint64_t n, std::uint64_t k) {
  std::vector<double> row = {1};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<double> next(i + 1, 1);
    for (std::uint64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  double sum = 0;
  for (std::uint64_t m = 1; m <= k; ++m) sum += row[m];
  return sum;
}

TEST(BinomialBoundTest, ExactSumMatchesPascal) {
  for (std::uint64_t n : {10u, 37u, 100u, 250u}) {
    for (const Rational& delta : {Rational(1, 10), Rational(1, 4), Rational(2, 5)}) {
      const auto check = binomial_bound_check(n, delta);
      const double oracle = pascal_tail(n, check.terms);
      EXPECT_NEAR(check.exact_sum.convert_to<double>() / oracle, 1.0, 1e-12);
      EXPECT_NEAR(check.log_exact_sum, std::log(oracle), 1e-9);
      EXPECT_TRUE(check.holds) << n << " " << to_string(delta);
    }
  }
}

TEST(BinomialBoundTest, GridHoldsWhereDefined) {
  for (std::uint64_t n : {100u, 1000u, 10000u}) {
    for (const Rational& delta : {Rational(1, 10), Rational(1, 100)}) {
      const auto check = binomial_bound_check(n, delta);
      EXPECT_TRUE(check.holds);
      EXPECT_LE(check.log_exact_sum, check.log_bound);
    }
  }
  const auto big = binomial_bound_check(10000, Rational(1, 200));
  EXPECT_EQ(big.terms, 50u);
  EXPECT_TRUE(big.holds);
}

TEST(BinomialBoundTest, EmptyTailIsADomainError) {
  EXPECT_THROW(binomial_bound_check(10, Rational(1, 100)), DomainError);
  EXPECT_THROW(binomial_bound_check(100, Rational(1, 200)), DomainError);
  EXPECT_THROW(binomial_bound_check(100, Rational(0)), DomainError);
  EXPECT_THROW(log_stirling_q(10, Rational(1, 100)), DomainError);
}

TEST(BinomialBoundTest, StirlingFactorIsPositive) {
  for (std::uint64_t n : {100u, 1000u}) {
    EXPECT_GT(stirling_q(n, Rational(1, 10)), 0);
    EXPECT_DOUBLE_EQ(std::log(stirling_q(n, Rational(1, 10))), log_stirling_q(n, Rational(1, 10)));
  }
}

}  // namespace
}  // namespace amenable
