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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace amenable {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal such as "0.005" or "1e-8" into an
/// exact rational. Throws UsageError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Natural log of a nonnegative big integer as long double; -inf for zero.
long double log_big(const BigInt& value);

/// Rational endpoints lo <= value^(1/4) <= hi with hi - lo tiny.
/// log(value) / divisor, computed with 50 decimal digits and rounded once to
/// double, so log(k^n) / n reproduces std::log(k). Zero maps to -inf.
double log_per_unit(const BigInt& value, std::size_t divisor);

struct RationalInterval {
  Rational lo;
  Rational hi;
};
RationalInterval fourth_root_bounds(const Rational& value);

/// Formats a double with six significant digits ("%.6g").
std::string format_real(double value);

}  // namespace amenable
