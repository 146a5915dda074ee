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

#include "amenable/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "amenable/errors.hpp"

namespace amenable {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw UsageError("not a rational number: '" + std::string(original) + "'");
  }
  const BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

BigInt pow10(unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const std::string_view original = text;
  if (text.empty()) throw UsageError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), original);
    BigInt den = parse_integer(text.substr(slash + 1), original);
    if (den == 0) throw UsageError("zero denominator in '" + std::string(original) + "'");
    return Rational(num, den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt exp_value = parse_integer(text.substr(e + 1), original);
    if (abs(exp_value) > 4000) throw UsageError("exponent out of range in '" + std::string(original) + "'");
    exponent = exp_value.convert_to<long>();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw UsageError("not a rational number: '" + std::string(original) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) throw UsageError("not a rational number: '" + std::string(original) + "'");
    digits = std::string(text);
  }
  Rational value{BigInt(digits)};
  if (exponent > 0) value *= pow10(static_cast<unsigned>(exponent));
  if (exponent < 0) value /= pow10(static_cast<unsigned>(-exponent));
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

long double log_big(const BigInt& value) {
  if (value < 0) throw DomainError("log of a negative count");
  if (value == 0) return -std::numeric_limits<long double>::infinity();
  const unsigned msb = boost::multiprecision::msb(value);
  if (msb < 64) return std::log(value.convert_to<unsigned long long>() * 1.0L);
  const unsigned shift = msb - 63;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<unsigned long long>() * 1.0L) +
         static_cast<long double>(shift) * std::log(2.0L);
}

double log_per_unit(const BigInt& value, std::size_t divisor) {
  if (divisor == 0) throw DomainError("division by zero");
  if (value < 0) throw DomainError("log of a negative count");
  if (value == 0) return -std::numeric_limits<double>::infinity();
  using Wide = boost::multiprecision::cpp_bin_float_50;
  const Wide rate = boost::multiprecision::log(Wide(value)) / Wide(divisor);
  return rate.convert_to<double>();
}

RationalInterval fourth_root_bounds(const Rational& value) {
  if (value < 0) throw DomainError("fourth root of a negative number");
  if (value == 0) return {Rational(0), Rational(0)};
  const double approx = std::pow(to_double(value), 0.25);
  const BigInt scale = BigInt(1) << 60;
  const BigInt center(static_cast<long long>(std::floor(approx * std::ldexp(1.0, 52))));
  Rational mid(center << 8, scale);
  Rational slack(BigInt(1), BigInt(1) << 40);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational lo = mid - slack;
    if (lo < 0) lo = 0;
    Rational hi = mid + slack;
    if (lo * lo * lo * lo <= value && hi * hi * hi * hi >= value) return {lo, hi};
    slack *= 2;
  }
  throw DomainError("fourth root bracketing failed");
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

}  // namespace amenable
