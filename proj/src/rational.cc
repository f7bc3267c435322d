// Copyright 2026 The mom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mom/rational.h"

#include <cctype>

#include "mom/error.h"

namespace mom {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::kParseError,
                "not a rational number: '" + std::string(whole) + "'");
  }
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || !all_digits(frac_part)) {
      throw Error(ErrorCode::kParseError,
                  "not a rational number: '" + std::string(text) + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    Rational r = Rational(BigInt(std::string(int_part))) +
                 Rational(BigInt(std::string(frac_part)), scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text, text));
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(boost::multiprecision::pow(numerator(base), exponent),
                  boost::multiprecision::pow(denominator(base), exponent));
}

BigInt floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt f = floor(r);
  return f * denominator(r) == numerator(r) ? f : BigInt(f + 1);
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace mom
