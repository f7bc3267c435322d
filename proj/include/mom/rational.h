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

#ifndef MOM_RATIONAL_H_
#define MOM_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "num/den" with den > 0, including integers ("6/1").
std::string to_string(const Rational& r);

// Accepts "a/b", "a" or a finite decimal such as "0.25"; throws
// Error(kParseError) otherwise.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace mom

#endif  // MOM_RATIONAL_H_
