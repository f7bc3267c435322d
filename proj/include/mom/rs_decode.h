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

#ifndef MOM_RS_DECODE_H_
#define MOM_RS_DECODE_H_

#include <cstdint>
#include <vector>

#include "mom/poly.h"
#include "mom/rational.h"

namespace mom {

// Received word (alpha_i, beta_i), i < n, for a Reed-Solomon code of
// polynomials with degree <= k; t is the agreement target.
struct RSInstance {
  FieldSpec spec;
  std::vector<FieldElement> alphas;
  std::vector<FieldElement> betas;
  std::uint32_t k = 1;
  std::uint32_t t = 1;

  std::size_t n() const { return alphas.size(); }
  Rational rate() const;   // R = k/n
  Rational gamma() const;  // t/n
};

struct GSParams {
  std::uint32_t m = 0;
  std::uint32_t d = 0;
  Rational theta;
  std::uint32_t ydeg_cap = 0;
  Rational eps;
};

inline constexpr std::uint32_t kMaxMultiplicity = 10000;

// Smallest m >= 1 for which d = ceil((1+eps)*m*sqrt(nk/(theta(2-theta))))
// admits a nonzero interpolant (m(m+1)/2 * n < monomial count) and t*m > d,
// where theta = 2R/(R + gamma^2). Throws kBelowJohnsonRadius when
// gamma^2 <= R and kNoFeasibleM past kMaxMultiplicity.
GSParams choose_params(const RSInstance& inst, const Rational& eps);

// Q(X, Y) with (1,k)-weighted degree <= d, Y-degree <= ydeg_cap and
// multiplicity >= m at every (alpha_i, beta_i).
MultiPoly gs_interpolate(const RSInstance& inst, const GSParams& params);

// Coefficients c_0..c_k of a univariate polynomial, zero padded to k + 1.
std::vector<FieldElement> coefficient_vector(const MultiPoly& f, std::uint32_t k);

// Lexicographic order on coefficient vectors read from the top coefficient
// down; sorts 0 < 1 < ... < X < X + 1 < ...
bool canonical_less(const MultiPoly& a, const MultiPoly& b);

// Every f with deg f <= k and Q(X, f(X)) = 0, in canonical order. Uses
// coefficient-by-coefficient shift-and-divide recursion; when q^(k+1) is at
// most 10^4 and cross_check is set, the result is compared against
// exhaustive search (kInternalNoSolution on disagreement).
std::vector<MultiPoly> y_roots(const MultiPoly& q, std::uint32_t k, bool cross_check = true);
std::vector<MultiPoly> y_roots_brute_force(const MultiPoly& q, std::uint32_t k);

struct DecodeResult {
  GSParams params;
  MultiPoly interpolant;
  std::vector<MultiPoly> list;
};

// All f with deg f <= k agreeing with the word in at least t positions.
DecodeResult list_decode_report(const RSInstance& inst, const Rational& eps = Rational(1, 4));
std::vector<MultiPoly> list_decode(const RSInstance& inst, const Rational& eps = Rational(1, 4));

// Exhaustive search; throws kSearchSpaceTooLarge when q^(k+1) > 10^6.
std::vector<MultiPoly> brute_force_decode(const RSInstance& inst);

// |{i : f(alpha_i) = beta_i}|.
std::uint32_t agreement(const RSInstance& inst, const MultiPoly& f);

// 2*gamma/(gamma^2 - R); throws kInvalidParameters unless gamma^2 > R,
// 0 < gamma <= 1 and 0 < R < 1.
Rational list_size_bound(const Rational& gamma, const Rational& rate);

}  // namespace mom

#endif  // MOM_RS_DECODE_H_
