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

#ifndef MOM_INTERPOLATE_H_
#define MOM_INTERPOLATE_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "mom/linalg.h"
#include "mom/poly.h"
#include "mom/rational.h"

namespace mom {

// Monomials of total degree <= d.
struct TotalDegreeBasis {
  std::uint32_t d = 0;
};

// Bivariate monomials X^i Y^j with i + k*j <= d and j <= ydeg_cap.
struct WeightedDegreeBasis {
  std::uint32_t d = 0;
  std::uint32_t k = 1;
  std::uint32_t ydeg_cap = 0;
};

using MonomialBasis = std::variant<TotalDegreeBasis, WeightedDegreeBasis>;

struct InterpolationProblem {
  FieldSpec spec;
  std::size_t n = 0;
  std::vector<Point> points;  // duplicate-free
  std::uint32_t m = 1;        // required multiplicity
  MonomialBasis basis;
};

#ifdef NDEBUG
inline constexpr bool kVerifyInterpolationByDefault = false;
#else
inline constexpr bool kVerifyInterpolationByDefault = true;
#endif

struct InterpolationOptions {
  // Re-check mult(P, a) >= m at every point after solving.
  bool verify = kVerifyInterpolationByDefault;
};

// C(d + n, n).
BigInt count_total_degree_monomials(std::uint32_t n, std::uint32_t d);

// #{(i, j) : i + k*j <= d, j <= floor(theta*d/k)} for 0 < k < d and
// theta in [0, 1]; throws kInvalidParameters otherwise.
std::uint64_t count_weighted_monomials(std::uint32_t k, std::uint32_t d, const Rational& theta);

// Same count with an explicit Y-degree cap and no range restrictions.
std::uint64_t count_weighted_monomials_capped(std::uint32_t k, std::uint32_t d,
                                              std::uint32_t ydeg_cap);

// Basis monomials in graded-lex order; this is the column order.
std::vector<Exponents> basis_monomials(const InterpolationProblem& problem);

// C(m + n - 1, n) * |points|: one constraint per point and per derivative
// index of weight < m.
BigInt constraint_count(const InterpolationProblem& problem);

// Rows indexed by (point, i) with wt(i) < m, points outer, i in graded-lex
// order; entry for monomial r is C(r, i) * a^(r - i).
Matrix vanishing_constraints(const InterpolationProblem& problem);

// A nonzero polynomial in the basis with multiplicity >= m at every point.
// Throws kUnsatisfiedCountHypothesis unless the basis is strictly larger
// than the constraint count.
MultiPoly vanishing_interpolation(const InterpolationProblem& problem,
                                  const InterpolationOptions& options = {});

}  // namespace mom

#endif  // MOM_INTERPOLATE_H_
