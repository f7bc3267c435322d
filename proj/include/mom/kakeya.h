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

#ifndef MOM_KAKEYA_H_
#define MOM_KAKEYA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mom/poly.h"
#include "mom/rational.h"

namespace mom {

// A line {a + t*b : t in F_q} recorded as (direction b, offset a).
struct LineWitness {
  Point direction;
  Point offset;
};

struct KakeyaInstance {
  FieldSpec spec;
  std::size_t n = 0;
  std::vector<Point> points;          // K, duplicate-free
  std::vector<LineWitness> witnesses;  // optional; each line must lie in K
};

// Nonzero directions normalized so the first nonzero coordinate is 1, in
// point-index order. Scalar multiples give the same set of lines.
std::vector<Point> canonical_directions(const FieldSpec& spec, std::size_t n);

// All points a + t*b, t in field enumeration order.
std::vector<Point> line_points(const Point& offset, const Point& direction);

struct KakeyaCheck {
  bool is_kakeya = false;
  // One witness per canonical direction when is_kakeya; the offset is the
  // smallest-index point of K starting a contained line.
  std::vector<LineWitness> witnesses;
  std::optional<Point> violating_direction;
};

// True iff K contains a full line in every nonzero direction. The empty
// set is never Kakeya.
KakeyaCheck is_kakeya(const FieldSpec& spec, std::size_t n, const std::vector<Point>& k);

// True iff every listed witness line lies inside the instance's set.
bool witnesses_contained(const KakeyaInstance& instance);

struct KakeyaBounds {
  Rational crude;  // q^n / 2^n
  Rational main;   // (q / (2 - 1/q))^n = (q^2 / (2q - 1))^n
};

KakeyaBounds kakeya_lower_bounds(std::uint32_t q, std::uint32_t n);

struct MinKakeyaResult {
  bool found = false;
  std::vector<Point> set;  // lexicographically least among minimum-size sets
  KakeyaBounds bounds;
  std::uint64_t subsets_examined = 0;
};

// Exhaustive search by increasing cardinality up to size_cap (default q^n).
// Requires q^n <= 16; throws kSearchSpaceTooLarge otherwise.
MinKakeyaResult exhaustive_min_kakeya(const FieldSpec& spec, std::size_t n,
                                      std::optional<std::size_t> size_cap = std::nullopt);

struct HomogeneousVanishingEntry {
  Point point;
  Multiplicity multiplicity;
  // b = 0, or K contains a full line in direction b. The vanishing claim
  // is only derived for covered points.
  bool covered = false;
};

struct HomogeneousVanishingReport {
  std::uint32_t l = 0;
  std::uint32_t m = 0;
  std::uint32_t d = 0;
  MultiPoly interpolant;
  MultiPoly top_part;  // H_P
  std::vector<HomogeneousVanishingEntry> entries;  // every b in F_q^n
  bool claim_holds = false;       // mult(H_P, b) >= l at every covered b
  bool all_points_hold = false;   // mult(H_P, b) >= l at every b
};

// Interpolates P with mult >= m on K and total degree <= d, takes its top
// homogeneous part H_P and measures mult(H_P, b) at every b in F_q^n.
// Requires l a positive multiple of q, m = 2l - l/q and d = lq - 1
// (kInvalidParameters otherwise). Throws kUnsatisfiedCountHypothesis when
// C(m+n-1, n)|K| >= C(d+n, n).
HomogeneousVanishingReport homogeneous_vanishing_check(const KakeyaInstance& instance,
                                                       std::uint32_t l, std::uint32_t m,
                                                       std::uint32_t d);
HomogeneousVanishingReport homogeneous_vanishing_check(const KakeyaInstance& instance,
                                                       std::uint32_t l);

struct StatKakeyaInstance {
  FieldSpec spec;
  std::size_t n = 0;
  std::vector<Point> s;       // |S| = lambda * q^n
  std::vector<Curve> curves;  // curves[i] is the curve for s[i]
  std::vector<Point> k;
  Rational lambda;
  Rational eta;
  std::uint32_t curve_degree = 1;  // Lambda
};

struct StatKakeyaReport {
  bool hypothesis_ok = false;
  Rational bound;
  std::size_t set_size = 0;
  bool bound_holds = false;
  // Parameter values t with C_x(t) in K, per point of S.
  std::vector<std::uint64_t> intersections;
};

// (lambda*q / (Lambda*(lambda*q - 1)/(eta*q) + 1))^n.
Rational statistical_kakeya_bound(std::uint32_t q, std::uint32_t n, const Rational& lambda,
                                  const Rational& eta, std::uint32_t curve_degree);

// Throws kParameterViolation when eta*q <= Lambda and kHypothesisViolation
// (naming the point) when a curve misses its point, exceeds degree Lambda
// or meets K in fewer than eta*q parameter values.
StatKakeyaReport statistical_kakeya_check(const StatKakeyaInstance& instance);

// Lines as degree-1 curves: S is every point lying on a line contained in
// K, each paired with the first such line; lambda = |S|/q^n, eta = 1.
StatKakeyaInstance stat_instance_from_lines(const FieldSpec& spec, std::size_t n,
                                            const std::vector<Point>& k);

}  // namespace mom

#endif  // MOM_KAKEYA_H_
