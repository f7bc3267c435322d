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

#ifndef MOM_POLY_H_
#define MOM_POLY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mom/field.h"

namespace mom {

class Rng;

using Exponents = std::vector<std::uint32_t>;
using Point = std::vector<FieldElement>;

// wt(i) = i_1 + ... + i_n.
std::uint32_t weight(const Exponents& i);

// Graded lexicographic order: lower weight first; within a weight, the
// vector that is lexicographically larger comes first, so X1 precedes X2.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// All exponent vectors of length n and weight exactly w, in graded-lex order.
std::vector<Exponents> exponents_of_weight(std::size_t n, std::uint32_t w);

// Total degree; std::nullopt stands for the degree of the zero polynomial
// (minus infinity), which compares below every finite degree.
using Degree = std::optional<std::uint32_t>;

// Order of vanishing at a point: a non-negative integer, or infinite for
// the zero polynomial.
class Multiplicity {
 public:
  constexpr Multiplicity(std::uint32_t value) : value_(value), infinite_(false) {}  // NOLINT
  static constexpr Multiplicity infinite() { return Multiplicity(); }

  constexpr bool is_infinite() const { return infinite_; }
  // Meaningless when infinite.
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr Multiplicity() : value_(0), infinite_(true) {}
  std::uint32_t value_;
  bool infinite_;
};

// Sparse polynomial in n variables over F_q. Zero coefficients are never
// stored; terms iterate in graded-lex order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, FieldElement, GradedLexLess>;

  MultiPoly(FieldSpec spec, std::size_t num_vars);

  static MultiPoly constant(FieldSpec spec, std::size_t num_vars, const FieldElement& c);
  // X_{j+1}; j is zero-based.
  static MultiPoly variable(FieldSpec spec, std::size_t num_vars, std::size_t j);
  static MultiPoly monomial(FieldSpec spec, const Exponents& exps, const FieldElement& c);
  // c_0 + c_1 T + ... in one variable.
  static MultiPoly univariate(FieldSpec spec, const std::vector<FieldElement>& coeffs);

  const FieldSpec& spec() const { return spec_; }
  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;
  bool is_homogeneous() const;
  FieldElement coefficient(const Exponents& exps) const;
  // Coefficients of a univariate polynomial, low to high; empty for zero.
  std::vector<FieldElement> univariate_coefficients() const;

  // Adds c * X^exps into this polynomial.
  void add_term(const Exponents& exps, const FieldElement& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const FieldElement& c);
  MultiPoly operator-() const;
  MultiPoly pow(std::uint32_t k) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const FieldElement& c) { return a *= c; }
  friend MultiPoly operator*(const FieldElement& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void check_compatible(const MultiPoly& o) const;

  FieldSpec spec_;
  std::size_t num_vars_;
  TermMap terms_;
};

// A curve C(T) = (C_1(T), ..., C_n(T)) in F_q^n; each component is a
// univariate MultiPoly.
class Curve {
 public:
  explicit Curve(std::vector<MultiPoly> components);

  // The line a + T*b.
  static Curve line(const Point& a, const Point& b);

  const FieldSpec& spec() const { return components_.front().spec(); }
  std::size_t dimension() const { return components_.size(); }
  const std::vector<MultiPoly>& components() const { return components_; }
  // Max component degree; nullopt when every component is zero.
  Degree degree() const;
  Point evaluate(const FieldElement& t) const;
  // C(T) - C(t), component-wise.
  Curve shifted_to_vanish_at(const FieldElement& t) const;

 private:
  std::vector<MultiPoly> components_;
};

// Serialization: terms `c:e1,...,en` joined by `;`, graded-lex sorted,
// where c is the coefficient's field index. The zero polynomial is "0".
std::string to_string(const MultiPoly& p);
MultiPoly parse_poly(const FieldSpec& spec, std::size_t num_vars, std::string_view text);
// Infers the variable count from the first term; "0" is rejected.
MultiPoly parse_poly(const FieldSpec& spec, std::string_view text);

Point parse_point(const FieldSpec& spec, std::string_view text);  // "a,b,..."
std::string to_string(const Point& a);

FieldElement poly_eval(const MultiPoly& p, const Point& a);

// prod_k C(i_k, j_k) mapped into F_q (zero when some j_k > i_k).
FieldElement vector_binomial(const FieldSpec& spec, const Exponents& i, const Exponents& j);

MultiPoly hasse_derivative(const MultiPoly& p, const Exponents& i);
// P^(i)(a) without materializing P^(i).
FieldElement hasse_eval(const MultiPoly& p, const Exponents& i, const Point& a);

Multiplicity multiplicity(const MultiPoly& p, const Point& a);
// Minimum over the components of a tuple.
Multiplicity multiplicity(const std::vector<MultiPoly>& tuple, const Point& a);

// Terms of weight exactly deg(P). Throws kZeroPolynomial for P = 0.
MultiPoly homogeneous_part(const MultiPoly& p);

// P(Q_1(Y), ..., Q_n(Y)); every Q_j shares one variable count.
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& q);
MultiPoly compose_curve(const MultiPoly& p, const Curve& c);
MultiPoly restrict_to_line(const MultiPoly& p, const Point& a, const Point& b);

// Sum over a in S^n of mult(P, a). Throws kZeroPolynomial, kEmptySet.
// The enumeration may be split over `jobs` threads; the result does not
// depend on the split.
std::uint64_t multiplicity_mass(const MultiPoly& p, const std::vector<FieldElement>& s,
                                std::size_t jobs = 1);

// Every point of F_q^n, first coordinate fastest.
std::vector<Point> all_points(const FieldSpec& spec, std::size_t n);
// Index of a point in all_points order.
std::uint64_t point_index(const Point& a);
Point point_from_index(const FieldSpec& spec, std::size_t n, std::uint64_t index);

// A random polynomial with up to `num_terms` terms of total degree at most
// max_degree (possibly zero when num_terms is 0).
MultiPoly random_poly(const FieldSpec& spec, std::size_t n, std::uint32_t max_degree,
                      std::size_t num_terms, Rng& rng);
Point random_point(const FieldSpec& spec, std::size_t n, Rng& rng);

}  // namespace mom

#endif  // MOM_POLY_H_
