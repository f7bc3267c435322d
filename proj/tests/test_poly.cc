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

#include <gtest/gtest.h>

#include "mom/error.h"
#include "mom/poly.h"
#include "mom/rng.h"
#include "oracle.h"

namespace mom {
namespace {

FieldSpec F(std::uint32_t q) { return parse_field(std::to_string(q)); }

MultiPoly P(std::uint32_t q, std::size_t n, const std::string& s) { return parse_poly(F(q), n, s); }

Point A(std::uint32_t q, const std::string& s) { return parse_point(F(q), s); }

TEST(GradedLex, Order) {
  const auto w1 = exponents_of_weight(2, 1);
  ASSERT_EQ(w1.size(), 2u);
  EXPECT_EQ(w1[0], (Exponents{1, 0}));
  EXPECT_EQ(w1[1], (Exponents{0, 1}));
  const auto w2 = exponents_of_weight(3, 2);
  EXPECT_EQ(w2.size(), 6u);
  EXPECT_EQ(w2.front(), (Exponents{2, 0, 0}));
  EXPECT_EQ(w2.back(), (Exponents{0, 0, 2}));
  EXPECT_TRUE(GradedLexLess{}(Exponents{0, 2}, Exponents{3, 0}));
}

TEST(Serialization, RoundTrip) {
  const MultiPoly p = P(5, 2, "1:2,0;3:0,1;4:0,0");
  EXPECT_EQ(to_string(p), "4:0,0;3:0,1;1:2,0");
  EXPECT_EQ(parse_poly(F(5), to_string(p)), p);
  EXPECT_EQ(to_string(MultiPoly(F(5), 2)), "0");
  EXPECT_EQ(P(3, 2, "2:1,0;2:1,0"), P(3, 2, "1:1,0"));
  EXPECT_THROW(P(3, 2, "3:1,0"), Error);
  EXPECT_THROW(P(3, 2, "1:1"), Error);
  EXPECT_THROW(parse_poly(F(3), "0"), Error);
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(P(3, 2, "1:1,1"), A(3, "2,2")).index(), 1u);
  EXPECT_EQ(poly_eval(MultiPoly(F(3), 2), A(3, "2,2")).index(), 0u);
  EXPECT_EQ(poly_eval(P(2, 2, "1:2,0;1:0,1"), A(2, "1,1")).index(), 0u);
}

TEST(VectorBinomial, Examples) {
  EXPECT_EQ(vector_binomial(F(5), {2, 1}, {1, 1}).index(), 2u);
  EXPECT_EQ(vector_binomial(F(5), {2, 0}, {0, 1}).index(), 0u);
  EXPECT_EQ(vector_binomial(F(2), {3, 3}, {1, 2}).index(), 1u);
}

TEST(HasseDerivative, Examples) {
  EXPECT_TRUE(hasse_derivative(P(2, 1, "1:2"), {1}).is_zero());
  EXPECT_EQ(hasse_derivative(P(2, 1, "1:2"), {2}), P(2, 1, "1:0"));
  EXPECT_EQ(hasse_derivative(P(5, 2, "1:2,1"), {1, 1}), P(5, 2, "2:1,0"));
}

TEST(HasseDerivative, MatchesExpansionOracle) {
  Rng rng(5, 1);
  for (int t = 0; t < 300; ++t) {
    const FieldSpec f = F(std::vector<std::uint32_t>{2, 3, 4, 5, 7}[rng.uniform(5)]);
    const std::size_t n = 1 + rng.uniform(3);
    const MultiPoly p = random_poly(f, n, 6, 1 + rng.uniform(6), rng);
    Exponents i(n);
    for (auto& x : i) x = static_cast<std::uint32_t>(rng.uniform(4));
    ASSERT_EQ(hasse_derivative(p, i), oracle::hasse(p, i)) << to_string(p);
    const Point a = random_point(f, n, rng);
    ASSERT_EQ(hasse_eval(p, i, a), poly_eval(oracle::hasse(p, i), a));
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(P(5, 2, "1:2,3"), A(5, "0,0")), Multiplicity(5));
  EXPECT_EQ(multiplicity(P(3, 1, "1:1;1:0"), A(3, "2")), Multiplicity(1));
  const MultiPoly x1 = MultiPoly::variable(F(5), 1, 0);
  const MultiPoly cube = (x1 - MultiPoly::constant(F(5), 1, F(5).one())).pow(3);
  EXPECT_EQ(multiplicity(cube, A(5, "1")), Multiplicity(3));
  EXPECT_TRUE(multiplicity(MultiPoly(F(5), 2), A(5, "1,1")).is_infinite());
  EXPECT_EQ(multiplicity(P(5, 2, "1:0,0"), A(5, "1,1")), Multiplicity(0));
}

TEST(Multiplicity, MatchesRecenterOracle) {
  Rng rng(5, 2);
  for (int t = 0; t < 300; ++t) {
    const FieldSpec f = F(std::vector<std::uint32_t>{2, 3, 5}[rng.uniform(3)]);
    const std::size_t n = 1 + rng.uniform(3);
    const Point a = random_point(f, n, rng);
    MultiPoly p = random_poly(f, n, 5, 1 + rng.uniform(5), rng);
    for (std::uint32_t s = static_cast<std::uint32_t>(rng.uniform(4)); s > 0; --s) {
      const auto j = static_cast<std::size_t>(rng.uniform(n));
      p *= MultiPoly::variable(f, n, j) - MultiPoly::constant(f, n, a[j]);
    }
    const Multiplicity m = multiplicity(p, a);
    const std::uint32_t expected = oracle::multiplicity(p, a);
    if (expected == UINT32_MAX) {
      EXPECT_TRUE(m.is_infinite());
    } else {
      EXPECT_EQ(m, Multiplicity(expected)) << to_string(p) << " at " << to_string(a);
    }
  }
}

TEST(Multiplicity, Tuple) {
  const std::vector<MultiPoly> t{P(3, 2, "1:2,0"), P(3, 2, "1:0,1")};
  EXPECT_EQ(multiplicity(t, A(3, "0,0")), Multiplicity(1));
  EXPECT_TRUE(multiplicity(std::vector<MultiPoly>{MultiPoly(F(3), 2)}, A(3, "0,0")).is_infinite());
}

TEST(HomogeneousPart, Examples) {
  EXPECT_EQ(homogeneous_part(P(3, 2, "1:2,0;1:0,1")), P(3, 2, "1:2,0"));
  const MultiPoly h = P(3, 2, "1:2,0;2:1,1");
  EXPECT_EQ(homogeneous_part(h), h);
  EXPECT_EQ(homogeneous_part(P(3, 2, "1:1,1;1:1,0;1:0,0")), P(3, 2, "1:1,1"));
  try {
    homogeneous_part(MultiPoly(F(3), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPolynomial);
  }
}

TEST(Compose, Examples) {
  const FieldSpec f3 = F(3);
  const MultiPoly t = MultiPoly::variable(f3, 1, 0);
  EXPECT_EQ(compose_curve(P(3, 2, "1:1,1"), Curve({t, t})), P(3, 1, "1:2"));
  const MultiPoly one = MultiPoly::constant(f3, 1, f3.one());
  const Curve c({one + t, f3.element(2) * t});
  EXPECT_EQ(compose_curve(P(3, 2, "1:1,0;1:0,1"), c), P(3, 1, "1:0"));
  EXPECT_EQ(compose_curve(P(3, 2, "2:0,0"), c), P(3, 1, "2:0"));
  EXPECT_EQ(c.degree(), Degree(1));
  EXPECT_EQ(to_string(c.evaluate(f3.element(1))), "2,2");
}

TEST(Compose, DimensionMismatch) {
  const FieldSpec f3 = F(3);
  const MultiPoly t = MultiPoly::variable(f3, 1, 0);
  try {
    compose_curve(P(3, 2, "1:1,1"), Curve({t}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(RestrictToLine, Examples) {
  EXPECT_EQ(restrict_to_line(P(3, 2, "1:1,1"), A(3, "0,0"), A(3, "1,1")), P(3, 1, "1:2"));
  EXPECT_EQ(restrict_to_line(P(3, 2, "1:1,1;1:1,0"), A(3, "2,1"), A(3, "0,0")), P(3, 1, "1:0"));
  EXPECT_EQ(restrict_to_line(P(5, 2, "1:2,0;1:0,1"), A(5, "1,0"), A(5, "2,1")), P(5, 1, "4:2;1:0"));
}

TEST(MultiplicityMass, Examples) {
  const FieldSpec f3 = F(3);
  EXPECT_EQ(multiplicity_mass(P(3, 2, "1:1,1"), field_enumerate(f3)), 6u);
  EXPECT_EQ(multiplicity_mass(P(3, 2, "1:0,0"), field_enumerate(f3)), 0u);
  EXPECT_EQ(multiplicity_mass(P(2, 2, "1:1,0"), field_enumerate(F(2))), 2u);
}

TEST(MultiplicityMass, Errors) {
  const FieldSpec f3 = F(3);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternalNoSolution;
  };
  EXPECT_EQ(code([&] { multiplicity_mass(MultiPoly(f3, 2), field_enumerate(f3)); }), ErrorCode::kZeroPolynomial);
  EXPECT_EQ(code([&] { multiplicity_mass(P(3, 2, "1:1,1"), {}); }), ErrorCode::kEmptySet);
}

TEST(MultiplicityMass, MatchesOracleAndIsJobIndependent) {
  Rng rng(5, 3);
  for (int t = 0; t < 40; ++t) {
    const FieldSpec f = F(std::vector<std::uint32_t>{2, 3, 5}[rng.uniform(3)]);
    const std::size_t n = 1 + rng.uniform(2);
    const MultiPoly p = random_poly(f, n, 6, 1 + rng.uniform(6), rng);
    if (p.is_zero()) continue;
    const auto s = field_enumerate(f);
    const std::uint64_t m1 = multiplicity_mass(p, s, 1);
    EXPECT_EQ(m1, oracle::mass(p));
    EXPECT_EQ(m1, multiplicity_mass(p, s, 3));
  }
}

TEST(Points, IndexRoundTrip) {
  const FieldSpec f = F(4);
  const auto pts = all_points(f, 3);
  ASSERT_EQ(pts.size(), 64u);
  EXPECT_EQ(to_string(pts[1]), "1,0,0");
  for (std::uint64_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(point_index(pts[i]), i);
    EXPECT_EQ(point_from_index(f, 3, i), pts[i]);
  }
}

}  // namespace
}  // namespace mom
