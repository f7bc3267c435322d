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

#include <set>

#include "mom/error.h"
#include "mom/interpolate.h"
#include "mom/rng.h"
#include "oracle.h"

namespace mom {
namespace {

TEST(MonomialCounts, TotalDegree) {
  EXPECT_EQ(count_total_degree_monomials(2, 1), 3);
  EXPECT_EQ(count_total_degree_monomials(1, 5), 6);
  EXPECT_EQ(count_total_degree_monomials(3, 4), 35);
}

TEST(MonomialCounts, Weighted) {
  EXPECT_EQ(count_weighted_monomials(1, 2, Rational(1)), 6u);
  EXPECT_EQ(count_weighted_monomials(3, 7, Rational(0)), 8u);
  EXPECT_EQ(count_weighted_monomials(2, 4, Rational(1)), 9u);
  EXPECT_THROW(count_weighted_monomials(0, 4, Rational(1)), Error);
  EXPECT_THROW(count_weighted_monomials(4, 4, Rational(1)), Error);
  EXPECT_THROW(count_weighted_monomials(1, 4, Rational(3, 2)), Error);
}

TEST(MonomialCounts, WeightedMatchesEnumeration) {
  for (std::uint32_t k = 1; k < 12; ++k) {
    for (std::uint32_t d = k + 1; d <= 12; ++d) {
      for (std::uint32_t tenths = 0; tenths <= 10; ++tenths) {
        const Rational theta(tenths, 10);
        std::uint64_t count = 0;
        for (std::uint32_t j = 0; j <= d; ++j) {
          for (std::uint32_t i = 0; i <= d; ++i) {
            if (i + k * j <= d && Rational(j * k) <= theta * d) ++count;
          }
        }
        EXPECT_EQ(count_weighted_monomials(k, d, theta), count) << k << " " << d << " " << tenths;
      }
    }
  }
}

TEST(VanishingConstraints, Examples) {
  const FieldSpec f3 = field_make(3, 1);
  InterpolationProblem one{f3, 1, {{f3.one()}}, 1, TotalDegreeBasis{0}};
  const Matrix a = vanishing_constraints(one);
  EXPECT_EQ(a.rows(), 1u);
  EXPECT_EQ(a.cols(), 1u);
  EXPECT_EQ(a.at(0, 0), 1u);
  EXPECT_FALSE(nullspace_vector(a));

  InterpolationProblem origin{f3, 2, {{f3.zero(), f3.zero()}}, 1, TotalDegreeBasis{1}};
  const Matrix b = vanishing_constraints(origin);
  EXPECT_EQ(b.rows(), 1u);
  EXPECT_EQ(b.cols(), 3u);
  EXPECT_EQ(std::vector<std::uint32_t>(b.row(0).begin(), b.row(0).end()), (std::vector<std::uint32_t>{1, 0, 0}));
  EXPECT_EQ(nullspace_basis(b).size(), 2u);

  InterpolationProblem m2{f3, 2, {{f3.one(), f3.element(2)}}, 2, TotalDegreeBasis{2}};
  EXPECT_EQ(vanishing_constraints(m2).rows(), 3u);
  EXPECT_EQ(constraint_count(m2), 3);
}

TEST(VanishingInterpolation, Examples) {
  const FieldSpec f3 = field_make(3, 1);
  InterpolationProblem origin{f3, 2, {{f3.zero(), f3.zero()}}, 1, TotalDegreeBasis{1}};
  EXPECT_EQ(to_string(vanishing_interpolation(origin)), "1:1,0");

  InterpolationProblem m2{f3, 2, {{f3.one(), f3.element(2)}}, 2, TotalDegreeBasis{2}};
  const MultiPoly p = vanishing_interpolation(m2);
  EXPECT_FALSE(p.is_zero());
  EXPECT_LE(*p.degree(), 2u);
  EXPECT_GE(oracle::multiplicity(p, m2.points[0]), 2u);

  const FieldSpec f2 = field_make(2, 1);
  InterpolationProblem full{f2, 2, all_points(f2, 2), 1, TotalDegreeBasis{1}};
  try {
    vanishing_interpolation(full);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsatisfiedCountHypothesis);
  }
}

TEST(VanishingInterpolation, DuplicatePointsRejected) {
  const FieldSpec f3 = field_make(3, 1);
  InterpolationProblem dup{f3, 1, {{f3.one()}, {f3.one()}}, 1, TotalDegreeBasis{3}};
  EXPECT_THROW(vanishing_interpolation(dup), Error);
}

TEST(VanishingInterpolation, RandomProblemsVerifiedByOracle) {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const FieldSpec f = field_make(std::vector<std::uint32_t>{2, 3, 5}[rng.uniform(3)], 1);
    const std::size_t n = 1 + rng.uniform(2);
    const auto m = static_cast<std::uint32_t>(1 + rng.uniform(3));
    const auto space = all_points(f, n);
    std::set<std::uint64_t> picked;
    const std::size_t size = 1 + rng.uniform(space.size());
    while (picked.size() < size) picked.insert(rng.uniform(space.size()));
    InterpolationProblem pr{f, n, {}, m, TotalDegreeBasis{0}};
    for (auto i : picked) pr.points.push_back(space[i]);
    std::uint32_t d = 0;
    while (count_total_degree_monomials(static_cast<std::uint32_t>(n), d) <= constraint_count(pr)) ++d;
    pr.basis = TotalDegreeBasis{d};
    const MultiPoly p = vanishing_interpolation(pr);
    ASSERT_FALSE(p.is_zero());
    EXPECT_LE(*p.degree(), d);
    for (const auto& a : pr.points) EXPECT_GE(oracle::multiplicity(p, a), m);
  }
}

TEST(VanishingInterpolation, WeightedBasis) {
  const FieldSpec f5 = field_make(5, 1);
  InterpolationProblem pr{f5, 2, {}, 2, WeightedDegreeBasis{8, 1, 5}};
  for (std::uint32_t i = 0; i < 5; ++i) pr.points.push_back({f5.element(i), f5.element((i * i) % 5)});
  const MultiPoly q = vanishing_interpolation(pr);
  for (const auto& [e, c] : q.terms()) {
    EXPECT_LE(e[0] + e[1], 8u);
    EXPECT_LE(e[1], 5u);
  }
  for (const auto& a : pr.points) EXPECT_GE(oracle::multiplicity(q, a), 2u);
}

}  // namespace
}  // namespace mom
