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
#include "mom/kakeya.h"
#include "oracle.h"

namespace mom {
namespace {

std::vector<Point> pts(const FieldSpec& f, const std::string& s) {
  std::vector<Point> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(';', start);
    out.push_back(parse_point(f, s.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalNoSolution;
}

TEST(IsKakeya, Examples) {
  const FieldSpec f2 = field_make(2, 1), f3 = field_make(3, 1);
  EXPECT_TRUE(is_kakeya(f2, 2, all_points(f2, 2)).is_kakeya);
  const auto single = is_kakeya(f3, 2, pts(f3, "1,1"));
  EXPECT_FALSE(single.is_kakeya);
  EXPECT_TRUE(single.violating_direction.has_value());
  EXPECT_FALSE(is_kakeya(f3, 2, {}).is_kakeya);
}

TEST(IsKakeya, UnionOfFourLines) {
  const FieldSpec f3 = field_make(3, 1);
  // y = 0, x = 0, y = x + 1, y = 2x.
  const auto k = pts(f3, "0,0;1,0;2,0;0,1;0,2;1,2;2,1");
  const auto c = is_kakeya(f3, 2, k);
  ASSERT_TRUE(c.is_kakeya);
  EXPECT_EQ(c.witnesses.size(), 4u);
  EXPECT_TRUE(oracle::kakeya(f3, 2, k));
  EXPECT_TRUE(witnesses_contained(KakeyaInstance{f3, 2, k, c.witnesses}));
}

TEST(IsKakeya, AgreesWithOracleOnAllSubsetsOfF2Squared) {
  const FieldSpec f2 = field_make(2, 1);
  const auto space = all_points(f2, 2);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<Point> k;
    for (std::size_t i = 0; i < 4; ++i) {
      if (mask >> i & 1) k.push_back(space[i]);
    }
    EXPECT_EQ(is_kakeya(f2, 2, k).is_kakeya, oracle::kakeya(f2, 2, k)) << mask;
  }
}

TEST(Bounds, Examples) {
  auto b = kakeya_lower_bounds(2, 2);
  EXPECT_EQ(b.crude, Rational(1));
  EXPECT_EQ(b.main, Rational(16, 9));
  b = kakeya_lower_bounds(3, 2);
  EXPECT_EQ(b.crude, Rational(9, 4));
  EXPECT_EQ(b.main, Rational(81, 25));
  b = kakeya_lower_bounds(7, 1);
  EXPECT_EQ(b.crude, Rational(7, 2));
  EXPECT_EQ(b.main, Rational(49, 13));
}

std::size_t oracle_min_size(const FieldSpec& f, std::size_t n) {
  const auto space = all_points(f, n);
  std::size_t best = space.size();
  for (std::uint32_t mask = 0; mask < (1u << space.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) >= best) continue;
    std::vector<Point> k;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (mask >> i & 1) k.push_back(space[i]);
    }
    if (oracle::kakeya(f, n, k)) best = k.size();
  }
  return best;
}

TEST(ExhaustiveMin, Examples) {
  const FieldSpec f2 = field_make(2, 1), f3 = field_make(3, 1);
  const auto r1 = exhaustive_min_kakeya(f2, 1);
  ASSERT_TRUE(r1.found);
  EXPECT_EQ(r1.set, all_points(f2, 1));

  const auto r22 = exhaustive_min_kakeya(f2, 2);
  ASSERT_TRUE(r22.found);
  EXPECT_GE(r22.set.size(), 2u);
  EXPECT_EQ(r22.set.size(), oracle_min_size(f2, 2));

  const auto r32 = exhaustive_min_kakeya(f3, 2);
  ASSERT_TRUE(r32.found);
  EXPECT_GE(r32.set.size(), 4u);
  EXPECT_EQ(r32.set.size(), oracle_min_size(f3, 2));
  EXPECT_TRUE(oracle::kakeya(f3, 2, r32.set));
}

TEST(ExhaustiveMin, CapAndLimits) {
  const FieldSpec f3 = field_make(3, 1), f5 = field_make(5, 1);
  EXPECT_FALSE(exhaustive_min_kakeya(f3, 2, 5).found);
  EXPECT_EQ(code_of([&] { exhaustive_min_kakeya(f5, 2); }), ErrorCode::kSearchSpaceTooLarge);
}

TEST(HomogeneousVanishing, Examples) {
  const FieldSpec f2 = field_make(2, 1);
  KakeyaInstance line{f2, 1, all_points(f2, 1), {}};
  EXPECT_EQ(code_of([&] { homogeneous_vanishing_check(line, 2, 3, 3); }), ErrorCode::kUnsatisfiedCountHypothesis);

  KakeyaInstance point{f2, 2, pts(f2, "1,0"), {}};
  const auto rep = homogeneous_vanishing_check(point, 2, 3, 3);
  EXPECT_EQ(rep.entries.size(), 4u);
  EXPECT_FALSE(rep.interpolant.is_zero());
  EXPECT_TRUE(rep.claim_holds);

  EXPECT_EQ(code_of([&] { homogeneous_vanishing_check(point, 3); }), ErrorCode::kInvalidParameters);
  EXPECT_EQ(code_of([&] { homogeneous_vanishing_check(point, 2, 4, 3); }), ErrorCode::kInvalidParameters);
}

TEST(HomogeneousVanishing, LineInF3Squared) {
  const FieldSpec f3 = field_make(3, 1);
  KakeyaInstance k{f3, 2, pts(f3, "0,1;1,2;2,0"), {}};
  const auto rep = homogeneous_vanishing_check(k, 6);
  EXPECT_EQ(rep.m, 10u);
  EXPECT_EQ(rep.d, 17u);
  EXPECT_TRUE(rep.claim_holds);
  std::size_t covered = 0;
  for (const auto& e : rep.entries) {
    covered += e.covered;
    if (e.covered) EXPECT_GE(oracle::multiplicity(rep.top_part, e.point), 6u);
  }
  // The origin and the multiples of the line's direction (1,1).
  EXPECT_EQ(covered, 3u);
}

TEST(StatisticalKakeya, BoundExamples) {
  EXPECT_EQ(statistical_kakeya_bound(4, 1, Rational(1, 2), Rational(1, 2), 1), Rational(4, 3));
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t n : {1u, 2u, 3u}) {
      EXPECT_EQ(statistical_kakeya_bound(q, n, 1, 1, 1), kakeya_lower_bounds(q, n).main);
    }
  }
}

TEST(StatisticalKakeya, FullSpaceReduction) {
  const FieldSpec f3 = field_make(3, 1);
  const auto inst = stat_instance_from_lines(f3, 2, all_points(f3, 2));
  EXPECT_EQ(inst.lambda, Rational(1));
  const auto rep = statistical_kakeya_check(inst);
  EXPECT_TRUE(rep.hypothesis_ok);
  EXPECT_TRUE(rep.bound_holds);
  EXPECT_EQ(rep.bound, Rational(81, 25));
}

TEST(StatisticalKakeya, HypothesisViolation) {
  const FieldSpec f3 = field_make(3, 1);
  auto inst = stat_instance_from_lines(f3, 2, all_points(f3, 2));
  inst.k.pop_back();
  EXPECT_EQ(code_of([&] { statistical_kakeya_check(inst); }), ErrorCode::kHypothesisViolation);
  auto bad = stat_instance_from_lines(f3, 2, all_points(f3, 2));
  bad.eta = Rational(1, 3);
  EXPECT_EQ(code_of([&] { statistical_kakeya_check(bad); }), ErrorCode::kParameterViolation);
}

}  // namespace
}  // namespace mom
