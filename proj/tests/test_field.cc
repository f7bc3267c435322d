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

#include <vector>

#include "mom/error.h"
#include "mom/field.h"
#include "mom/rng.h"

namespace mom {
namespace {

using Coeffs = std::vector<std::uint64_t>;

// Remainder of a modulo the monic polynomial m over F_p, low to high.
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
  }
  a.resize(dm, 0);
  for (auto& x : a) x %= p;
  return a;
}

bool divides(const Coeffs& d, const Coeffs& a, std::uint64_t p) {
  for (auto x : poly_mod(a, d, p)) {
    if (x != 0) return false;
  }
  return true;
}

Coeffs digits(std::uint64_t v, std::uint64_t p, std::size_t len) {
  Coeffs out(len);
  for (auto& x : out) {
    x = v % p;
    v /= p;
  }
  return out;
}

std::uint64_t undigits(const Coeffs& c, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

Coeffs schoolbook(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(prod, m, p);
}

TEST(FieldMake, Examples) {
  EXPECT_EQ(field_make(2, 1).q(), 2u);
  const FieldSpec f64 = field_make(2, 6);
  EXPECT_EQ(f64.q(), 64u);
  EXPECT_EQ(f64.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1}));
  try {
    field_make(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPrimeCharacteristic);
  }
}

TEST(FieldMake, SizeAndTableErrors) {
  try {
    field_make(2, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedSize);
  }
  const ModulusTable empty = ModulusTable::parse("# nothing\n");
  try {
    field_make(3, 2, empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingModulusEntry);
  }
  EXPECT_EQ(field_make(5, 1, empty).q(), 5u);
}

TEST(FieldMake, ParseField) {
  EXPECT_EQ(parse_field("64"), field_make(2, 6));
  EXPECT_EQ(parse_field("2^6"), field_make(2, 6));
  EXPECT_EQ(parse_field("7"), field_make(7, 1));
  EXPECT_THROW(parse_field("6"), Error);
  EXPECT_THROW(parse_field("x"), Error);
}

TEST(FieldOps, Examples) {
  const FieldSpec f5 = field_make(5, 1);
  EXPECT_EQ(f5.element(2).inv(), f5.element(3));
  const FieldSpec f4 = field_make(2, 2);
  const FieldElement x = f4.element(2);
  EXPECT_EQ(x * x, f4.element(3));
  const FieldSpec f7 = field_make(7, 1);
  EXPECT_EQ(f7.element(3).pow(6), f7.one());
  EXPECT_EQ(f7.from_int(-1), f7.element(6));
}

TEST(FieldOps, MixedFieldsAndZeroDivision) {
  const FieldSpec a = field_make(5, 1), b = field_make(7, 1);
  try {
    (void)(a.one() + b.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpecMismatch);
  }
  try {
    (void)a.zero().inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(ModulusTable, EveryEntryIsIrreducibleByTrialDivision) {
  for (const auto& [key, modulus] : ModulusTable::canonical().entries()) {
    const auto [p, e] = key;
    const Coeffs m(modulus.begin(), modulus.end());
    ASSERT_EQ(m.size(), e + 1);
    ASSERT_EQ(m.back(), 1u);
    for (std::uint32_t deg = 1; deg <= e / 2; ++deg) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t v = 0; v < count; ++v) {
        Coeffs d = digits(v, p, deg);
        d.push_back(1);
        ASSERT_FALSE(divides(d, m, p)) << "p=" << p << " e=" << e << " factor of degree " << deg;
      }
    }
  }
}

TEST(FieldOps, MultiplicationMatchesSchoolbook) {
  for (const auto& [key, modulus] : ModulusTable::canonical().entries()) {
    const auto [p, e] = key;
    const FieldSpec f = field_make(p, e);
    const Coeffs m(modulus.begin(), modulus.end());
    if (f.q() <= 256) {
      for (std::uint32_t a = 0; a < f.q(); ++a) {
        for (std::uint32_t b = 0; b < f.q(); ++b) {
          const auto c = schoolbook(digits(a, p, e), digits(b, p, e), m, p);
          ASSERT_EQ(f.mul(a, b), undigits(c, p)) << f.to_string();
        }
      }
    } else {
      Rng rng(11, f.q());
      for (int t = 0; t < 200; ++t) {
        const auto a = static_cast<std::uint32_t>(rng.uniform(f.q()));
        const auto b = static_cast<std::uint32_t>(rng.uniform(f.q()));
        const auto c = schoolbook(digits(a, p, e), digits(b, p, e), m, p);
        ASSERT_EQ(f.mul(a, b), undigits(c, p)) << f.to_string();
        Coeffs sum(e);
        const auto da = digits(a, p, e), db = digits(b, p, e);
        for (std::uint32_t j = 0; j < e; ++j) sum[j] = (da[j] + db[j]) % p;
        ASSERT_EQ(f.add(a, b), undigits(sum, p));
      }
    }
  }
}

TEST(FieldOps, InversesOnLargeFields) {
  for (const auto& [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 20}, {3, 12}, {1021, 2}, {1048573, 1}}) {
    const FieldSpec f = field_make(p, e);
    Rng rng(3, p);
    for (int t = 0; t < 500; ++t) {
      const FieldElement a = field_sample(f, rng), b = field_sample(f, rng), c = field_sample(f, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) EXPECT_EQ(a * a.inv(), f.one());
      if (!a.is_zero()) EXPECT_EQ(a.pow(f.q() - 1), f.one());
    }
  }
}

TEST(FieldEnumerate, Examples) {
  auto idx = [](const FieldSpec& f) {
    std::vector<std::uint32_t> out;
    for (const auto& x : field_enumerate(f)) out.push_back(x.index());
    return out;
  };
  EXPECT_EQ(idx(field_make(2, 1)), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(idx(field_make(3, 1)), (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(idx(field_make(2, 2)), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_TRUE(field_enumerate(field_make(2, 2)).front().is_zero());
}

TEST(FieldSample, FrequencyInF2) {
  const FieldSpec f = field_make(2, 1);
  Rng rng(20260101);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += field_sample(f, rng).index();
  EXPECT_NEAR(ones / 10000.0, 0.5, 0.02);
}

TEST(FieldSample, Deterministic) {
  const FieldSpec f = field_make(2, 6);
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(field_sample(f, a), field_sample(f, b));
  Rng c(99, 1);
  bool differs = false;
  Rng d(99);
  for (int i = 0; i < 100; ++i) differs = differs || field_sample(f, c) != field_sample(f, d);
  EXPECT_TRUE(differs);
}

TEST(FieldSpec, CorruptedModulusIsNotAField) {
  const FieldSpec f = field_make(2, 2, ModulusTable::parse("2 2 1 0 1\n"));
  EXPECT_FALSE(f.has_primitive_element());
  EXPECT_NE(f.element(3) * f.element(3).inv(), f.one());
}

}  // namespace
}  // namespace mom
