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

#ifndef MOM_FIELD_H_
#define MOM_FIELD_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mom/error.h"

namespace mom {

class Rng;

// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

// Table of monic irreducible moduli, one per (p, e) with e >= 2. The text
// form has one entry per line, `p e c_0 c_1 ... c_e` with coefficients
// listed low to high; `#` starts a comment.
class ModulusTable {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  // The table shipped in data/moduli.txt, compiled into the library.
  static const ModulusTable& canonical();
  static ModulusTable parse(std::string_view text);
  static ModulusTable load(const std::filesystem::path& path);

  const std::vector<std::uint32_t>* find(std::uint32_t p, std::uint32_t e) const;
  const std::map<Key, std::vector<std::uint32_t>>& entries() const { return entries_; }

 private:
  std::map<Key, std::vector<std::uint32_t>> entries_;
};

namespace detail {

// Immutable arithmetic tables; owned by a process-wide registry and never
// freed, so raw pointers to it stay valid.
struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> radix;  // radix[j] = p^j
  bool primitive = false;
  // Extension fields with a primitive element x: exp_[i] = x^i for
  // i < 2(q-1), log_[a] = discrete log of a != 0.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) {
      std::uint32_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    for (std::uint32_t j = 0; j < e; ++j) {
      std::uint32_t d = a % p + b % p;
      if (d >= p) d -= p;
      out += d * radix[j];
      a /= p;
      b /= p;
    }
    return out;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (e == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint32_t out = 0;
    for (std::uint32_t j = 0; j < e; ++j) {
      std::uint32_t d = a % p;
      out += (d == 0 ? 0 : p - d) * radix[j];
      a /= p;
    }
    return out;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return a >= b ? a - b : a + p - b;
    if (p == 2) return a ^ b;
    return add(a, neg(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    if (primitive) return exp_table[log_table[a] + log_table[b]];
    return slow_mul(a, b);
  }
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;
  std::uint32_t inv(std::uint32_t a) const;
};

}  // namespace detail

class FieldElement;

// Handle to an immutable finite field F_q, q = p^e. Handles are cheap to
// copy; two handles compare equal iff they refer to the same (p, e,
// modulus). Elements are identified with indices in [0, q): the residue
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} has index sum c_j p^j.
class FieldSpec {
 public:
  FieldSpec() = default;

  std::uint32_t p() const;
  std::uint32_t e() const;
  std::uint32_t q() const;
  // Monic modulus, low to high, length e + 1. Just {0, 1} when e == 1.
  const std::vector<std::uint32_t>& modulus() const;
  // False only for a modulus that is not primitive-irreducible (a
  // corrupted table); arithmetic is then a ring, not a field.
  bool has_primitive_element() const;
  bool valid() const { return data_ != nullptr; }

  // "p" for prime fields, "p^e" otherwise.
  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint32_t index) const;
  // Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  // Raw arithmetic on indices; callers guarantee indices are in range.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return data_->add(a, b); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return data_->sub(a, b); }
  std::uint32_t neg(std::uint32_t a) const { return data_->neg(a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return data_->mul(a, b); }
  std::uint32_t inv(std::uint32_t a) const { return data_->inv(a); }  // kDivisionByZero on 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const { return data_->pow(a, n); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.data_ == b.data_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.data_ != b.data_; }

 private:
  friend class FieldElement;
  friend FieldSpec field_make(std::uint32_t, std::uint32_t, const ModulusTable&);
  explicit FieldSpec(const detail::FieldData* data) : data_(data) {}

  const detail::FieldData* data_ = nullptr;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpec spec, std::uint32_t index);

  FieldSpec spec() const { return FieldSpec(data_); }
  std::uint32_t index() const { return value_; }
  std::vector<std::uint32_t> coefficients() const;
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t n) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.data_ == b.data_ && a.value_ == b.value_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  // Enumeration order; only meaningful within one field.
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.value_ < b.value_; }

 private:
  friend class FieldSpec;
  FieldElement(const detail::FieldData* data, std::uint32_t value) : data_(data), value_(value) {}
  void check_same(const FieldElement& o) const;

  const detail::FieldData* data_ = nullptr;
  std::uint32_t value_ = 0;
};

bool is_prime(std::uint64_t n);

// Throws kNonPrimeCharacteristic, kUnsupportedSize or kMissingModulusEntry.
FieldSpec field_make(std::uint32_t p, std::uint32_t e);
FieldSpec field_make(std::uint32_t p, std::uint32_t e, const ModulusTable& table);

// Parses "p", "p^e", or a bare prime power such as "64".
FieldSpec parse_field(std::string_view text);
FieldSpec parse_field(std::string_view text, const ModulusTable& table);

// All q elements in index order (zero first).
std::vector<FieldElement> field_enumerate(const FieldSpec& spec);

FieldElement field_sample(const FieldSpec& spec, Rng& rng);

}  // namespace mom

#endif  // MOM_FIELD_H_
