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

#include "mom/field.h"

#include <charconv>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "mom/rng.h"

namespace mom {

// Generated from data/moduli.txt at configure time.
extern const char kCanonicalModuliText[];

namespace detail {

std::uint32_t FieldData::slow_mul(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint64_t> da(e), db(e), prod(2 * e - 1, 0);
  for (std::uint32_t j = 0; j < e; ++j) {
    da[j] = a % p;
    db[j] = b % p;
    a /= p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::uint32_t k = 2 * e - 2; k >= e; --k) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j <= e; ++j) {
      prod[k - e + j] = (prod[k - e + j] + (p - c) * modulus[j]) % p;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t j = 0; j < e; ++j) out += static_cast<std::uint32_t>(prod[j]) * radix[j];
  return out;
}

std::uint32_t FieldData::pow(std::uint32_t a, std::uint64_t n) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint32_t FieldData::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (e == 1) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      std::tie(t, new_t) = std::make_tuple(new_t, t - quot * new_t);
      std::tie(r, new_r) = std::make_tuple(new_r, r - quot * new_r);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
  }
  if (primitive) return exp_table[(q - 1) - log_table[a]];
  return pow(a, q - 2);
}

}  // namespace detail

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool has_full_order(const detail::FieldData& d, std::uint32_t g,
                    const std::vector<std::uint64_t>& factors) {
  if (d.pow(g, d.q - 1) != 1) return false;
  for (std::uint64_t r : factors) {
    if (d.pow(g, (d.q - 1) / r) == 1) return false;
  }
  return true;
}

void build_log_tables(detail::FieldData& d) {
  // Try x first (the canonical moduli make it primitive), then a bounded
  // scan; a reducible modulus never yields a generator.
  const auto factors = prime_factors(d.q - 1);
  std::uint32_t generator = 0;
  if (has_full_order(d, d.p, factors)) {
    generator = d.p;
  } else {
    for (std::uint32_t g = 2; g < d.q && g < 2 + 256; ++g) {
      if (has_full_order(d, g, factors)) {
        generator = g;
        break;
      }
    }
  }
  if (generator == 0) return;
  d.exp_table.assign(2 * (d.q - 1), 0);
  d.log_table.assign(d.q, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < d.q - 1; ++i) {
    d.exp_table[i] = v;
    d.exp_table[i + d.q - 1] = v;
    d.log_table[v] = i;
    v = d.slow_mul(v, generator);
  }
  d.primitive = true;
}

struct Registry {
  std::mutex mu;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>,
           std::unique_ptr<detail::FieldData>>
      fields;
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError, "bad field spec '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

const ModulusTable& ModulusTable::canonical() {
  static const ModulusTable* table = new ModulusTable(parse(kCanonicalModuliText));
  return *table;
}

ModulusTable ModulusTable::parse(std::string_view text) {
  ModulusTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::uint64_t> nums;
    std::string tok;
    while (fields >> tok) nums.push_back(parse_uint(tok, line));
    if (nums.empty()) continue;
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::kParseError,
                   "modulus table line " + std::to_string(line_no) + ": " + why);
    };
    if (nums.size() < 3) throw bad("expected `p e c_0 ... c_e`");
    const std::uint64_t p = nums[0], e = nums[1];
    if (e < 1 || nums.size() != e + 3) throw bad("coefficient count does not match degree");
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 2; i < nums.size(); ++i) {
      if (nums[i] >= p) throw bad("coefficient not reduced mod p");
      coeffs.push_back(static_cast<std::uint32_t>(nums[i]));
    }
    if (coeffs.back() != 1) throw bad("modulus is not monic");
    table.entries_[{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)}] =
        std::move(coeffs);
  }
  return table;
}

ModulusTable ModulusTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open modulus table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::vector<std::uint32_t>* ModulusTable::find(std::uint32_t p, std::uint32_t e) const {
  auto it = entries_.find({p, e});
  return it == entries_.end() ? nullptr : &it->second;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldSpec field_make(std::uint32_t p, std::uint32_t e) {
  return field_make(p, e, ModulusTable::canonical());
}

FieldSpec field_make(std::uint32_t p, std::uint32_t e, const ModulusTable& table) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (e == 0) throw Error(ErrorCode::kUnsupportedSize, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::kUnsupportedSize,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^20 elements");
    }
  }
  std::vector<std::uint32_t> modulus = {0, 1};
  if (e > 1) {
    const auto* entry = table.find(p, e);
    if (entry == nullptr) {
      throw Error(ErrorCode::kMissingModulusEntry,
                  "no modulus for (" + std::to_string(p) + ", " + std::to_string(e) + ")");
    }
    modulus = *entry;
  }

  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_tuple(p, e, modulus);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return FieldSpec(it->second.get());

  auto data = std::make_unique<detail::FieldData>();
  data->p = p;
  data->e = e;
  data->q = static_cast<std::uint32_t>(q);
  data->modulus = modulus;
  data->radix.resize(e);
  std::uint32_t r = 1;
  for (std::uint32_t j = 0; j < e; ++j, r *= p) data->radix[j] = r;
  if (e == 1) {
    data->primitive = true;
  } else {
    build_log_tables(*data);
  }
  const detail::FieldData* raw = data.get();
  reg.fields.emplace(std::move(key), std::move(data));
  return FieldSpec(raw);
}

FieldSpec parse_field(std::string_view text) {
  return parse_field(text, ModulusTable::canonical());
}

FieldSpec parse_field(std::string_view text, const ModulusTable& table) {
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    std::uint64_t p = parse_uint(text.substr(0, caret), text);
    std::uint64_t e = parse_uint(text.substr(caret + 1), text);
    if (p > kMaxFieldOrder || e > 64) {
      throw Error(ErrorCode::kUnsupportedSize, "field too large: " + std::string(text));
    }
    return field_make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), table);
  }
  std::uint64_t q = parse_uint(text, text);
  if (q > kMaxFieldOrder) {
    throw Error(ErrorCode::kUnsupportedSize, "field too large: " + std::string(text));
  }
  if (q < 2) throw Error(ErrorCode::kNonPrimeCharacteristic, "field order must be >= 2");
  std::uint64_t p = prime_factors(q).front();
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw Error(ErrorCode::kNonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  }
  return field_make(static_cast<std::uint32_t>(p), e, table);
}

std::uint32_t FieldSpec::p() const { return data_->p; }
std::uint32_t FieldSpec::e() const { return data_->e; }
std::uint32_t FieldSpec::q() const { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return data_->modulus; }
bool FieldSpec::has_primitive_element() const { return data_->primitive; }

std::string FieldSpec::to_string() const {
  if (data_->e == 1) return std::to_string(data_->p);
  return std::to_string(data_->p) + "^" + std::to_string(data_->e);
}

FieldElement FieldSpec::zero() const { return FieldElement(data_, 0); }
FieldElement FieldSpec::one() const { return FieldElement(data_, 1); }

FieldElement FieldSpec::element(std::uint32_t index) const {
  if (index >= data_->q) {
    throw Error(ErrorCode::kInvalidParameters,
                "element index " + std::to_string(index) + " out of range for F_" +
                    std::to_string(data_->q));
  }
  return FieldElement(data_, index);
}

FieldElement FieldSpec::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(data_->p);
  if (r < 0) r += data_->p;
  return FieldElement(data_, static_cast<std::uint32_t>(r));
}

FieldElement FieldSpec::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != data_->e) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(data_->e) +
                                                   " coefficients");
  }
  std::uint32_t v = 0;
  for (std::uint32_t j = 0; j < data_->e; ++j) {
    if (coeffs[j] >= data_->p) throw Error(ErrorCode::kInvalidParameters, "coefficient >= p");
    v += coeffs[j] * data_->radix[j];
  }
  return FieldElement(data_, v);
}

FieldElement::FieldElement(FieldSpec spec, std::uint32_t index) {
  *this = spec.element(index);
}

std::vector<std::uint32_t> FieldElement::coefficients() const {
  std::vector<std::uint32_t> out(data_->e);
  std::uint32_t v = value_;
  for (auto& c : out) {
    c = v % data_->p;
    v /= data_->p;
  }
  return out;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (data_ != o.data_ || data_ == nullptr) {
    throw Error(ErrorCode::kSpecMismatch, "operands belong to different fields");
  }
}

FieldElement FieldElement::inv() const { return FieldElement(data_, data_->inv(value_)); }
FieldElement FieldElement::pow(std::uint64_t n) const {
  return FieldElement(data_, data_->pow(value_, n));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ = data_->add(value_, o.value_);
  return *this;
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ = data_->sub(value_, o.value_);
  return *this;
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  value_ = data_->mul(value_, o.value_);
  return *this;
}
FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  value_ = data_->mul(value_, data_->inv(o.value_));
  return *this;
}
FieldElement FieldElement::operator-() const { return FieldElement(data_, data_->neg(value_)); }

std::vector<FieldElement> field_enumerate(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(spec.q());
  for (std::uint32_t i = 0; i < spec.q(); ++i) out.push_back(spec.element(i));
  return out;
}

FieldElement field_sample(const FieldSpec& spec, Rng& rng) {
  return spec.element(static_cast<std::uint32_t>(rng.uniform(spec.q())));
}

}  // namespace mom
