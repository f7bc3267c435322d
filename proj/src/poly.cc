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

#include "mom/poly.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <thread>

#include "mom/rng.h"

namespace mom {

std::uint32_t weight(const Exponents& i) {
  return std::accumulate(i.begin(), i.end(), std::uint32_t{0});
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const std::uint32_t wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Exponents> exponents_of_weight(std::size_t n, std::uint32_t w) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (w == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  // Emits vectors in decreasing lexicographic order, i.e. graded-lex order.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, w);
  return out;
}

namespace {

// C(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint64_t result = 1;
  while (k > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p for digits below p.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < kd; ++t) {
      num = num * ((nd - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    // den is a unit mod p since kd < p.
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

void check_point(const MultiPoly& p, const Point& a) {
  if (a.size() != p.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(a.size()) + " coordinates, polynomial has " +
                    std::to_string(p.num_vars()) + " variables");
  }
  for (const auto& x : a) {
    if (x.spec() != p.spec()) throw Error(ErrorCode::kSpecMismatch, "point outside the field");
  }
}

// powers[j][k] = a_j^k for k <= max_exp.
std::vector<std::vector<std::uint32_t>> coordinate_powers(const FieldSpec& f, const Point& a,
                                                          std::uint32_t max_exp) {
  std::vector<std::vector<std::uint32_t>> powers(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto& row = powers[j];
    row.resize(max_exp + 1);
    row[0] = 1;
    for (std::uint32_t k = 1; k <= max_exp; ++k) row[k] = f.mul(row[k - 1], a[j].index());
  }
  return powers;
}

}  // namespace

MultiPoly::MultiPoly(FieldSpec spec, std::size_t num_vars)
    : spec_(std::move(spec)), num_vars_(num_vars) {
  if (!spec_.valid()) throw Error(ErrorCode::kSpecMismatch, "polynomial over an invalid field");
}

MultiPoly MultiPoly::constant(FieldSpec spec, std::size_t num_vars, const FieldElement& c) {
  MultiPoly p(std::move(spec), num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(FieldSpec spec, std::size_t num_vars, std::size_t j) {
  if (j >= num_vars) throw Error(ErrorCode::kDimensionMismatch, "variable index out of range");
  Exponents e(num_vars, 0);
  e[j] = 1;
  FieldElement one = spec.one();
  return monomial(std::move(spec), e, one);
}

MultiPoly MultiPoly::monomial(FieldSpec spec, const Exponents& exps, const FieldElement& c) {
  MultiPoly p(std::move(spec), exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::univariate(FieldSpec spec, const std::vector<FieldElement>& coeffs) {
  MultiPoly p(std::move(spec), 1);
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) p.add_term({k}, coeffs[k]);
  return p;
}

Degree MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return weight(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return weight(terms_.begin()->first) == weight(terms_.rbegin()->first);
}

FieldElement MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? spec_.zero() : it->second;
}

std::vector<FieldElement> MultiPoly::univariate_coefficients() const {
  if (num_vars_ != 1) throw Error(ErrorCode::kDimensionMismatch, "not a univariate polynomial");
  std::vector<FieldElement> out;
  if (terms_.empty()) return out;
  out.assign(terms_.rbegin()->first[0] + 1, spec_.zero());
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const FieldElement& c) {
  if (exps.size() != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "exponent vector length does not match");
  }
  if (c.spec() != spec_) throw Error(ErrorCode::kSpecMismatch, "coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.spec_ != spec_) throw Error(ErrorCode::kSpecMismatch, "polynomials over different fields");
  if (o.num_vars_ != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomials in different variable counts");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_compatible(o);
  MultiPoly out(spec_, num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t j = 0; j < num_vars_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
  if (c.spec() != spec_) throw Error(ErrorCode::kSpecMismatch, "scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly result = constant(spec_, num_vars_, spec_.one());
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.spec_ == b.spec_ && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

Curve::Curve(std::vector<MultiPoly> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::kDimensionMismatch, "curve in zero dimensions");
  for (const auto& c : components_) {
    if (c.num_vars() != 1) throw Error(ErrorCode::kDimensionMismatch, "curve component not univariate");
    if (c.spec() != components_.front().spec()) {
      throw Error(ErrorCode::kSpecMismatch, "curve components over different fields");
    }
  }
}

Curve Curve::line(const Point& a, const Point& b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "line endpoints differ in dimension");
  }
  std::vector<MultiPoly> comps;
  for (std::size_t j = 0; j < a.size(); ++j) {
    comps.push_back(MultiPoly::univariate(a[j].spec(), {a[j], b[j]}));
  }
  return Curve(std::move(comps));
}

Degree Curve::degree() const {
  Degree d;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

Point Curve::evaluate(const FieldElement& t) const {
  Point out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(poly_eval(c, {t}));
  return out;
}

Curve Curve::shifted_to_vanish_at(const FieldElement& t) const {
  std::vector<MultiPoly> comps = components_;
  for (auto& c : comps) {
    FieldElement v = poly_eval(c, {t});
    c -= MultiPoly::constant(c.spec(), 1, v);
  }
  return Curve(std::move(comps));
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c.index());
    out += ':';
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(e[j]);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError, "cannot parse '" + std::string(context) + "'");
  }
  return v;
}

FieldElement parse_element(const FieldSpec& spec, std::string_view s, std::string_view context) {
  std::uint64_t v = parse_u64(s, context);
  if (v >= spec.q()) {
    throw Error(ErrorCode::kParseError, "field index " + std::to_string(v) + " >= q in '" +
                                            std::string(context) + "'");
  }
  return spec.element(static_cast<std::uint32_t>(v));
}

}  // namespace

MultiPoly parse_poly(const FieldSpec& spec, std::size_t num_vars, std::string_view text) {
  MultiPoly p(spec, num_vars);
  text = trim(text);
  if (text == "0") return p;
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty polynomial");
  for (std::string_view term : split(text, ';')) {
    term = trim(term);
    auto colon = term.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "term without ':' in '" + std::string(term) + "'");
    }
    FieldElement c = parse_element(spec, term.substr(0, colon), term);
    Exponents e;
    for (std::string_view x : split(term.substr(colon + 1), ',')) {
      e.push_back(static_cast<std::uint32_t>(parse_u64(x, term)));
    }
    if (e.size() != num_vars) {
      throw Error(ErrorCode::kDimensionMismatch, "term '" + std::string(term) + "' has " +
                                                     std::to_string(e.size()) + " exponents, expected " +
                                                     std::to_string(num_vars));
    }
    p.add_term(e, c);
  }
  return p;
}

MultiPoly parse_poly(const FieldSpec& spec, std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "cannot infer variable count from '" + std::string(text) + "'");
  }
  std::string_view first = text.substr(colon + 1);
  first = first.substr(0, first.find(';'));
  return parse_poly(spec, split(first, ',').size(), text);
}

Point parse_point(const FieldSpec& spec, std::string_view text) {
  Point a;
  for (std::string_view x : split(trim(text), ',')) a.push_back(parse_element(spec, x, text));
  return a;
}

std::string to_string(const Point& a) {
  std::string out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(a[j].index());
  }
  return out;
}

FieldElement poly_eval(const MultiPoly& p, const Point& a) {
  check_point(p, a);
  const FieldSpec& f = p.spec();
  if (p.is_zero()) return f.zero();
  const auto powers = coordinate_powers(f, a, *p.degree());
  std::uint32_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    std::uint32_t v = c.index();
    for (std::size_t j = 0; j < e.size() && v != 0; ++j) v = f.mul(v, powers[j][e[j]]);
    acc = f.add(acc, v);
  }
  return f.element(acc);
}

FieldElement vector_binomial(const FieldSpec& spec, const Exponents& i, const Exponents& j) {
  if (i.size() != j.size()) throw Error(ErrorCode::kDimensionMismatch, "binomial of unequal lengths");
  std::uint32_t v = 1;
  for (std::size_t k = 0; k < i.size() && v != 0; ++k) {
    if (j[k] > i[k]) return spec.zero();
    v = spec.mul(v, binomial_mod_p(i[k], j[k], spec.p()));
  }
  return spec.element(v);
}

MultiPoly hasse_derivative(const MultiPoly& p, const Exponents& i) {
  if (i.size() != p.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "derivative index length does not match");
  }
  const FieldSpec& f = p.spec();
  MultiPoly out(f, p.num_vars());
  Exponents shifted(i.size());
  for (const auto& [r, c] : p.terms()) {
    bool dominates = true;
    for (std::size_t k = 0; k < i.size(); ++k) {
      if (r[k] < i[k]) {
        dominates = false;
        break;
      }
      shifted[k] = r[k] - i[k];
    }
    if (!dominates) continue;
    FieldElement b = vector_binomial(f, r, i);
    if (!b.is_zero()) out.add_term(shifted, b * c);
  }
  return out;
}

FieldElement hasse_eval(const MultiPoly& p, const Exponents& i, const Point& a) {
  check_point(p, a);
  if (i.size() != p.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "derivative index length does not match");
  }
  const FieldSpec& f = p.spec();
  if (p.is_zero()) return f.zero();
  const auto powers = coordinate_powers(f, a, *p.degree());
  std::uint32_t acc = 0;
  for (const auto& [r, c] : p.terms()) {
    std::uint32_t v = c.index();
    for (std::size_t k = 0; k < i.size() && v != 0; ++k) {
      if (r[k] < i[k]) {
        v = 0;
        break;
      }
      v = f.mul(v, binomial_mod_p(r[k], i[k], f.p()));
      v = f.mul(v, powers[k][r[k] - i[k]]);
    }
    acc = f.add(acc, v);
  }
  return f.element(acc);
}

Multiplicity multiplicity(const MultiPoly& p, const Point& a) {
  check_point(p, a);
  if (p.is_zero()) return Multiplicity::infinite();
  const std::uint32_t deg = *p.degree();
  // A top-degree monomial r has P^(r) equal to its nonzero coefficient, so
  // the scan stops by weight deg.
  for (std::uint32_t w = 0; w <= deg; ++w) {
    for (const Exponents& i : exponents_of_weight(p.num_vars(), w)) {
      if (!hasse_eval(p, i, a).is_zero()) return w;
    }
  }
  throw Error(ErrorCode::kInternalNoSolution, "multiplicity scan exceeded the degree");
}

Multiplicity multiplicity(const std::vector<MultiPoly>& tuple, const Point& a) {
  Multiplicity best = Multiplicity::infinite();
  for (const auto& p : tuple) best = std::min(best, multiplicity(p, a));
  return best;
}

MultiPoly homogeneous_part(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "homogeneous part of the zero polynomial");
  const std::uint32_t deg = *p.degree();
  MultiPoly out(p.spec(), p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (weight(e) == deg) out.add_term(e, c);
  }
  return out;
}

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& q) {
  if (q.size() != p.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "composition needs one polynomial per variable");
  }
  if (q.empty()) throw Error(ErrorCode::kDimensionMismatch, "composition with an empty tuple");
  const std::size_t m = q.front().num_vars();
  for (const auto& qj : q) {
    if (qj.spec() != p.spec()) throw Error(ErrorCode::kSpecMismatch, "composition across fields");
    if (qj.num_vars() != m) throw Error(ErrorCode::kDimensionMismatch, "inner polynomials differ in arity");
  }
  // powers[j][k] = Q_j^k, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    powers[j].push_back(MultiPoly::constant(p.spec(), m, p.spec().one()));
  }
  auto power = [&](std::size_t j, std::uint32_t k) -> const MultiPoly& {
    while (powers[j].size() <= k) powers[j].push_back(powers[j].back() * q[j]);
    return powers[j][k];
  };
  MultiPoly out(p.spec(), m);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(p.spec(), m, c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) term *= power(j, e[j]);
    }
    out += term;
  }
  return out;
}

MultiPoly compose_curve(const MultiPoly& p, const Curve& c) {
  if (c.dimension() != p.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "curve dimension does not match polynomial");
  }
  if (c.spec() != p.spec()) throw Error(ErrorCode::kSpecMismatch, "curve over another field");
  return compose(p, c.components());
}

MultiPoly restrict_to_line(const MultiPoly& p, const Point& a, const Point& b) {
  check_point(p, a);
  check_point(p, b);
  return compose(p, Curve::line(a, b).components());
}

std::uint64_t multiplicity_mass(const MultiPoly& p, const std::vector<FieldElement>& s,
                                std::size_t jobs) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "mass of the zero polynomial is infinite");
  if (s.empty()) throw Error(ErrorCode::kEmptySet, "evaluation set is empty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].spec() != p.spec()) throw Error(ErrorCode::kSpecMismatch, "set element outside the field");
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) throw Error(ErrorCode::kInvalidParameters, "evaluation set has duplicates");
    }
  }
  const std::size_t n = p.num_vars();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= s.size();

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t sum = 0;
    Point a(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t j = 0; j < n; ++j) {
        a[j] = s[rest % s.size()];
        rest /= s.size();
      }
      sum += multiplicity(p, a).value();
    }
    return sum;
  };
  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, total));
  if (jobs == 1) return run(0, total);
  std::vector<std::uint64_t> partial(jobs, 0);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] { partial[w] = run(total * w / jobs, total * (w + 1) / jobs); });
  }
  for (auto& t : workers) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::vector<Point> all_points(const FieldSpec& spec, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= spec.q();
  std::vector<Point> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) out.push_back(point_from_index(spec, n, idx));
  return out;
}

std::uint64_t point_index(const Point& a) {
  std::uint64_t idx = 0;
  for (std::size_t j = a.size(); j-- > 0;) idx = idx * a[j].spec().q() + a[j].index();
  return idx;
}

Point point_from_index(const FieldSpec& spec, std::size_t n, std::uint64_t index) {
  Point a;
  a.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    a.push_back(spec.element(static_cast<std::uint32_t>(index % spec.q())));
    index /= spec.q();
  }
  return a;
}

MultiPoly random_poly(const FieldSpec& spec, std::size_t n, std::uint32_t max_degree,
                      std::size_t num_terms, Rng& rng) {
  MultiPoly p(spec, n);
  for (std::size_t t = 0; t < num_terms; ++t) {
    std::uint32_t w = static_cast<std::uint32_t>(rng.uniform(max_degree + 1));
    // Random composition of w into n parts.
    Exponents e(n, 0);
    for (std::uint32_t u = 0; u < w; ++u) e[rng.uniform(n)] += 1;
    p.add_term(e, field_sample(spec, rng));
  }
  return p;
}

Point random_point(const FieldSpec& spec, std::size_t n, Rng& rng) {
  Point a;
  for (std::size_t j = 0; j < n; ++j) a.push_back(field_sample(spec, rng));
  return a;
}

}  // namespace mom
