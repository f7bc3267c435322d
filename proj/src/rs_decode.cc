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

#include "mom/rs_decode.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "mom/interpolate.h"

namespace mom {

namespace {

// dense[j][i] = coefficient index of X^i Y^j.
using Dense = std::vector<std::vector<std::uint32_t>>;

void validate(const RSInstance& inst) {
  if (!inst.spec.valid()) throw Error(ErrorCode::kInvalidParameters, "missing field");
  if (inst.alphas.size() != inst.betas.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "alphas and betas differ in length");
  }
  if (inst.alphas.empty()) throw Error(ErrorCode::kInvalidParameters, "empty received word");
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < inst.alphas.size(); ++i) {
    if (inst.alphas[i].spec() != inst.spec || inst.betas[i].spec() != inst.spec) {
      throw Error(ErrorCode::kSpecMismatch, "symbol outside the field");
    }
    if (!seen.insert(inst.alphas[i].index()).second) {
      throw Error(ErrorCode::kDuplicateNodes, "evaluation points repeat");
    }
  }
}

void validate_for_decoding(const RSInstance& inst) {
  validate(inst);
  if (inst.k == 0 || inst.k >= inst.n()) throw Error(ErrorCode::kInvalidParameters, "need 1 <= k < n");
  if (inst.t == 0 || inst.t > inst.n()) throw Error(ErrorCode::kInvalidParameters, "need 1 <= t <= n");
  const Rational g = inst.gamma();
  if (g * g <= inst.rate()) {
    throw Error(ErrorCode::kBelowJohnsonRadius, "gamma^2 = " + to_string(g * g) +
                                                    " does not exceed R = " + to_string(inst.rate()));
  }
}

Dense to_dense(const MultiPoly& q) {
  if (q.num_vars() != 2) throw Error(ErrorCode::kDimensionMismatch, "expected a bivariate polynomial");
  std::uint32_t dx = 0, dy = 0;
  for (const auto& [e, c] : q.terms()) {
    dx = std::max(dx, e[0]);
    dy = std::max(dy, e[1]);
  }
  Dense out(dy + 1, std::vector<std::uint32_t>(dx + 1, 0));
  for (const auto& [e, c] : q.terms()) out[e[1]][e[0]] = c.index();
  return out;
}

void strip_x(Dense& q) {
  std::size_t r = SIZE_MAX;
  for (const auto& row : q) {
    for (std::size_t i = 0; i < row.size() && i < r; ++i) {
      if (row[i] != 0) {
        r = i;
        break;
      }
    }
  }
  if (r == SIZE_MAX || r == 0) return;
  for (auto& row : q) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(std::min(r, row.size())));
}

// Q(X, X*Y + a).
Dense shift_substitute(const FieldSpec& f, const Dense& q, std::uint32_t a) {
  const std::size_t dy = q.size() - 1;
  std::size_t dx = 0;
  for (const auto& row : q) dx = std::max(dx, row.size());
  Dense out(dy + 1, std::vector<std::uint32_t>(dx + dy + 1, 0));
  std::vector<std::uint32_t> apow(dy + 1, 1);
  for (std::size_t j = 1; j <= dy; ++j) apow[j] = f.mul(apow[j - 1], a);
  for (std::size_t j = 0; j <= dy; ++j) {
    for (std::size_t l = 0; l <= j; ++l) {
      const std::uint32_t c = f.mul(vector_binomial(f, {static_cast<std::uint32_t>(j)},
                                                    {static_cast<std::uint32_t>(l)}).index(),
                                    apow[j - l]);
      if (c == 0) continue;
      for (std::size_t i = 0; i < q[j].size(); ++i) {
        if (q[j][i] == 0) continue;
        out[l][i + l] = f.add(out[l][i + l], f.mul(q[j][i], c));
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> poly_mul(const FieldSpec& f, const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return out;
}

// Q(X, f(X)) == 0, by Horner's rule in Y.
bool vanishes_on(const FieldSpec& f, const Dense& q, const std::vector<std::uint32_t>& coeffs) {
  std::vector<std::uint32_t> acc;
  for (std::size_t j = q.size(); j-- > 0;) {
    acc = poly_mul(f, acc, coeffs);
    if (acc.size() < q[j].size()) acc.resize(q[j].size(), 0);
    for (std::size_t i = 0; i < q[j].size(); ++i) acc[i] = f.add(acc[i], q[j][i]);
  }
  return std::all_of(acc.begin(), acc.end(), [](std::uint32_t v) { return v == 0; });
}

void roth_ruckenstein(const FieldSpec& f, Dense q, std::uint32_t k, std::vector<std::uint32_t>& prefix,
                      std::set<std::vector<std::uint32_t>>& out) {
  strip_x(q);
  if (prefix.size() == k + 1) {
    out.insert(prefix);
    return;
  }
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    std::uint32_t v = 0;
    for (std::size_t j = q.size(); j-- > 0;) v = f.add(f.mul(v, a), q[j].empty() ? 0 : q[j][0]);
    if (v != 0) continue;
    prefix.push_back(a);
    roth_ruckenstein(f, shift_substitute(f, q, a), k, prefix, out);
    prefix.pop_back();
  }
}

MultiPoly from_indices(const FieldSpec& f, const std::vector<std::uint32_t>& c) {
  std::vector<FieldElement> coeffs;
  for (auto v : c) coeffs.push_back(f.element(v));
  return MultiPoly::univariate(f, coeffs);
}

std::uint64_t search_space(std::uint32_t q, std::uint32_t k, std::uint64_t limit) {
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i <= k; ++i) {
    s *= q;
    if (s > limit) return limit + 1;
  }
  return s;
}

}  // namespace

Rational RSInstance::rate() const { return Rational(BigInt(k), BigInt(n())); }
Rational RSInstance::gamma() const { return Rational(BigInt(t), BigInt(n())); }

GSParams choose_params(const RSInstance& inst, const Rational& eps) {
  validate_for_decoding(inst);
  if (eps <= 0) throw Error(ErrorCode::kInvalidParameters, "eps must be positive");
  const Rational r = inst.rate(), g = inst.gamma();
  const Rational theta = 2 * r / (r + g * g);
  const Rational x = Rational(BigInt(inst.n() * inst.k)) / (theta * (2 - theta));
  const std::uint64_t n = inst.n();
  for (std::uint32_t m = 1; m <= kMaxMultiplicity; ++m) {
    const Rational s = (1 + eps) * (1 + eps) * m * m * x;
    BigInt d = boost::multiprecision::sqrt(floor(s));
    while (Rational(d * d) < s) ++d;
    if (BigInt(inst.t) * m <= d) continue;
    const auto du = static_cast<std::uint32_t>(d);
    const auto cap = static_cast<std::uint32_t>(floor(theta * du / inst.k));
    const std::uint64_t monomials = count_weighted_monomials_capped(inst.k, du, cap);
    if (std::uint64_t{m} * (m + 1) / 2 * n >= monomials) continue;
    return GSParams{m, du, theta, cap, eps};
  }
  throw Error(ErrorCode::kNoFeasibleM, "no feasible multiplicity up to " + std::to_string(kMaxMultiplicity));
}

MultiPoly gs_interpolate(const RSInstance& inst, const GSParams& params) {
  validate(inst);
  InterpolationProblem pr;
  pr.spec = inst.spec;
  pr.n = 2;
  pr.m = params.m;
  pr.basis = WeightedDegreeBasis{params.d, inst.k, params.ydeg_cap};
  for (std::size_t i = 0; i < inst.n(); ++i) pr.points.push_back({inst.alphas[i], inst.betas[i]});
  return vanishing_interpolation(pr);
}

std::vector<FieldElement> coefficient_vector(const MultiPoly& f, std::uint32_t k) {
  std::vector<FieldElement> c = f.univariate_coefficients();
  if (c.size() > k + 1) throw Error(ErrorCode::kInvalidParameters, "degree exceeds k");
  c.resize(k + 1, f.spec().zero());
  return c;
}

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  const auto ca = a.univariate_coefficients(), cb = b.univariate_coefficients();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i].index() != cb[i].index()) return ca[i].index() < cb[i].index();
  }
  return false;
}

std::vector<MultiPoly> y_roots_brute_force(const MultiPoly& q, std::uint32_t k) {
  if (q.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Q must be nonzero");
  const FieldSpec& f = q.spec();
  const std::uint64_t space = search_space(f.q(), k, 1000000);
  if (space > 1000000) throw Error(ErrorCode::kSearchSpaceTooLarge, "q^(k+1) exceeds 10^6");
  const Dense dq = to_dense(q);
  std::vector<MultiPoly> out;
  std::vector<std::uint32_t> c(k + 1, 0);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    std::uint64_t v = idx;
    for (auto& x : c) {
      x = static_cast<std::uint32_t>(v % f.q());
      v /= f.q();
    }
    if (vanishes_on(f, dq, c)) out.push_back(from_indices(f, c));
  }
  return out;
}

std::vector<MultiPoly> y_roots(const MultiPoly& q, std::uint32_t k, bool cross_check) {
  if (q.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Q must be nonzero");
  const FieldSpec& f = q.spec();
  const Dense dq = to_dense(q);
  std::set<std::vector<std::uint32_t>> candidates;
  std::vector<std::uint32_t> prefix;
  roth_ruckenstein(f, dq, k, prefix, candidates);
  std::vector<MultiPoly> out;
  for (const auto& c : candidates) {
    if (vanishes_on(f, dq, c)) out.push_back(from_indices(f, c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  if (cross_check && search_space(f.q(), k, 10000) <= 10000) {
    if (out != y_roots_brute_force(q, k)) {
      throw Error(ErrorCode::kInternalNoSolution, "root finder disagrees with exhaustive search");
    }
  }
  return out;
}

std::uint32_t agreement(const RSInstance& inst, const MultiPoly& f) {
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (poly_eval(f, {inst.alphas[i]}) == inst.betas[i]) ++count;
  }
  return count;
}

DecodeResult list_decode_report(const RSInstance& inst, const Rational& eps) {
  const GSParams params = choose_params(inst, eps);
  DecodeResult out{params, gs_interpolate(inst, params), {}};
  for (auto& f : y_roots(out.interpolant, inst.k)) {
    if (agreement(inst, f) >= inst.t) out.list.push_back(std::move(f));
  }
  return out;
}

std::vector<MultiPoly> list_decode(const RSInstance& inst, const Rational& eps) {
  return list_decode_report(inst, eps).list;
}

std::vector<MultiPoly> brute_force_decode(const RSInstance& inst) {
  validate(inst);
  const FieldSpec& f = inst.spec;
  const std::uint64_t space = search_space(f.q(), inst.k, 1000000);
  if (space > 1000000) throw Error(ErrorCode::kSearchSpaceTooLarge, "q^(k+1) exceeds 10^6");
  std::vector<MultiPoly> out;
  if (inst.t > inst.n()) return out;
  std::vector<std::uint32_t> c(inst.k + 1, 0);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    std::uint64_t v = idx;
    for (auto& x : c) {
      x = static_cast<std::uint32_t>(v % f.q());
      v /= f.q();
    }
    std::uint32_t agree = 0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
      std::uint32_t y = 0;
      for (std::size_t j = c.size(); j-- > 0;) y = f.add(f.mul(y, inst.alphas[i].index()), c[j]);
      if (y == inst.betas[i].index()) ++agree;
    }
    if (agree >= inst.t) out.push_back(from_indices(f, c));
  }
  return out;
}

Rational list_size_bound(const Rational& gamma, const Rational& rate) {
  if (gamma <= 0 || gamma > 1 || rate <= 0 || rate >= 1 || gamma * gamma <= rate) {
    throw Error(ErrorCode::kInvalidParameters, "need gamma^2 > R, 0 < gamma <= 1, 0 < R < 1");
  }
  return 2 * gamma / (gamma * gamma - rate);
}

}  // namespace mom
