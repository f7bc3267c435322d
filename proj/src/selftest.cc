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

#include "mom/selftest.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "mom/distribution.h"
#include "mom/interpolate.h"
#include "mom/kakeya.h"
#include "mom/linalg.h"
#include "mom/merger.h"
#include "mom/poly.h"
#include "mom/rng.h"
#include "mom/rs_decode.h"

namespace mom {

namespace {

// Stream ids keep each law's randomness independent of the others.
enum Stream : std::uint64_t {
  kAdditivity = 1,
  kHomogeneity,
  kHomogeneousPart,
  kIterated,
  kDerivativeMult,
  kComposition,
  kLineRestriction,
  kSchwartzZippel,
  kInterpolation,
  kElimination,
  kNodes,
  kAffine,
  kExcessMass,
  kMetric,
  kRsEquivalence,
  kRoots,
};

class Law {
 public:
  explicit Law(std::string statement, std::string key = "") {
    row_.statement = std::move(statement);
    row_.key = std::move(key);
    row_.passed = true;
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++row_.checked;
    if (!ok && row_.passed) {
      row_.passed = false;
      row_.detail = describe();
    } else if (!ok) {
      row_.passed = false;
    }
  }

  void fail(const std::string& detail) {
    if (row_.passed) row_.detail = detail;
    row_.passed = false;
  }

  SelftestRow done() && { return std::move(row_); }

 private:
  SelftestRow row_;
};

// Runs `body` and turns an escaping Error into a failed row.
SelftestRow guarded(const std::string& statement, const std::string& key,
                    const std::function<void(Law&)>& body) {
  Law law(statement, key);
  try {
    body(law);
  } catch (const Error& e) {
    law.fail(std::string(e.name()) + ": " + e.what());
  }
  return std::move(law).done();
}

const std::uint32_t kSmallQ[] = {2, 3, 5};

FieldSpec small_field(Rng& rng) { return field_make(kSmallQ[rng.uniform(3)], 1); }

Exponents random_exponents(std::size_t n, std::uint32_t max_weight, Rng& rng) {
  const auto w = static_cast<std::uint32_t>(rng.uniform(max_weight + 1));
  const auto all = exponents_of_weight(n, w);
  return all[rng.uniform(all.size())];
}

// R * prod (X_j - a_j) over `s` random j: multiplicity >= s at a.
MultiPoly planted(const FieldSpec& f, const Point& a, std::uint32_t s, std::uint32_t max_degree,
                  Rng& rng) {
  const std::size_t n = a.size();
  MultiPoly p = random_poly(f, n, max_degree - s, 1 + rng.uniform(6), rng);
  for (std::uint32_t t = 0; t < s; ++t) {
    const auto j = static_cast<std::size_t>(rng.uniform(n));
    p *= MultiPoly::variable(f, n, j) - MultiPoly::constant(f, n, a[j]);
  }
  return p;
}

Multiplicity times(Multiplicity a, Multiplicity b) {
  if ((!a.is_infinite() && a.value() == 0) || (!b.is_infinite() && b.value() == 0)) return 0;
  if (a.is_infinite() || b.is_infinite()) return Multiplicity::infinite();
  return a.value() * b.value();
}

Multiplicity minus(Multiplicity a, std::uint32_t w) {
  if (a.is_infinite()) return a;
  return a.value() > w ? a.value() - w : 0;
}

std::string poly_detail(const MultiPoly& p) {
  return "F_" + p.spec().to_string() + " P=" + to_string(p);
}

std::string exps(const Exponents& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) s += (j ? "," : "") + std::to_string(e[j]);
  return "(" + s + ")";
}

std::vector<SelftestRow> field_rows(const ModulusTable& table) {
  std::vector<SelftestRow> rows;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
  for (std::uint32_t p = 2; p <= 64; ++p) {
    if (is_prime(p)) keys.emplace_back(p, 1);
  }
  for (const auto& [key, modulus] : table.entries()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < key.second; ++i) q *= key.first;
    if (q <= 64) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    std::uint64_t qa = 1, qb = 1;
    for (std::uint32_t i = 0; i < a.second; ++i) qa *= a.first;
    for (std::uint32_t i = 0; i < b.second; ++i) qb *= b.first;
    return qa != qb ? qa < qb : a < b;
  });
  for (const auto& [p, e] : keys) {
    const std::string key = "(" + std::to_string(p) + "," + std::to_string(e) + ")";
    rows.push_back(guarded("field axioms and a^(q-1) = 1", key, [&, p = p, e = e](Law& law) {
      const FieldSpec f = field_make(p, e, table);
      const auto el = field_enumerate(f);
      const auto describe = [&](const std::string& what) {
        return [what, &f] { return "F_" + f.to_string() + ": " + what; };
      };
      for (const auto& a : el) {
        law.check(a + f.zero() == a && a * f.one() == a, describe("identity fails at " + std::to_string(a.index())));
        law.check(a + (-a) == f.zero(), describe("additive inverse of " + std::to_string(a.index())));
        if (!a.is_zero()) {
          law.check(a * a.inv() == f.one(), describe("multiplicative inverse of " + std::to_string(a.index())));
          law.check(a.pow(f.q() - 1) == f.one(), describe("a^(q-1) != 1 at " + std::to_string(a.index())));
        }
        for (const auto& b : el) {
          law.check(a + b == b + a && a * b == b * a,
                    describe("commutativity at " + std::to_string(a.index()) + "," + std::to_string(b.index())));
          for (const auto& c : el) {
            const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                            a * (b + c) == a * b + a * c;
            if (!ok) {
              law.check(false, describe("associativity/distributivity at " + std::to_string(a.index()) + "," +
                                        std::to_string(b.index()) + "," + std::to_string(c.index())));
            }
          }
        }
      }
    }));
  }
  rows.push_back(guarded("enumeration order is the coefficient index", "", [&](Law& law) {
    for (const auto& [key, modulus] : table.entries()) {
      if (key.first > 7 || key.second > 6) continue;
      const FieldSpec f = field_make(key.first, key.second, table);
      for (const auto& a : field_enumerate(f)) {
        std::uint32_t idx = 0;
        const auto c = a.coefficients();
        for (std::size_t j = c.size(); j-- > 0;) idx = idx * f.p() + c[j];
        law.check(idx == a.index() && f.from_coefficients(c) == a,
                  [&] { return "F_" + f.to_string() + " element " + std::to_string(a.index()); });
      }
    }
  }));
  return rows;
}

void hasse_rows(std::vector<SelftestRow>& rows, const SelftestOptions& o) {
  rows.push_back(guarded("Hasse derivative additivity", "", [&](Law& law) {
    Rng rng(o.seed, kAdditivity);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const MultiPoly p = random_poly(f, n, 8, 1 + rng.uniform(8), rng);
      const MultiPoly q = random_poly(f, n, 8, 1 + rng.uniform(8), rng);
      const Exponents i = random_exponents(n, 8, rng);
      law.check(hasse_derivative(p + q, i) == hasse_derivative(p, i) + hasse_derivative(q, i),
                [&] { return poly_detail(p) + " Q=" + to_string(q) + " i=" + exps(i); });
    }
  }));

  rows.push_back(guarded("derivatives of homogeneous polynomials are homogeneous", "", [&](Law& law) {
    Rng rng(o.seed, kHomogeneity);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const MultiPoly r = random_poly(f, n, 8, 1 + rng.uniform(8), rng);
      if (r.is_zero()) continue;
      const MultiPoly p = homogeneous_part(r);
      const Exponents i = random_exponents(n, 8, rng);
      const MultiPoly d = hasse_derivative(p, i);
      const std::uint32_t deg = *p.degree(), w = weight(i);
      law.check(d.is_zero() || (d.is_homogeneous() && w <= deg && *d.degree() == deg - w),
                [&] { return poly_detail(p) + " i=" + exps(i); });
    }
  }));

  rows.push_back(guarded("homogeneous part commutes with derivatives", "", [&](Law& law) {
    Rng rng(o.seed, kHomogeneousPart);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const MultiPoly p = random_poly(f, n, 8, 1 + rng.uniform(8), rng);
      if (p.is_zero()) continue;
      const Exponents i = random_exponents(n, 8, rng);
      const MultiPoly d = hasse_derivative(p, i);
      const MultiPoly hd = hasse_derivative(homogeneous_part(p), i);
      const std::uint32_t deg = *p.degree(), w = weight(i);
      const bool full = !d.is_zero() && w <= deg && *d.degree() == deg - w;
      law.check(full ? hd == homogeneous_part(d) : hd.is_zero(),
                [&] { return poly_detail(p) + " i=" + exps(i); });
    }
  }));

  rows.push_back(guarded("iterated Hasse derivatives", "", [&](Law& law) {
    Rng rng(o.seed, kIterated);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const MultiPoly p = random_poly(f, n, 8, 1 + rng.uniform(8), rng);
      const Exponents i = random_exponents(n, 4, rng), j = random_exponents(n, 4, rng);
      Exponents ij(n);
      for (std::size_t l = 0; l < n; ++l) ij[l] = i[l] + j[l];
      law.check(hasse_derivative(hasse_derivative(p, i), j) ==
                    vector_binomial(f, ij, i) * hasse_derivative(p, ij),
                [&] { return poly_detail(p) + " i=" + exps(i) + " j=" + exps(j); });
    }
  }));

  rows.push_back(guarded("multiplicity drops by at most wt(i) under derivatives", "", [&](Law& law) {
    Rng rng(o.seed, kDerivativeMult);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const Point a = random_point(f, n, rng);
      const MultiPoly p = planted(f, a, static_cast<std::uint32_t>(rng.uniform(4)), 8, rng);
      const Exponents i = random_exponents(n, 4, rng);
      const Multiplicity m = multiplicity(p, a);
      law.check(multiplicity(hasse_derivative(p, i), a) >= minus(m, weight(i)),
                [&] { return poly_detail(p) + " a=" + to_string(a) + " i=" + exps(i); });
    }
  }));

  rows.push_back(guarded("multiplicity of compositions", "", [&](Law& law) {
    Rng rng(o.seed, kComposition);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3), n2 = 1 + rng.uniform(3);
      const Point a = random_point(f, n2, rng);
      const Point b = random_point(f, n, rng);
      const MultiPoly p = planted(f, b, static_cast<std::uint32_t>(rng.uniform(3)), 4, rng);
      const auto s = static_cast<std::uint32_t>(rng.uniform(3));
      std::vector<MultiPoly> q;
      for (std::size_t j = 0; j < n; ++j) {
        q.push_back(MultiPoly::constant(f, n2, b[j]) + planted(f, a, s, 2, rng));
      }
      std::vector<MultiPoly> shifted;
      for (std::size_t j = 0; j < n; ++j) {
        shifted.push_back(q[j] - MultiPoly::constant(f, n2, poly_eval(q[j], a)));
      }
      const Multiplicity lhs = multiplicity(compose(p, q), a);
      Point qa;
      for (const auto& c : q) qa.push_back(poly_eval(c, a));
      const Multiplicity rhs = times(multiplicity(p, qa), multiplicity(shifted, a));
      law.check(lhs >= rhs, [&] { return poly_detail(p) + " a=" + to_string(a); });
    }
  }));

  rows.push_back(guarded("restriction to a line keeps multiplicity", "", [&](Law& law) {
    Rng rng(o.seed, kLineRestriction);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const Point a = random_point(f, n, rng), b = random_point(f, n, rng);
      const FieldElement t0 = field_sample(f, rng);
      Point x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = a[j] + t0 * b[j];
      const MultiPoly p = planted(f, x, static_cast<std::uint32_t>(rng.uniform(4)), 8, rng);
      law.check(multiplicity(restrict_to_line(p, a, b), {t0}) >= multiplicity(p, x),
                [&] { return poly_detail(p) + " a=" + to_string(a) + " b=" + to_string(b); });
    }
  }));
}

void schwartz_zippel_rows(std::vector<SelftestRow>& rows, const SelftestOptions& o) {
  rows.push_back(guarded("multiplicity mass is at most deg(P) q^(n-1)", "", [&](Law& law) {
    Rng rng(o.seed, kSchwartzZippel);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(3);
      const Point a = random_point(f, n, rng);
      MultiPoly p = planted(f, a, static_cast<std::uint32_t>(rng.uniform(5)), 8, rng);
      if (p.is_zero()) continue;
      std::uint64_t bound = *p.degree();
      for (std::size_t j = 1; j < n; ++j) bound *= f.q();
      const std::uint64_t mass = multiplicity_mass(p, field_enumerate(f), o.jobs);
      law.check(mass <= bound, [&] { return poly_detail(p) + " mass=" + std::to_string(mass); });
    }
  }));

  rows.push_back(guarded("X1*X2 over F_3 attains the mass bound 6", "", [&](Law& law) {
    const FieldSpec f = field_make(3, 1);
    const MultiPoly p = parse_poly(f, 2, "1:1,1");
    const std::uint64_t mass = multiplicity_mass(p, field_enumerate(f), o.jobs);
    law.check(mass == 6, [&] { return "mass=" + std::to_string(mass); });
  }));

  rows.push_back(guarded("prod (X1 - c)^r_c has mass exactly deg q^(n-1)", "", [&](Law& law) {
    Rng rng(o.seed, kSchwartzZippel + 100);
    for (std::uint32_t t = 0; t < o.trials / 4 + 1; ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(2);
      MultiPoly p = MultiPoly::constant(f, n, f.one());
      std::uint64_t deg = 0;
      for (const auto& c : field_enumerate(f)) {
        const auto r = static_cast<std::uint32_t>(rng.uniform(4));
        deg += r;
        p *= (MultiPoly::variable(f, n, 0) - MultiPoly::constant(f, n, c)).pow(r);
      }
      std::uint64_t expected = deg;
      for (std::size_t j = 1; j < n; ++j) expected *= f.q();
      const std::uint64_t mass = multiplicity_mass(p, field_enumerate(f), o.jobs);
      law.check(mass == expected, [&] { return poly_detail(p) + " mass=" + std::to_string(mass); });
    }
  }));
}

// rank(A^T) by the same routine eliminates in a different order.
Matrix transpose(const Matrix& m) {
  Matrix t(m.spec(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

void interpolation_rows(std::vector<SelftestRow>& rows, const SelftestOptions& o) {
  rows.push_back(guarded("vanishing interpolation under the count hypothesis", "", [&](Law& law) {
    Rng rng(o.seed, kInterpolation);
    for (std::uint32_t t = 0; t < std::max<std::uint32_t>(o.trials / 4, 1); ++t) {
      const FieldSpec f = small_field(rng);
      const std::size_t n = 1 + rng.uniform(2);
      const auto m = static_cast<std::uint32_t>(1 + rng.uniform(3));
      std::uint64_t space = 1;
      for (std::size_t j = 0; j < n; ++j) space *= f.q();
      std::set<std::uint64_t> picked;
      const std::uint64_t size = 1 + rng.uniform(space);
      while (picked.size() < size) picked.insert(rng.uniform(space));
      InterpolationProblem pr{f, n, {}, m, TotalDegreeBasis{0}};
      for (auto idx : picked) pr.points.push_back(point_from_index(f, n, idx));
      const BigInt need = constraint_count(pr);
      std::uint32_t d = 0;
      while (count_total_degree_monomials(static_cast<std::uint32_t>(n), d) <= need) ++d;
      pr.basis = TotalDegreeBasis{d};
      const MultiPoly p = vanishing_interpolation(pr, InterpolationOptions{false});
      bool ok = !p.is_zero() && *p.degree() <= d;
      for (const auto& a : pr.points) ok = ok && multiplicity(p, a) >= Multiplicity(m);
      law.check(ok, [&] { return poly_detail(p) + " m=" + std::to_string(m) + " d=" + std::to_string(d); });
    }
  }));

  rows.push_back(guarded("weighted monomial count exceeds theta(2-theta)d^2/(2k)", "", [&](Law& law) {
    for (std::uint32_t k = 1; k < 30; ++k) {
      for (std::uint32_t d = k + 1; d <= 30; ++d) {
        for (std::uint32_t tenths = 1; tenths <= 10; ++tenths) {
          const Rational theta(tenths, 10);
          const Rational lhs(count_weighted_monomials(k, d, theta));
          const Rational rhs = theta * (2 - theta) * d * d / (2 * k);
          law.check(lhs > rhs, [&] {
            return "k=" + std::to_string(k) + " d=" + std::to_string(d) + " theta=" + to_string(theta);
          });
        }
      }
    }
  }));

  rows.push_back(guarded("Gaussian elimination kernel and rank", "", [&](Law& law) {
    Rng rng(o.seed, kElimination);
    const std::uint32_t qs[] = {2, 3, 4, 5, 7, 8, 9};
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const std::uint32_t q = qs[rng.uniform(7)];
      const FieldSpec f = parse_field(std::to_string(q));
      const std::size_t rows_ = 1 + rng.uniform(8), cols = 1 + rng.uniform(8);
      Matrix a(f, rows_, cols);
      const bool sparse = rng.bernoulli(1, 2);
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (!sparse || rng.bernoulli(1, 3)) a.at(r, c) = static_cast<std::uint32_t>(rng.uniform(q));
        }
      }
      const auto basis = nullspace_basis(a);
      bool ok = rank(a) + basis.size() == cols && rank(a) == rank(transpose(a));
      for (const auto& v : basis) {
        for (const auto& x : a.apply(v)) ok = ok && x.is_zero();
      }
      law.check(ok, [&] { return "F_" + f.to_string() + " " + std::to_string(rows_) + "x" + std::to_string(cols); });
    }
  }));
}

void kakeya_rows(std::vector<SelftestRow>& rows, const SelftestOptions&) {
  rows.push_back(guarded("the full space is a Kakeya set (q^n <= 4096)", "", [&](Law& law) {
    for (std::uint32_t q = 2; q <= 4096; ++q) {
      std::uint32_t p = 2;
      while (q % p != 0) ++p;
      std::uint32_t e = 0, r = q;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      if (r != 1) continue;
      const FieldSpec f = field_make(p, e);
      std::uint64_t size = q;
      for (std::size_t n = 1; size <= 4096; ++n, size *= q) {
        law.check(is_kakeya(f, n, all_points(f, n)).is_kakeya,
                  [&] { return "q=" + std::to_string(q) + " n=" + std::to_string(n); });
      }
    }
  }));

  rows.push_back(guarded("minimal Kakeya sets meet the lower bound and are minimal", "", [&](Law& law) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
      const FieldSpec f = parse_field(std::to_string(q));
      std::uint64_t size = q;
      for (std::size_t n = 1; size <= 16; ++n, size *= q) {
        const auto res = exhaustive_min_kakeya(f, n);
        const auto describe = [&] { return "q=" + std::to_string(q) + " n=" + std::to_string(n); };
        bool ok = res.found && Rational(BigInt(res.set.size())) >= res.bounds.main &&
                  Rational(BigInt(res.set.size())) >= res.bounds.crude && is_kakeya(f, n, res.set).is_kakeya;
        for (std::size_t drop = 0; ok && drop < res.set.size(); ++drop) {
          auto smaller = res.set;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
          ok = !is_kakeya(f, n, smaller).is_kakeya;
        }
        law.check(ok, describe);
      }
    }
  }));

  rows.push_back(guarded("statistical Kakeya with lines reproduces the Kakeya bound", "", [&](Law& law) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      const FieldSpec f = parse_field(std::to_string(q));
      for (std::size_t n = 1; n <= 2; ++n) {
        const auto describe = [&] { return "q=" + std::to_string(q) + " n=" + std::to_string(n); };
        const auto full = stat_instance_from_lines(f, n, all_points(f, n));
        const auto rep = statistical_kakeya_check(full);
        law.check(rep.hypothesis_ok && rep.bound_holds && rep.bound == kakeya_lower_bounds(q, n).main &&
                      full.lambda == 1,
                  describe);
        std::uint64_t size = 1;
        for (std::size_t j = 0; j < n; ++j) size *= q;
        if (size <= 16) {
          const auto min = exhaustive_min_kakeya(f, n);
          const auto r2 = statistical_kakeya_check(stat_instance_from_lines(f, n, min.set));
          law.check(r2.hypothesis_ok && r2.bound_holds, describe);
        }
      }
    }
  }));
}

void merger_rows(std::vector<SelftestRow>& rows, const SelftestOptions& o) {
  const char* fields[] = {"4", "5", "7", "8", "16"};

  rows.push_back(guarded("the merger curve passes through every block", "", [&](Law& law) {
    Rng rng(o.seed, kNodes);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = parse_field(fields[rng.uniform(5)]);
      const std::size_t n = 1 + rng.uniform(3);
      const auto blocks = static_cast<std::uint32_t>(1 + rng.uniform(std::min<std::uint32_t>(f.q(), 4)));
      const MergerSpec ms = merger_make(f, n, blocks);
      std::vector<Point> x;
      for (std::uint32_t i = 0; i < blocks; ++i) x.push_back(random_point(f, n, rng));
      for (std::uint32_t i = 0; i < blocks; ++i) {
        law.check(f_dw(ms, x, ms.nodes[i]) == x[i], [&] { return "F_" + f.to_string() + " block " + std::to_string(i); });
      }
    }
  }));

  rows.push_back(guarded("the merger commutes with affine maps", "", [&](Law& law) {
    Rng rng(o.seed, kAffine);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = parse_field(fields[rng.uniform(5)]);
      const std::size_t n = 1 + rng.uniform(3);
      const auto blocks = static_cast<std::uint32_t>(1 + rng.uniform(std::min<std::uint32_t>(f.q(), 4)));
      const MergerSpec ms = merger_make(f, n, blocks);
      std::vector<std::vector<FieldElement>> a(n);
      for (auto& row : a) {
        for (std::size_t c = 0; c < n; ++c) row.push_back(field_sample(f, rng));
      }
      const Point shift = random_point(f, n, rng);
      const BlockMap linear = BlockMap::affine(a, Point(n, f.zero()));
      const BlockMap affine = BlockMap::affine(a, shift);
      std::vector<Point> x;
      for (std::uint32_t i = 0; i < blocks; ++i) x.push_back(random_point(f, n, rng));
      const FieldElement u = field_sample(f, rng);
      for (const BlockMap* map : {&linear, &affine}) {
        std::vector<Point> tx;
        for (const auto& xi : x) tx.push_back(map->apply(f, xi));
        law.check(f_dw(ms, tx, u) == map->apply(f, f_dw(ms, x, u)),
                  [&] { return "F_" + f.to_string() + " n=" + std::to_string(n); });
      }
    }
  }));

  rows.push_back(guarded("excess mass is zero iff every probability is at most 2^-m", "", [&](Law& law) {
    Rng rng(o.seed, kExcessMass);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const std::size_t u = 1 + rng.uniform(16);
      std::vector<std::uint64_t> counts(u);
      for (auto& c : counts) c = rng.uniform(5);
      counts[rng.uniform(u)] += 1;
      const Distribution p = Distribution::from_counts(counts);
      std::uint32_t bits = 0;
      while ((std::uint64_t{1} << (bits + 1)) <= u) ++bits;
      const auto m = static_cast<std::uint32_t>(rng.uniform(bits + 1));
      const Rational tau = dyadic_threshold(Rational(m));
      const bool zero = distance_to_min_entropy(p, tau) == 0;
      law.check(zero == (p.max_probability() <= tau), [&] { return "universe " + std::to_string(u); });
    }
  }));

  rows.push_back(guarded("statistical distance is a metric", "", [&](Law& law) {
    Rng rng(o.seed, kMetric);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const std::size_t u = 1 + rng.uniform(12);
      std::vector<Distribution> d;
      for (int j = 0; j < 3; ++j) {
        std::vector<std::uint64_t> counts(u);
        for (auto& c : counts) c = rng.uniform(6);
        counts[rng.uniform(u)] += 1;
        d.push_back(Distribution::from_counts(counts));
      }
      const Rational ab = statistical_distance(d[0], d[1]), ba = statistical_distance(d[1], d[0]);
      const Rational bc = statistical_distance(d[1], d[2]), ac = statistical_distance(d[0], d[2]);
      law.check(ab == ba && ab >= 0 && ab <= 1 && statistical_distance(d[0], d[0]) == 0 && ac <= ab + bc,
                [&] { return "universe " + std::to_string(u); });
    }
  }));

  for (std::size_t n : {1, 2}) {
    rows.push_back(guarded("merger output is 1/2-close to min-entropy 3n at q=64, n=" + std::to_string(n), "",
                           [&](Law& law) {
                             const auto v = verify_merger_theorem(Rational(1, 2), Rational(1, 2), 2, n,
                                                                  adversarial_family, o.jobs);
                             law.check(v.seed_bits == 6, [&] { return "d=" + std::to_string(v.seed_bits); });
                             for (const auto& r : v.results) {
                               law.check(r.within_eps,
                                         [&] { return r.source + " distance " + to_string(r.distance); });
                             }
                           }));
  }
}

RSInstance random_word(const FieldSpec& f, std::uint32_t k, std::uint32_t t, Rng& rng) {
  RSInstance inst{f, field_enumerate(f), {}, k, t};
  for (std::size_t i = 0; i < inst.alphas.size(); ++i) inst.betas.push_back(field_sample(f, rng));
  return inst;
}

void rs_rows(std::vector<SelftestRow>& rows, const SelftestOptions& o) {
  struct Config {
    std::uint32_t q, k, t;
  };
  const Config configs[] = {{5, 1, 3}, {7, 1, 4}, {7, 2, 5}};
  const Rational eps(1, 10);

  rows.push_back(guarded("list decoding equals exhaustive decoding", "", [&](Law& law) {
    Rng rng(o.seed, kRsEquivalence);
    for (const auto& c : configs) {
      const FieldSpec f = field_make(c.q, 1);
      for (std::uint32_t t = 0; t < o.trials / 4 + 1; ++t) {
        const RSInstance inst = random_word(f, c.k, c.t, rng);
        law.check(list_decode(inst, eps) == brute_force_decode(inst), [&] {
          std::string w;
          for (const auto& b : inst.betas) w += std::to_string(b.index());
          return "q=" + std::to_string(c.q) + " k=" + std::to_string(c.k) + " word " + w;
        });
      }
    }
  }));

  rows.push_back(guarded("list size is at most 2 gamma/(gamma^2 - R)", "", [&](Law& law) {
    Rng rng(o.seed, kRsEquivalence + 100);
    for (const auto& c : configs) {
      const FieldSpec f = field_make(c.q, 1);
      for (std::uint32_t t = 0; t < o.trials / 4 + 1; ++t) {
        const RSInstance inst = random_word(f, c.k, c.t, rng);
        const Rational bound = list_size_bound(inst.gamma(), inst.rate());
        law.check(Rational(BigInt(brute_force_decode(inst).size())) <= bound,
                  [&] { return "q=" + std::to_string(c.q) + " k=" + std::to_string(c.k); });
      }
    }
  }));

  rows.push_back(guarded("chosen decoding parameters are feasible", "", [&](Law& law) {
    for (std::uint32_t q : {5u, 7u, 8u, 9u, 11u}) {
      const FieldSpec f = parse_field(std::to_string(q));
      for (std::uint32_t k = 1; k < q; ++k) {
        for (std::uint32_t t = 1; t <= q; ++t) {
          RSInstance inst{f, field_enumerate(f), field_enumerate(f), k, t};
          const Rational g = inst.gamma();
          if (g * g <= inst.rate()) continue;
          for (const Rational& e : {Rational(1, 4), Rational(1, 10)}) {
            GSParams p;
            try {
              p = choose_params(inst, e);
            } catch (const Error& err) {
              if (err.code() == ErrorCode::kNoFeasibleM) continue;
              throw;
            }
            const std::uint64_t monomials = count_weighted_monomials_capped(k, p.d, p.ydeg_cap);
            law.check(std::uint64_t{p.m} * (p.m + 1) / 2 * q < monomials && t * p.m > p.d &&
                          p.ydeg_cap == static_cast<std::uint32_t>(floor(p.theta * p.d / k)),
                      [&] { return "q=" + std::to_string(q) + " k=" + std::to_string(k) + " t=" + std::to_string(t); });
          }
        }
      }
    }
  }));

  rows.push_back(guarded("Y-roots match exhaustive root search", "", [&](Law& law) {
    Rng rng(o.seed, kRoots);
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      const FieldSpec f = small_field(rng);
      const auto k = static_cast<std::uint32_t>(rng.uniform(3));
      MultiPoly q = random_poly(f, 2, 3, 1 + rng.uniform(4), rng);
      if (q.is_zero()) q = MultiPoly::constant(f, 2, f.one());
      const auto roots = static_cast<std::uint32_t>(rng.uniform(3));
      for (std::uint32_t r = 0; r < roots; ++r) {
        const MultiPoly g = random_poly(f, 1, k, k + 1, rng);
        MultiPoly lifted(f, 2);
        for (const auto& [e, c] : g.terms()) lifted.add_term({e[0], 0}, c);
        q *= MultiPoly::variable(f, 2, 1) - lifted;
      }
      law.check(y_roots(q, k, false) == y_roots_brute_force(q, k), [&] { return poly_detail(q) + " k=" + std::to_string(k); });
    }
  }));
}

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const SelftestRow& r) { return r.passed; });
}

SelftestReport run_selftest(const SelftestOptions& options) {
  const ModulusTable& table = options.table ? *options.table : ModulusTable::canonical();
  SelftestReport report;
  report.rows = field_rows(table);
  hasse_rows(report.rows, options);
  schwartz_zippel_rows(report.rows, options);
  interpolation_rows(report.rows, options);
  kakeya_rows(report.rows, options);
  merger_rows(report.rows, options);
  rs_rows(report.rows, options);
  return report;
}

}  // namespace mom
