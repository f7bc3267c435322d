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

// Acceptance suite: one PASS/FAIL line per criterion. The optional first
// argument is the path of the mom executable, used by criterion 10.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mom/distribution.h"
#include "mom/interpolate.h"
#include "mom/kakeya.h"
#include "mom/merger.h"
#include "mom/poly.h"
#include "mom/rng.h"
#include "mom/rs_decode.h"
#include "oracle.h"

namespace {

using namespace mom;

struct Outcome {
  bool pass = true;
  std::string summary;
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok) {
      if (failures == 0) first = describe();
      ++failures;
    }
  }
  std::string text() const {
    std::string s = std::to_string(checked) + " checks, " + std::to_string(failures) + " failures";
    return failures ? s + " (first: " + first + ")" : s;
  }
};

const std::uint32_t kQs[] = {2, 3, 5};

FieldSpec small_field(Rng& rng) { return field_make(kQs[rng.uniform(3)], 1); }

Exponents random_exponents(std::size_t n, std::uint32_t max_weight, Rng& rng) {
  Exponents e(n, 0);
  const auto w = rng.uniform(max_weight + 1);
  for (std::uint64_t k = 0; k < w; ++k) ++e[rng.uniform(n)];
  return e;
}

// R * prod of s factors (X_j - a_j); degree <= max_degree.
MultiPoly planted(const FieldSpec& f, const Point& a, std::uint32_t s, std::uint32_t max_degree, Rng& rng) {
  const std::size_t n = a.size();
  MultiPoly p = random_poly(f, n, max_degree - s, 1 + rng.uniform(8), rng);
  for (std::uint32_t t = 0; t < s; ++t) {
    const auto j = static_cast<std::size_t>(rng.uniform(n));
    p *= MultiPoly::variable(f, n, j) - MultiPoly::constant(f, n, a[j]);
  }
  return p;
}

std::string describe(const MultiPoly& p) { return "F_" + p.spec().to_string() + " P=" + to_string(p); }

constexpr std::uint32_t kInf = UINT32_MAX;

std::uint64_t mul_mult(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) return 0;
  if (a == kInf || b == kInf) return kInf;
  return std::uint64_t{a} * b;
}

Outcome criterion1() {
  const int trials = 1000;
  Tally t;
  Rng rng(1001, 1);
  for (int k = 0; k < trials; ++k) {
    const FieldSpec f = small_field(rng);
    const std::size_t n = 1 + rng.uniform(3);
    const Point a = random_point(f, n, rng);
    const MultiPoly p = planted(f, a, static_cast<std::uint32_t>(rng.uniform(4)), 8, rng);
    const MultiPoly q = random_poly(f, n, 8, 1 + rng.uniform(8), rng);
    const Exponents i = random_exponents(n, 8, rng), j = random_exponents(n, 4, rng);

    // The derivative itself, against expansion of P(X + Z).
    const MultiPoly di = hasse_derivative(p, i);
    t.check(di == oracle::hasse(p, i), [&] { return "definition " + describe(p); });

    // Additivity.
    t.check(hasse_derivative(p + q, i) == di + hasse_derivative(q, i), [&] { return "additivity " + describe(p); });

    // Homogeneity and the homogeneous part.
    if (!p.is_zero()) {
      const MultiPoly h = homogeneous_part(p);
      const MultiPoly hd = hasse_derivative(h, i);
      const std::uint32_t deg = *p.degree(), w = weight(i);
      t.check(hd.is_zero() || (hd.is_homogeneous() && *hd.degree() + w == deg),
              [&] { return "homogeneity " + describe(p); });
      const bool full = !di.is_zero() && *di.degree() + w == deg;
      t.check(full ? hd == homogeneous_part(di) : hd.is_zero(), [&] { return "top part " + describe(p); });
    }

    // Iterated derivatives.
    Exponents ij(n);
    for (std::size_t l = 0; l < n; ++l) ij[l] = i[l] + j[l];
    t.check(hasse_derivative(di, j) == vector_binomial(f, ij, i) * hasse_derivative(p, ij),
            [&] { return "iterated " + describe(p); });

    // Multiplicity of derivatives at the planted point.
    const std::uint32_t m = oracle::multiplicity(p, a);
    const std::uint32_t md = oracle::multiplicity(hasse_derivative(p, j), a);
    const std::uint32_t wj = weight(j);
    t.check(m == kInf || md >= (m > wj ? m - wj : 0), [&] { return "derivative multiplicity " + describe(p); });

    // Composition with a random polynomial map planted to be singular at c.
    const std::size_t n2 = 1 + rng.uniform(3);
    const Point c = random_point(f, n2, rng);
    const MultiPoly outer = planted(f, a, static_cast<std::uint32_t>(rng.uniform(3)), 4, rng);
    const auto s = static_cast<std::uint32_t>(rng.uniform(3));
    std::vector<MultiPoly> inner, centered;
    for (std::size_t l = 0; l < n; ++l) {
      MultiPoly g = planted(f, c, s, 2, rng);
      inner.push_back(MultiPoly::constant(f, n2, a[l]) + g);
      centered.push_back(g - MultiPoly::constant(f, n2, poly_eval(g, c)));
    }
    Point image;
    for (const auto& g : inner) image.push_back(poly_eval(g, c));
    std::uint32_t inner_mult = kInf;
    for (const auto& g : centered) inner_mult = std::min(inner_mult, oracle::multiplicity(g, c));
    const std::uint64_t rhs = mul_mult(oracle::multiplicity(outer, image), inner_mult);
    const std::uint32_t lhs = oracle::multiplicity(compose(outer, inner), c);
    t.check(lhs == kInf || lhs >= rhs, [&] { return "composition " + describe(outer); });

    // Restriction to a line through a.
    const Point b = random_point(f, n, rng);
    const FieldElement t0 = field_sample(f, rng);
    Point start(n);
    for (std::size_t l = 0; l < n; ++l) start[l] = a[l] - t0 * b[l];
    const MultiPoly line = restrict_to_line(p, start, b);
    const MultiPoly tvar = MultiPoly::variable(f, 1, 0);
    std::vector<MultiPoly> comps;
    for (std::size_t l = 0; l < n; ++l) comps.push_back(MultiPoly::constant(f, 1, start[l]) + tvar * b[l]);
    t.check(line == compose(p, comps), [&] { return "line polynomial " + describe(p); });
    const std::uint32_t ml = oracle::multiplicity(line, {t0});
    t.check(ml == kInf || (m != kInf && ml >= m), [&] { return "line restriction " + describe(p); });
  }
  return {t.failures == 0, std::to_string(trials) + " instances per law, " + t.text()};
}

Outcome criterion2() {
  Tally t;
  Rng rng(1002, 1);
  std::uint64_t high_degree = 0, tight = 0;
  const int trials = 1000;
  for (int k = 0; k < trials; ++k) {
    const FieldSpec f = small_field(rng);
    const std::size_t n = 1 + rng.uniform(3);
    const Point a = random_point(f, n, rng);
    const MultiPoly p = planted(f, a, static_cast<std::uint32_t>(rng.uniform(6)), 8, rng);
    if (p.is_zero()) continue;
    const std::uint32_t deg = *p.degree();
    std::uint64_t bound = deg;
    for (std::size_t j = 1; j < n; ++j) bound *= f.q();
    const std::uint64_t mass = multiplicity_mass(p, field_enumerate(f));
    if (k % 10 == 0) t.check(mass == oracle::mass(p), [&] { return "mass oracle " + describe(p); });
    t.check(mass <= bound, [&] { return describe(p) + " mass " + std::to_string(mass); });
    high_degree += deg > f.q();
    tight += mass == bound;
  }
  const FieldSpec f3 = field_make(3, 1);
  const MultiPoly x1x2 = MultiPoly::variable(f3, 2, 0) * MultiPoly::variable(f3, 2, 1);
  const std::uint64_t mass = multiplicity_mass(x1x2, field_enumerate(f3));
  t.check(mass == 6 && *x1x2.degree() * 3 == 6, [&] { return "X1X2 mass " + std::to_string(mass); });
  return {t.failures == 0 && high_degree > 0,
          t.text() + "; " + std::to_string(high_degree) + " with deg(P) > q, " + std::to_string(tight) +
              " tight; X1X2 over F_3: mass " + std::to_string(mass) + " = bound 6"};
}

Outcome criterion3() {
  Tally t;
  Rng rng(1003, 1);
  for (int k = 0; k < 100; ++k) {
    const FieldSpec f = small_field(rng);
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
    const MultiPoly p = vanishing_interpolation(pr, InterpolationOptions{false});
    t.check(!p.is_zero() && *p.degree() <= d, [&] { return "zero or too large " + describe(p); });
    for (const auto& a : pr.points) {
      t.check(multiplicity(p, a) >= Multiplicity(m) && oracle::multiplicity(p, a) >= m,
              [&] { return describe(p) + " at " + to_string(a); });
    }
  }
  return {t.failures == 0, "100 problems, " + t.text()};
}

Outcome criterion4() {
  Tally t;
  std::string sizes;
  for (const auto& [q, n, need] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{{2, 2, 2}, {3, 2, 4}}) {
    const FieldSpec f = field_make(q, 1);
    const auto res = exhaustive_min_kakeya(f, n);
    const Rational crude = pow(Rational(q, 2), static_cast<unsigned>(n));
    const Rational main = pow(Rational(q * q, 2 * q - 1), static_cast<unsigned>(n));
    const std::size_t size = res.set.size();
    const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
    t.check(res.found && size >= need && Rational(size) >= crude && Rational(size) >= main &&
                static_cast<std::size_t>(ceil(main)) == need,
            [&] { return tag + " size " + std::to_string(size); });
    t.check(is_kakeya(f, n, res.set).is_kakeya && oracle::kakeya(f, n, res.set), [&] { return tag + " not Kakeya"; });
    for (std::size_t drop = 0; drop < size; ++drop) {
      auto smaller = res.set;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      t.check(!is_kakeya(f, n, smaller).is_kakeya && !oracle::kakeya(f, n, smaller),
              [&] { return tag + " still Kakeya without point " + std::to_string(drop); });
    }
    sizes += (sizes.empty() ? "" : ", ") + tag + ": min " + std::to_string(size) + " >= ceil(" + to_string(main) +
             ") = " + std::to_string(need);
  }
  return {t.failures == 0, sizes + "; " + t.text()};
}

Outcome criterion5() {
  Tally t;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const FieldSpec f = parse_field(std::to_string(q));
    for (std::size_t n = 1; n <= 3; ++n) {
      if (n == 3 && q > 4) continue;
      const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      const auto space = all_points(f, n);
      t.check(is_kakeya(f, n, space).is_kakeya, [&] { return tag + " full space not Kakeya"; });
      const auto inst = stat_instance_from_lines(f, n, space);
      t.check(inst.lambda == 1 && inst.eta == 1 && inst.curve_degree == 1, [&] { return tag + " parameters"; });
      const auto rep = statistical_kakeya_check(inst);
      const Rational expected = pow(Rational(q * q, 2 * q - 1), static_cast<unsigned>(n));
      t.check(rep.hypothesis_ok && rep.bound_holds && rep.bound == expected &&
                  rep.bound == kakeya_lower_bounds(q, static_cast<std::uint32_t>(n)).main,
              [&] { return tag + " bound " + to_string(rep.bound); });
    }
  }
  return {t.failures == 0, "full-space instances, lambda = eta = Lambda = 1; " + t.text()};
}

Outcome criterion6() {
  Tally t;
  std::string detail;
  for (std::size_t n : {1, 2}) {
    const auto start = std::chrono::steady_clock::now();
    const auto v = verify_merger_theorem(Rational(1, 2), Rational(1, 2), 2, n);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(v.seed_bits == 6 && v.threshold_bits == Rational(3 * n), [&] { return "d = " + std::to_string(v.seed_bits); });
    if (n == 2) t.check(secs < 60, [&] { return "n=2 took " + std::to_string(secs) + " s"; });

    // Recount each source directly from C = (1 - u) x_1 + u x_2.
    const FieldSpec f = field_make(2, 6);
    const MergerSpec ms = merger_make(f, n, 2);
    const auto family = adversarial_family(ms);
    t.check(family.size() == v.results.size(), [] { return "family size"; });
    Rational worst = 0;
    for (std::size_t s = 0; s < family.size(); ++s) {
      std::uint64_t space = 1;
      for (std::size_t j = 0; j < n; ++j) space *= 64;
      std::vector<std::uint64_t> counts(space, 0);
      for (std::uint64_t idx = 0; idx < space; ++idx) {
        const Point a = point_from_index(f, n, idx);
        std::vector<Point> x(2);
        for (std::uint32_t i = 0; i < 2; ++i) {
          x[i] = i == family[s].uniform_block ? a : family[s].maps[i].apply(f, a);
        }
        for (const auto& u : field_enumerate(f)) {
          Point c(n);
          for (std::size_t j = 0; j < n; ++j) c[j] = (f.one() - u) * x[0][j] + u * x[1][j];
          ++counts[point_index(c)];
        }
      }
      const Rational tau(1, BigInt(1) << (3 * n));
      Rational excess = 0;
      for (auto c : counts) {
        const Rational pr(c, space * 64);
        if (pr > tau) excess += pr - tau;
      }
      t.check(excess == v.results[s].distance && excess <= Rational(1, 2),
              [&] { return v.results[s].source + " distance " + to_string(excess); });
      worst = std::max(worst, excess);
    }
    detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": " +
              std::to_string(v.results.size()) + " sources, max distance " + to_string(worst);
  }
  return {t.failures == 0, "d=6, q=64; " + detail + "; " + t.text()};
}

struct RsRecord {
  Rational gamma, rate;
  std::size_t list_size;
};

std::vector<RsRecord> rs_records;

Outcome criterion7() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  auto run = [&](const RSInstance& inst) {
    const auto fast = list_decode(inst);
    const auto slow = brute_force_decode(inst);
    t.check(fast == slow, [&] {
      std::string w;
      for (const auto& b : inst.betas) w += std::to_string(b.index());
      return "q=" + std::to_string(inst.spec.q()) + " k=" + std::to_string(inst.k) + " word " + w;
    });
    rs_records.push_back({inst.gamma(), inst.rate(), slow.size()});
  };

  const FieldSpec f5 = field_make(5, 1);
  for (std::uint32_t w = 0; w < 3125; ++w) {
    RSInstance inst{f5, field_enumerate(f5), {}, 1, 3};
    for (std::uint32_t v = w, i = 0; i < 5; ++i, v /= 5) inst.betas.push_back(f5.element(v % 5));
    run(inst);
  }
  RSInstance worked{f5, field_enumerate(f5), {}, 1, 3};
  for (std::uint32_t b : {0, 1, 2, 0, 0}) worked.betas.push_back(f5.element(b));
  const auto list = list_decode(worked);
  t.check(list.size() == 2 && to_string(list[0]) == "0" && to_string(list[1]) == "1:1",
          [] { return "worked example"; });

  const FieldSpec f7 = field_make(7, 1);
  Rng rng(1007, 1);
  for (const auto& [k, agree] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 4}, {2, 5}}) {
    for (int trial = 0; trial < 1000; ++trial) {
      RSInstance inst{f7, field_enumerate(f7), {}, k, agree};
      for (int i = 0; i < 7; ++i) inst.betas.push_back(field_sample(f7, rng));
      run(inst);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(secs < 300, [&] { return "took " + std::to_string(secs) + " s"; });
  return {t.failures == 0, "3125 words q=5 k=1 t=3, 1000 words q=7 k=1 t=4, 1000 words q=7 k=2 t=5 (eps' = 1/4); "
                               "worked example {0, X}; " + t.text()};
}

Outcome criterion8() {
  Tally t;
  std::size_t largest = 0;
  for (const auto& r : rs_records) {
    t.check(r.gamma * r.gamma > r.rate && Rational(r.list_size) <= list_size_bound(r.gamma, r.rate),
            [&] { return "list of " + std::to_string(r.list_size) + " at gamma " + to_string(r.gamma); });
    largest = std::max(largest, r.list_size);
  }
  const Rational b = list_size_bound(Rational(3, 5), Rational(1, 5));
  t.check(b == Rational(15, 2) && b == 2 * Rational(3, 5) / (Rational(9, 25) - Rational(1, 5)),
          [&] { return "bound " + to_string(b); });
  return {t.failures == 0 && !rs_records.empty(), std::to_string(rs_records.size()) + " instances, largest list " +
                                                      std::to_string(largest) + "; bound(3/5, 1/5) = " + to_string(b) +
                                                      "; " + t.text()};
}

Outcome criterion9() {
  Tally t;
  for (std::uint32_t k = 1; k < 30; ++k) {
    for (std::uint32_t d = k + 1; d <= 30; ++d) {
      for (std::uint32_t tenths = 1; tenths <= 10; ++tenths) {
        const Rational theta(tenths, 10);
        const std::uint64_t n = count_weighted_monomials(k, d, theta);
        std::uint64_t direct = 0;
        for (std::uint32_t j = 0; Rational(j * k) <= theta * d; ++j) {
          if (k * j <= d) direct += d - k * j + 1;
        }
        t.check(n == direct && Rational(n) > theta * (2 - theta) * d * d / (2 * k), [&] {
          return "k=" + std::to_string(k) + " d=" + std::to_string(d) + " theta=" + to_string(theta);
        });
      }
    }
  }
  return {t.failures == 0, "1 <= k < d <= 30, theta in {1/10, ..., 1}; " + t.text()};
}

std::string capture(const std::string& cmd, int* status) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    *status = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int st = pclose(pipe);
  *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Outcome criterion10(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  Tally t;
  const std::vector<std::string> commands = {
      "sz-mass --field 3 --n 2 --poly 1:1,1",
      "kakeya-search --field 3 --n 2",
      "merger-verify --delta 1/2 --eps 1/2 --lambda 2 --n 2",
      "selftest --seed 20261015",
  };
  for (const auto& c : commands) {
    int s1 = 0, s2 = 0, s3 = 0;
    const std::string a = capture(cli + " --jobs 1 " + c, &s1);
    const std::string b = capture(cli + " --jobs 1 " + c, &s2);
    const std::string j = capture(cli + " --jobs 3 " + c, &s3);
    t.check(s1 == 0 && s2 == 0 && s3 == 0 && !a.empty() && a == b && a == j, [&] { return c; });
  }
  return {t.failures == 0, std::to_string(commands.size()) + " commands, two runs plus --jobs 3; " + t.text()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Hasse derivative laws", 30, criterion1},
      {2, "strengthened Schwartz-Zippel", 0, criterion2},
      {3, "interpolation existence", 60, criterion3},
      {4, "Kakeya bounds at desk scale", 120, criterion4},
      {5, "statistical Kakeya reduction", 0, criterion5},
      {6, "merger theorem at q = 64", 0, criterion6},
      {7, "RS decoder oracle equivalence", 300, criterion7},
      {8, "RS list-size theorem", 0, criterion8},
      {9, "weighted monomial count", 5, criterion9},
      {10, "determinism", 0, [&] { return criterion10(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error ") + std::string(e.name()) + ": " + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.pass = false;
      o.summary += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
    }
    failed += !o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ": " << o.summary
         << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all 10 criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
