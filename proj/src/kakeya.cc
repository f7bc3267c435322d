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

#include "mom/kakeya.h"

#include <algorithm>
#include <set>

#include "mom/interpolate.h"

namespace mom {

namespace {

constexpr std::uint64_t kMaxSpacePoints = 1u << 24;

std::uint64_t space_size(const FieldSpec& spec, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    total *= spec.q();
    if (total > kMaxSpacePoints) {
      throw Error(ErrorCode::kSearchSpaceTooLarge, "F_q^n has more than 2^24 points");
    }
  }
  return total;
}

void check_points(const FieldSpec& spec, std::size_t n, const std::vector<Point>& pts) {
  std::set<std::uint64_t> seen;
  for (const auto& a : pts) {
    if (a.size() != n) throw Error(ErrorCode::kDimensionMismatch, "point dimension != n");
    for (const auto& x : a) {
      if (x.spec() != spec) throw Error(ErrorCode::kSpecMismatch, "point outside the field");
    }
    if (!seen.insert(point_index(a)).second) {
      throw Error(ErrorCode::kInvalidParameters, "duplicate point " + to_string(a));
    }
  }
}

std::vector<bool> membership(const FieldSpec& spec, std::size_t n, const std::vector<Point>& pts) {
  std::vector<bool> in(space_size(spec, n), false);
  for (const auto& a : pts) in[point_index(a)] = true;
  return in;
}

// Index of a + t*b.
std::uint64_t shifted_index(const FieldSpec& f, const Point& a, const Point& b, std::uint32_t t) {
  std::uint64_t idx = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    idx = idx * f.q() + f.add(a[j].index(), f.mul(t, b[j].index()));
  }
  return idx;
}

bool line_inside(const FieldSpec& f, const std::vector<bool>& in, const Point& a, const Point& b) {
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    if (!in[shifted_index(f, a, b, t)]) return false;
  }
  return true;
}

std::vector<Point> sorted_by_index(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& x, const Point& y) { return point_index(x) < point_index(y); });
  return pts;
}

}  // namespace

std::vector<Point> canonical_directions(const FieldSpec& spec, std::size_t n) {
  std::vector<Point> out;
  const std::uint64_t total = space_size(spec, n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Point b = point_from_index(spec, n, idx);
    auto first = std::find_if(b.begin(), b.end(), [](const FieldElement& x) { return !x.is_zero(); });
    if (first->index() == 1) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Point> line_points(const Point& offset, const Point& direction) {
  std::vector<Point> out;
  const FieldSpec f = offset.front().spec();
  for (const auto& t : field_enumerate(f)) {
    Point x(offset.size());
    for (std::size_t j = 0; j < offset.size(); ++j) x[j] = offset[j] + t * direction[j];
    out.push_back(std::move(x));
  }
  return out;
}

KakeyaCheck is_kakeya(const FieldSpec& spec, std::size_t n, const std::vector<Point>& k) {
  check_points(spec, n, k);
  KakeyaCheck result;
  const auto dirs = canonical_directions(spec, n);
  if (k.empty()) {
    result.violating_direction = dirs.empty() ? Point(n, spec.zero()) : dirs.front();
    return result;
  }
  const auto in = membership(spec, n, k);
  const auto offsets = sorted_by_index(k);
  for (const auto& b : dirs) {
    const Point* found = nullptr;
    for (const auto& a : offsets) {
      if (line_inside(spec, in, a, b)) {
        found = &a;
        break;
      }
    }
    if (found == nullptr) {
      result.witnesses.clear();
      result.violating_direction = b;
      return result;
    }
    result.witnesses.push_back({b, *found});
  }
  result.is_kakeya = true;
  return result;
}

bool witnesses_contained(const KakeyaInstance& instance) {
  check_points(instance.spec, instance.n, instance.points);
  const auto in = membership(instance.spec, instance.n, instance.points);
  for (const auto& w : instance.witnesses) {
    if (w.direction.size() != instance.n || w.offset.size() != instance.n) {
      throw Error(ErrorCode::kDimensionMismatch, "witness dimension != n");
    }
    if (!line_inside(instance.spec, in, w.offset, w.direction)) return false;
  }
  return true;
}

KakeyaBounds kakeya_lower_bounds(std::uint32_t q, std::uint32_t n) {
  if (q < 2 || n < 1) throw Error(ErrorCode::kInvalidParameters, "need q >= 2 and n >= 1");
  KakeyaBounds b;
  b.crude = pow(Rational(q, 2), n);
  b.main = pow(Rational(BigInt(q) * q, BigInt(2) * q - 1), n);
  return b;
}

MinKakeyaResult exhaustive_min_kakeya(const FieldSpec& spec, std::size_t n,
                                      std::optional<std::size_t> size_cap) {
  if (n == 0) throw Error(ErrorCode::kInvalidParameters, "need n >= 1");
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    total *= spec.q();
    if (total > 16) {
      throw Error(ErrorCode::kSearchSpaceTooLarge, "exhaustive search needs q^n <= 16");
    }
  }
  MinKakeyaResult result;
  result.bounds = kakeya_lower_bounds(spec.q(), static_cast<std::uint32_t>(n));

  // Each direction's lines partition the space; K is Kakeya iff for every
  // direction one of its lines (as a bitmask) is a subset of K.
  std::vector<std::vector<std::uint32_t>> line_masks;
  for (const auto& b : canonical_directions(spec, n)) {
    std::set<std::uint32_t> masks;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Point a = point_from_index(spec, n, idx);
      std::uint32_t mask = 0;
      for (std::uint32_t t = 0; t < spec.q(); ++t) mask |= 1u << shifted_index(spec, a, b, t);
      masks.insert(mask);
    }
    line_masks.emplace_back(masks.begin(), masks.end());
  }
  auto kakeya_mask = [&](std::uint32_t set) {
    for (const auto& dir : line_masks) {
      bool ok = false;
      for (auto line : dir) {
        if ((line & set) == line) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  const std::size_t cap = std::min<std::uint64_t>(size_cap.value_or(total), total);
  // Every Kakeya set contains a whole line, so sizes below q are skipped.
  for (std::size_t size = spec.q(); size <= cap; ++size) {
    // Combinations of `size` indices in lexicographic order.
    std::vector<std::uint32_t> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<std::uint32_t>(i);
    while (true) {
      std::uint32_t mask = 0;
      for (auto c : comb) mask |= 1u << c;
      ++result.subsets_examined;
      if (kakeya_mask(mask)) {
        result.found = true;
        for (auto c : comb) result.set.push_back(point_from_index(spec, n, c));
        return result;
      }
      std::size_t i = size;
      while (i > 0 && comb[i - 1] == total - size + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return result;
}

HomogeneousVanishingReport homogeneous_vanishing_check(const KakeyaInstance& instance,
                                                       std::uint32_t l) {
  const std::uint32_t q = instance.spec.q();
  if (l == 0 || l % q != 0) {
    throw Error(ErrorCode::kInvalidParameters, "l must be a positive multiple of q");
  }
  return homogeneous_vanishing_check(instance, l, 2 * l - l / q, l * q - 1);
}

HomogeneousVanishingReport homogeneous_vanishing_check(const KakeyaInstance& instance,
                                                       std::uint32_t l, std::uint32_t m,
                                                       std::uint32_t d) {
  const FieldSpec& f = instance.spec;
  const std::uint32_t q = f.q();
  if (l == 0 || l % q != 0) {
    throw Error(ErrorCode::kInvalidParameters, "l must be a positive multiple of q");
  }
  if (m != 2 * l - l / q || d != l * q - 1) {
    throw Error(ErrorCode::kInvalidParameters, "need m = 2l - l/q and d = lq - 1");
  }
  check_points(f, instance.n, instance.points);
  if (!witnesses_contained(instance)) {
    throw Error(ErrorCode::kHypothesisViolation, "a witness line is not contained in K");
  }

  InterpolationProblem problem{f, instance.n, instance.points, m, TotalDegreeBasis{d}};
  MultiPoly p = vanishing_interpolation(problem, InterpolationOptions{true});
  MultiPoly top = homogeneous_part(p);

  const auto in = membership(f, instance.n, instance.points);
  // Directions with a full line inside K, closed under nonzero scaling.
  std::vector<bool> covered(in.size(), false);
  covered[0] = true;
  const auto everything = all_points(f, instance.n);
  for (const auto& b : canonical_directions(f, instance.n)) {
    bool has_line = false;
    for (const auto& a : instance.points) {
      if (line_inside(f, in, a, b)) {
        has_line = true;
        break;
      }
    }
    if (!has_line) continue;
    for (std::uint32_t c = 1; c < q; ++c) {
      Point scaled(b.size());
      for (std::size_t j = 0; j < b.size(); ++j) scaled[j] = f.element(c) * b[j];
      covered[point_index(scaled)] = true;
    }
  }

  HomogeneousVanishingReport report{l, m, d, p, top, {}, true, true};
  for (const auto& b : everything) {
    Multiplicity mu = multiplicity(top, b);
    const bool cov = covered[point_index(b)];
    const bool ok = mu >= Multiplicity(l);
    if (cov && !ok) report.claim_holds = false;
    if (!ok) report.all_points_hold = false;
    report.entries.push_back({b, mu, cov});
  }
  return report;
}

Rational statistical_kakeya_bound(std::uint32_t q, std::uint32_t n, const Rational& lambda,
                                  const Rational& eta, std::uint32_t curve_degree) {
  if (eta <= 0 || lambda <= 0) throw Error(ErrorCode::kInvalidParameters, "need lambda, eta > 0");
  const Rational lq = lambda * q;
  const Rational base = lq / (Rational(curve_degree) * (lq - 1) / (eta * q) + 1);
  return pow(base, n);
}

StatKakeyaReport statistical_kakeya_check(const StatKakeyaInstance& inst) {
  const FieldSpec& f = inst.spec;
  const std::uint32_t q = f.q();
  if (inst.eta * q <= inst.curve_degree) {
    throw Error(ErrorCode::kParameterViolation, "need eta*q > Lambda");
  }
  check_points(f, inst.n, inst.s);
  check_points(f, inst.n, inst.k);
  if (inst.curves.size() != inst.s.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "need one curve per point of S");
  }
  const Rational space = Rational(BigInt(space_size(f, inst.n)));
  if (Rational(inst.s.size()) != inst.lambda * space) {
    throw Error(ErrorCode::kHypothesisViolation, "|S| != lambda * q^n");
  }
  const auto in = membership(f, inst.n, inst.k);
  StatKakeyaReport report;
  for (std::size_t i = 0; i < inst.s.size(); ++i) {
    const Point& x = inst.s[i];
    const Curve& c = inst.curves[i];
    if (c.dimension() != inst.n || c.spec() != f) {
      throw Error(ErrorCode::kDimensionMismatch, "curve for " + to_string(x) + " has wrong shape");
    }
    if (c.degree().value_or(0) > inst.curve_degree) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "curve for " + to_string(x) + " has degree above Lambda");
    }
    bool passes = false;
    std::uint64_t hits = 0;
    for (const auto& t : field_enumerate(f)) {
      Point y = c.evaluate(t);
      if (y == x) passes = true;
      if (in[point_index(y)]) ++hits;
    }
    if (!passes) {
      throw Error(ErrorCode::kHypothesisViolation, "curve does not pass through " + to_string(x));
    }
    if (Rational(hits) < inst.eta * q) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "curve for " + to_string(x) + " meets K in only " + std::to_string(hits) +
                      " parameter values");
    }
    report.intersections.push_back(hits);
  }
  report.hypothesis_ok = true;
  report.bound = statistical_kakeya_bound(q, static_cast<std::uint32_t>(inst.n), inst.lambda,
                                          inst.eta, inst.curve_degree);
  report.set_size = inst.k.size();
  report.bound_holds = Rational(report.set_size) >= report.bound;
  return report;
}

StatKakeyaInstance stat_instance_from_lines(const FieldSpec& spec, std::size_t n,
                                            const std::vector<Point>& k) {
  check_points(spec, n, k);
  const auto in = membership(spec, n, k);
  const auto dirs = canonical_directions(spec, n);
  StatKakeyaInstance inst{spec, n, {}, {}, k, Rational(0), Rational(1), 1};
  for (const auto& x : sorted_by_index(k)) {
    for (const auto& b : dirs) {
      if (line_inside(spec, in, x, b)) {
        inst.s.push_back(x);
        inst.curves.push_back(Curve::line(x, b));
        break;
      }
    }
  }
  inst.lambda = Rational(inst.s.size()) / Rational(BigInt(in.size()));
  return inst;
}

}  // namespace mom
