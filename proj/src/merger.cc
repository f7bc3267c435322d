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

#include "mom/merger.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace mom {

MergerSpec merger_make(const FieldSpec& spec, std::size_t n, std::uint32_t blocks,
                       std::optional<std::vector<FieldElement>> nodes) {
  if (n == 0 || blocks == 0) throw Error(ErrorCode::kInvalidParameters, "need n >= 1 and blocks >= 1");
  if (spec.q() < blocks) {
    throw Error(ErrorCode::kTooFewFieldElements, "F_" + std::to_string(spec.q()) + " has fewer than " +
                                                     std::to_string(blocks) + " elements");
  }
  std::vector<FieldElement> gamma;
  if (nodes) {
    gamma = *nodes;
    if (gamma.size() != blocks) throw Error(ErrorCode::kDimensionMismatch, "need one node per block");
  } else {
    for (std::uint32_t i = 0; i < blocks; ++i) gamma.push_back(spec.element(i));
  }
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i].spec() != spec) throw Error(ErrorCode::kSpecMismatch, "node outside the field");
    for (std::size_t j = 0; j < i; ++j) {
      if (gamma[i] == gamma[j]) throw Error(ErrorCode::kDuplicateNodes, "interpolation nodes repeat");
    }
  }

  std::vector<MultiPoly> basis;
  const MultiPoly t = MultiPoly::variable(spec, 1, 0);
  for (std::uint32_t i = 0; i < blocks; ++i) {
    MultiPoly c = MultiPoly::constant(spec, 1, spec.one());
    for (std::uint32_t j = 0; j < blocks; ++j) {
      if (j == i) continue;
      c *= t - MultiPoly::constant(spec, 1, gamma[j]);
      c *= (gamma[i] - gamma[j]).inv();
    }
    basis.push_back(std::move(c));
  }

  MultiPoly sum(spec, 1);
  for (std::uint32_t i = 0; i < blocks; ++i) {
    sum += basis[i];
    for (std::uint32_t j = 0; j < blocks; ++j) {
      if (poly_eval(basis[i], {gamma[j]}) != (i == j ? spec.one() : spec.zero())) {
        throw Error(ErrorCode::kInternalNoSolution, "Lagrange basis fails at a node");
      }
    }
  }
  if (sum != MultiPoly::constant(spec, 1, spec.one())) {
    throw Error(ErrorCode::kInternalNoSolution, "Lagrange basis does not sum to 1");
  }
  return MergerSpec{spec, n, blocks, std::move(gamma), std::move(basis)};
}

Point f_dw(const MergerSpec& ms, const std::vector<Point>& x, const FieldElement& u) {
  if (x.size() != ms.blocks) throw Error(ErrorCode::kDimensionMismatch, "need one point per block");
  Point out(ms.n, ms.spec.zero());
  for (std::uint32_t i = 0; i < ms.blocks; ++i) {
    if (x[i].size() != ms.n) throw Error(ErrorCode::kDimensionMismatch, "block dimension != n");
    const FieldElement ci = poly_eval(ms.basis[i], {u});
    for (std::size_t j = 0; j < ms.n; ++j) out[j] += ci * x[i][j];
  }
  return out;
}

std::uint32_t seed_length(const Rational& delta, const Rational& eps, std::uint32_t blocks) {
  if (delta <= 0 || delta > 1 || eps <= 0 || eps >= 1 || blocks == 0) {
    throw Error(ErrorCode::kInvalidParameters, "need 0 < delta <= 1, 0 < eps < 1, blocks >= 1");
  }
  // Smallest integer d with d >= log2(r)/delta, r = 2*blocks/eps, i.e.
  // 2^(d * a) >= r^b for delta = a/b.
  const Rational r = Rational(2 * blocks) / eps;
  const BigInt a = numerator(delta), b = denominator(delta);
  const auto bb = static_cast<unsigned>(b);
  const BigInt rn = boost::multiprecision::pow(numerator(r), bb);
  const BigInt rd = boost::multiprecision::pow(denominator(r), bb);
  for (std::uint32_t d = 0;; ++d) {
    const auto exp = static_cast<unsigned>(a * d);
    if (boost::multiprecision::pow(BigInt(2), exp) * rd >= rn) return d;
  }
}

BlockMap BlockMap::identity() { return BlockMap(); }

BlockMap BlockMap::constant(Point value) {
  BlockMap m;
  m.kind_ = Kind::kConstant;
  m.constant_ = std::move(value);
  return m;
}

BlockMap BlockMap::permutation(std::vector<std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(ErrorCode::kInvalidParameters, "not a permutation");
    seen[p] = true;
  }
  BlockMap m;
  m.kind_ = Kind::kPermutation;
  m.perm_ = std::move(perm);
  return m;
}

BlockMap BlockMap::affine(std::vector<std::vector<FieldElement>> matrix, Point shift) {
  for (const auto& row : matrix) {
    if (row.size() != shift.size()) throw Error(ErrorCode::kDimensionMismatch, "affine map is not square");
  }
  if (matrix.size() != shift.size()) throw Error(ErrorCode::kDimensionMismatch, "affine map is not square");
  BlockMap m;
  m.kind_ = Kind::kAffine;
  m.matrix_ = std::move(matrix);
  m.shift_ = std::move(shift);
  return m;
}

BlockMap BlockMap::table(std::vector<std::uint64_t> table) {
  BlockMap m;
  m.kind_ = Kind::kTable;
  m.table_ = std::move(table);
  return m;
}

Point BlockMap::apply(const FieldSpec& spec, const Point& x) const {
  const std::size_t n = x.size();
  switch (kind_) {
    case Kind::kIdentity:
      return x;
    case Kind::kConstant:
      if (constant_.size() != n) throw Error(ErrorCode::kDimensionMismatch, "constant block dimension");
      return constant_;
    case Kind::kPermutation: {
      if (perm_.size() != n) throw Error(ErrorCode::kDimensionMismatch, "permutation length != n");
      Point out(n);
      for (std::size_t j = 0; j < n; ++j) out[j] = x[perm_[j]];
      return out;
    }
    case Kind::kAffine: {
      if (shift_.size() != n) throw Error(ErrorCode::kDimensionMismatch, "affine map dimension != n");
      Point out = shift_;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out[r] += matrix_[r][c] * x[c];
      }
      return out;
    }
    case Kind::kTable: {
      const std::uint64_t idx = point_index(x);
      if (idx >= table_.size()) throw Error(ErrorCode::kDimensionMismatch, "table too short for F_q^n");
      return point_from_index(spec, n, table_[idx]);
    }
  }
  return x;
}

std::vector<SourceSpec> adversarial_family(const MergerSpec& ms) {
  const FieldSpec& f = ms.spec;
  const std::size_t n = ms.n;
  std::vector<SourceSpec> out;
  if (ms.blocks == 1) {
    out.push_back({"uniform", 0, {BlockMap::identity()}});
    return out;
  }
  std::vector<std::size_t> shift(n);
  for (std::size_t j = 0; j < n; ++j) shift[j] = (j + 1) % n;
  // Lower bidiagonal with a non-trivial diagonal scalar; invertible.
  const FieldElement diag = f.element(std::min<std::uint32_t>(2, f.q() - 1));
  std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(n, f.zero()));
  for (std::size_t r = 0; r < n; ++r) {
    a[r][r] = diag;
    if (r > 0) a[r][r - 1] = f.one();
  }
  const Point zeros(n, f.zero()), ones(n, f.one());
  for (std::uint32_t i0 = 0; i0 < ms.blocks; ++i0) {
    const std::string tag = "[i0=" + std::to_string(i0) + "]";
    auto make = [&](const std::string& name, const BlockMap& map) {
      SourceSpec s{name + tag, i0, std::vector<BlockMap>(ms.blocks, map)};
      s.maps[i0] = BlockMap::identity();
      out.push_back(std::move(s));
    };
    make("identical", BlockMap::identity());
    make("constant-zero", BlockMap::constant(zeros));
    make("constant-ones", BlockMap::constant(ones));
    make("permutation", BlockMap::permutation(shift));
    make("affine", BlockMap::affine(a, ones));
  }
  return out;
}

Distribution exact_output_distribution(const MergerSpec& ms, const SourceSpec& src,
                                       std::size_t jobs) {
  const FieldSpec& f = ms.spec;
  const std::size_t n = ms.n;
  if (src.maps.size() != ms.blocks || src.uniform_block >= ms.blocks) {
    throw Error(ErrorCode::kDimensionMismatch, "source block count does not match the merger");
  }
  std::uint64_t space = 1;
  for (std::size_t j = 0; j < n; ++j) space *= f.q();
  const std::uint32_t q = f.q();

  // coeff[u][i] = c_i(u).
  std::vector<std::vector<std::uint32_t>> coeff(q, std::vector<std::uint32_t>(ms.blocks));
  for (std::uint32_t u = 0; u < q; ++u) {
    for (std::uint32_t i = 0; i < ms.blocks; ++i) {
      coeff[u][i] = poly_eval(ms.basis[i], {f.element(u)}).index();
    }
  }

  auto run = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
    std::vector<Point> blocks(ms.blocks);
    for (std::uint64_t x = begin; x < end; ++x) {
      const Point a = point_from_index(f, n, x);
      for (std::uint32_t i = 0; i < ms.blocks; ++i) {
        blocks[i] = i == src.uniform_block ? a : src.maps[i].apply(f, a);
        if (blocks[i].size() != n) throw Error(ErrorCode::kDimensionMismatch, "block map changed dimension");
      }
      for (std::uint32_t u = 0; u < q; ++u) {
        std::uint64_t idx = 0;
        for (std::size_t j = n; j-- > 0;) {
          std::uint32_t v = 0;
          for (std::uint32_t i = 0; i < ms.blocks; ++i) {
            v = f.add(v, f.mul(coeff[u][i], blocks[i][j].index()));
          }
          idx = idx * q + v;
        }
        ++counts[idx];
      }
    }
  };

  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, space));
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(space, 0));
  if (jobs == 1) {
    run(0, space, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] { run(space * w / jobs, space * (w + 1) / jobs, partial[w]); });
    }
    for (auto& t : workers) t.join();
  }
  std::vector<std::uint64_t> counts(space, 0);
  for (const auto& part : partial) {
    for (std::uint64_t x = 0; x < space; ++x) counts[x] += part[x];
  }
  return Distribution::from_counts(counts);
}

MergerVerification verify_merger_theorem(const Rational& delta, const Rational& eps,
                                         std::uint32_t blocks, std::size_t n,
                                         const SourceFamily& family, std::size_t jobs) {
  if (n == 0) throw Error(ErrorCode::kInvalidParameters, "need n >= 1");
  const std::uint32_t d = seed_length(delta, eps, blocks);
  if (d > 20) {
    throw Error(ErrorCode::kEnumerationTooLarge, "seed length " + std::to_string(d) + " needs q > 2^20");
  }
  const double work = std::pow(2.0, static_cast<double>(d) * static_cast<double>(n + 1));
  if (work > 1e7) {
    throw Error(ErrorCode::kEnumerationTooLarge, "q^(n+1) exceeds 10^7 for q = 2^" + std::to_string(d));
  }
  const FieldSpec f = field_make(2, std::max<std::uint32_t>(d, 1));
  MergerVerification out;
  out.delta = delta;
  out.eps = eps;
  out.blocks = blocks;
  out.n = n;
  out.seed_bits = d;
  out.threshold_bits = (1 - delta) * Rational(BigInt(n)) * Rational(BigInt(d));
  const Rational tau = dyadic_threshold(out.threshold_bits);
  const MergerSpec ms = merger_make(f, n, blocks);
  out.all_within_eps = true;
  for (const auto& src : family(ms)) {
    const Distribution c = exact_output_distribution(ms, src, jobs);
    MergerSourceResult r;
    r.source = src.name;
    r.distance = distance_to_min_entropy(c, tau);
    r.max_probability = c.max_probability();
    r.within_eps = r.distance <= eps;
    out.all_within_eps = out.all_within_eps && r.within_eps;
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace mom
