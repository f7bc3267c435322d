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

#include "mom/interpolate.h"

#include <set>

namespace mom {

namespace {

void validate(const InterpolationProblem& pr) {
  if (!pr.spec.valid()) throw Error(ErrorCode::kSpecMismatch, "problem has no field");
  if (pr.n == 0) throw Error(ErrorCode::kInvalidParameters, "need at least one variable");
  if (pr.m == 0) throw Error(ErrorCode::kInvalidParameters, "multiplicity must be >= 1");
  if (std::holds_alternative<WeightedDegreeBasis>(pr.basis)) {
    if (pr.n != 2) throw Error(ErrorCode::kDimensionMismatch, "weighted basis is bivariate");
    if (std::get<WeightedDegreeBasis>(pr.basis).k == 0) {
      throw Error(ErrorCode::kInvalidParameters, "weighted basis needs k >= 1");
    }
  }
  std::set<std::uint64_t> seen;
  for (const auto& a : pr.points) {
    if (a.size() != pr.n) throw Error(ErrorCode::kDimensionMismatch, "point dimension != n");
    for (const auto& x : a) {
      if (x.spec() != pr.spec) throw Error(ErrorCode::kSpecMismatch, "point outside the field");
    }
    if (!seen.insert(point_index(a)).second) {
      throw Error(ErrorCode::kInvalidParameters, "duplicate point " + to_string(a));
    }
  }
}

}  // namespace

BigInt count_total_degree_monomials(std::uint32_t n, std::uint32_t d) {
  return binomial(static_cast<unsigned long>(d) + n, n);
}

std::uint64_t count_weighted_monomials_capped(std::uint32_t k, std::uint32_t d,
                                              std::uint32_t ydeg_cap) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j <= ydeg_cap && k * j <= d; ++j) count += d - k * j + 1;
  return count;
}

std::uint64_t count_weighted_monomials(std::uint32_t k, std::uint32_t d, const Rational& theta) {
  if (k == 0 || k >= d) throw Error(ErrorCode::kInvalidParameters, "need 0 < k < d");
  if (theta < 0 || theta > 1) throw Error(ErrorCode::kInvalidParameters, "theta outside [0, 1]");
  const BigInt cap = floor(theta * d / k);
  return count_weighted_monomials_capped(k, d, static_cast<std::uint32_t>(cap));
}

std::vector<Exponents> basis_monomials(const InterpolationProblem& problem) {
  std::vector<Exponents> out;
  if (const auto* td = std::get_if<TotalDegreeBasis>(&problem.basis)) {
    for (std::uint32_t w = 0; w <= td->d; ++w) {
      for (auto& e : exponents_of_weight(problem.n, w)) out.push_back(std::move(e));
    }
    return out;
  }
  const auto& wd = std::get<WeightedDegreeBasis>(problem.basis);
  for (std::uint32_t w = 0; w <= wd.d; ++w) {
    for (auto& e : exponents_of_weight(2, w)) {
      const std::uint64_t i = e[0], j = e[1];
      if (j <= wd.ydeg_cap && i + wd.k * j <= wd.d) out.push_back(std::move(e));
    }
  }
  return out;
}

BigInt constraint_count(const InterpolationProblem& problem) {
  return binomial(problem.m + problem.n - 1, problem.n) * problem.points.size();
}

Matrix vanishing_constraints(const InterpolationProblem& problem) {
  validate(problem);
  const FieldSpec& f = problem.spec;
  const auto monomials = basis_monomials(problem);
  std::vector<Exponents> derivs;
  for (std::uint32_t w = 0; w < problem.m; ++w) {
    for (auto& e : exponents_of_weight(problem.n, w)) derivs.push_back(std::move(e));
  }
  Matrix mat(f, problem.points.size() * derivs.size(), monomials.size());
  std::uint32_t max_exp = 0;
  for (const auto& r : monomials) {
    for (auto x : r) max_exp = std::max(max_exp, x);
  }
  std::size_t row = 0;
  for (const auto& a : problem.points) {
    std::vector<std::vector<std::uint32_t>> powers(problem.n);
    for (std::size_t j = 0; j < problem.n; ++j) {
      powers[j].resize(max_exp + 1);
      powers[j][0] = 1;
      for (std::uint32_t k = 1; k <= max_exp; ++k) powers[j][k] = f.mul(powers[j][k - 1], a[j].index());
    }
    for (const auto& i : derivs) {
      for (std::size_t col = 0; col < monomials.size(); ++col) {
        const auto& r = monomials[col];
        std::uint32_t v = vector_binomial(f, r, i).index();
        for (std::size_t j = 0; j < problem.n && v != 0; ++j) v = f.mul(v, powers[j][r[j] - i[j]]);
        mat.at(row, col) = v;
      }
      ++row;
    }
  }
  return mat;
}

MultiPoly vanishing_interpolation(const InterpolationProblem& problem,
                                  const InterpolationOptions& options) {
  validate(problem);
  const auto monomials = basis_monomials(problem);
  const BigInt constraints = constraint_count(problem);
  if (BigInt(monomials.size()) <= constraints) {
    throw Error(ErrorCode::kUnsatisfiedCountHypothesis,
                "basis has " + std::to_string(monomials.size()) + " monomials but there are " +
                    constraints.str() + " vanishing constraints");
  }
  auto kernel = nullspace_vector(vanishing_constraints(problem));
  if (!kernel) {
    throw Error(ErrorCode::kInternalNoSolution, "constraint system has a trivial kernel");
  }
  MultiPoly p(problem.spec, problem.n);
  for (std::size_t col = 0; col < monomials.size(); ++col) p.add_term(monomials[col], (*kernel)[col]);
  if (p.is_zero()) throw Error(ErrorCode::kInternalNoSolution, "kernel vector is zero");
  if (options.verify) {
    for (const auto& a : problem.points) {
      if (multiplicity(p, a) < Multiplicity(problem.m)) {
        throw Error(ErrorCode::kInternalNoSolution,
                    "interpolant has multiplicity below m at " + to_string(a));
      }
    }
  }
  return p;
}

}  // namespace mom
