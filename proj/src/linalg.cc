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

#include "mom/linalg.h"

#include <algorithm>

namespace mom {

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "vector length != columns");
  std::vector<FieldElement> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].spec() != spec_) throw Error(ErrorCode::kSpecMismatch, "vector over another field");
      acc = spec_.add(acc, spec_.mul(at(r, c), v[c].index()));
    }
    out.push_back(spec_.element(acc));
  }
  return out;
}

namespace {

// row_dst[c] -= factor * row_src[c] for c >= from.
void eliminate(const FieldSpec& f, std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
               std::uint32_t factor, std::size_t from) {
  if (f.e() == 1) {
    const std::uint64_t p = f.p();
    const std::uint64_t neg = p - factor;
    for (std::size_t c = from; c < dst.size(); ++c) {
      if (src[c] != 0) dst[c] = static_cast<std::uint32_t>((dst[c] + neg * src[c]) % p);
    }
    return;
  }
  for (std::size_t c = from; c < dst.size(); ++c) {
    if (src[c] != 0) dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
  }
}

std::vector<FieldElement> back_substitute(const Echelon& ech, std::size_t free_col) {
  const Matrix& m = ech.reduced;
  const FieldSpec& f = m.spec();
  std::vector<std::uint32_t> x(m.cols(), 0);
  x[free_col] = 1;
  for (std::size_t r = ech.rank(); r-- > 0;) {
    const std::size_t pc = ech.pivot_cols[r];
    std::uint32_t acc = 0;
    auto row = m.row(r);
    for (std::size_t c = pc + 1; c < m.cols(); ++c) {
      if (row[c] != 0 && x[c] != 0) acc = f.add(acc, f.mul(row[c], x[c]));
    }
    x[pc] = f.neg(acc);  // pivot entries are 1
  }
  std::vector<FieldElement> out;
  out.reserve(x.size());
  for (auto v : x) out.push_back(f.element(v));
  return out;
}

std::vector<std::size_t> free_columns(const Echelon& ech) {
  std::vector<bool> is_pivot(ech.reduced.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < is_pivot.size(); ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

}  // namespace

Echelon row_echelon(Matrix m) {
  const FieldSpec f = m.spec();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t pr = next;
    while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != next) {
      auto a = m.row(pr), b = m.row(next);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(next);
    const std::uint32_t scale = f.inv(prow[c]);
    for (std::size_t k = c; k < m.cols(); ++k) prow[k] = f.mul(prow[k], scale);
    for (std::size_t r = next + 1; r < m.rows(); ++r) {
      const std::uint32_t factor = m.at(r, c);
      if (factor != 0) eliminate(f, m.row(r), prow, factor, c);
    }
    pivots.push_back(c);
    ++next;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

std::optional<std::vector<FieldElement>> nullspace_vector(const Matrix& m) {
  Echelon ech = row_echelon(m);
  auto free = free_columns(ech);
  if (free.empty()) return std::nullopt;
  return back_substitute(ech, free.front());
}

std::vector<std::vector<FieldElement>> nullspace_basis(const Matrix& m) {
  Echelon ech = row_echelon(m);
  std::vector<std::vector<FieldElement>> out;
  for (auto c : free_columns(ech)) out.push_back(back_substitute(ech, c));
  return out;
}

}  // namespace mom
