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

#ifndef MOM_LINALG_H_
#define MOM_LINALG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mom/field.h"

namespace mom {

// Dense row-major matrix over F_q, entries stored as field indices.
class Matrix {
 public:
  Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
      : spec_(std::move(spec)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  FieldElement element(std::size_t r, std::size_t c) const { return spec_.element(at(r, c)); }
  void set(std::size_t r, std::size_t c, const FieldElement& v) { at(r, c) = v.index(); }

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// Row echelon form by Gaussian elimination, scanning columns left to right
// and taking the first row with a nonzero entry as pivot. Pivot rows are
// scaled to a leading 1.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[r] is row r's pivot column
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);

// A nonzero kernel vector, or nullopt when the kernel is trivial. The
// vector sets the first free column to 1 and every other free column to 0.
std::optional<std::vector<FieldElement>> nullspace_vector(const Matrix& m);

// One basis vector per free column, in column order.
std::vector<std::vector<FieldElement>> nullspace_basis(const Matrix& m);

}  // namespace mom

#endif  // MOM_LINALG_H_
