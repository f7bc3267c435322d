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

#ifndef MOM_MERGER_H_
#define MOM_MERGER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mom/distribution.h"
#include "mom/poly.h"
#include "mom/rational.h"

namespace mom {

// The curve merger over F_q^n with `blocks` inputs: nodes gamma_1..gamma_L
// and their Lagrange basis c_1(T)..c_L(T) of degree L - 1.
struct MergerSpec {
  FieldSpec spec;
  std::size_t n = 0;
  std::uint32_t blocks = 0;
  std::vector<FieldElement> nodes;
  std::vector<MultiPoly> basis;
};

// Nodes default to the first `blocks` field elements in enumeration order.
// Throws kTooFewFieldElements (q < blocks) or kDuplicateNodes.
MergerSpec merger_make(const FieldSpec& spec, std::size_t n, std::uint32_t blocks,
                       std::optional<std::vector<FieldElement>> nodes = std::nullopt);

// sum_i c_i(u) * x_i: the point at parameter u on the canonical curve
// through the blocks.
Point f_dw(const MergerSpec& ms, const std::vector<Point>& x, const FieldElement& u);

// ceil((1/delta) * log2(2*blocks/eps)), computed exactly. Throws
// kInvalidParameters unless 0 < delta <= 1, 0 < eps < 1, blocks >= 1.
std::uint32_t seed_length(const Rational& delta, const Rational& eps, std::uint32_t blocks);

// A deterministic map F_q^n -> F_q^n deriving a non-uniform block from the
// uniform one.
class BlockMap {
 public:
  enum class Kind { kIdentity, kConstant, kPermutation, kAffine, kTable };

  static BlockMap identity();
  static BlockMap constant(Point value);
  // Output coordinate j is input coordinate perm[j].
  static BlockMap permutation(std::vector<std::size_t> perm);
  // x -> A x + shift.
  static BlockMap affine(std::vector<std::vector<FieldElement>> matrix, Point shift);
  // table[point_index(x)] = point_index(output).
  static BlockMap table(std::vector<std::uint64_t> table);

  Kind kind() const { return kind_; }
  Point apply(const FieldSpec& spec, const Point& x) const;

 private:
  Kind kind_ = Kind::kIdentity;
  Point constant_;
  std::vector<std::size_t> perm_;
  std::vector<std::vector<FieldElement>> matrix_;
  Point shift_;
  std::vector<std::uint64_t> table_;
};

// A simple somewhere-random source: block `uniform_block` is uniform over
// F_q^n and block i is maps[i] applied to it (maps[uniform_block] unused).
struct SourceSpec {
  std::string name;
  std::uint32_t uniform_block = 0;
  std::vector<BlockMap> maps;
};

// For each choice of uniform block: identical blocks, constant zero,
// constant all-ones, cyclic coordinate shift, and a fixed affine image.
std::vector<SourceSpec> adversarial_family(const MergerSpec& ms);

// Exact law of f_dw(A, B), B uniform over F_q, by enumerating the q^n
// values of the uniform block and the q seeds. Outcomes are point indices.
Distribution exact_output_distribution(const MergerSpec& ms, const SourceSpec& src,
                                       std::size_t jobs = 1);

struct MergerSourceResult {
  std::string source;
  Rational distance;         // to min-entropy >= threshold_bits
  Rational max_probability;  // of the output
  bool within_eps = false;
};

struct MergerVerification {
  Rational delta;
  Rational eps;
  std::uint32_t blocks = 0;
  std::size_t n = 0;
  std::uint32_t seed_bits = 0;  // d; the field is F_{2^d}
  Rational threshold_bits;      // (1 - delta) * n * d
  std::vector<MergerSourceResult> results;
  bool all_within_eps = false;
};

using SourceFamily = std::function<std::vector<SourceSpec>(const MergerSpec&)>;

// Instantiates q = 2^seed_length(delta, eps, blocks) and checks every source
// of the family: distance_to_min_entropy(C, (1-delta) n log2 q) <= eps.
// Throws kEnumerationTooLarge when q^(n+1) > 10^7 and kInvalidParameters
// when the threshold is not an integer number of bits.
MergerVerification verify_merger_theorem(const Rational& delta, const Rational& eps,
                                         std::uint32_t blocks, std::size_t n,
                                         const SourceFamily& family = adversarial_family,
                                         std::size_t jobs = 1);

}  // namespace mom

#endif  // MOM_MERGER_H_
