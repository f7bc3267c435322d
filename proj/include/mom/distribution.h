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

#ifndef MOM_DISTRIBUTION_H_
#define MOM_DISTRIBUTION_H_

#include <cstdint>
#include <map>
#include <vector>

#include "mom/rational.h"

namespace mom {

// Exact probability distribution over the outcomes {0, ..., universe-1}.
// Only outcomes with positive probability are stored.
class Distribution {
 public:
  // Throws kInvalidParameters unless probabilities are non-negative, sum to
  // exactly 1 and every outcome lies in the universe.
  Distribution(std::uint64_t universe_size, std::map<std::uint64_t, Rational> probabilities);

  // counts[x] / sum(counts); counts.size() is the universe size.
  static Distribution from_counts(const std::vector<std::uint64_t>& counts);
  static Distribution uniform(std::uint64_t universe_size);
  static Distribution point_mass(std::uint64_t universe_size, std::uint64_t outcome);

  std::uint64_t universe_size() const { return universe_size_; }
  const std::map<std::uint64_t, Rational>& support() const { return probabilities_; }
  Rational probability(std::uint64_t outcome) const;
  Rational max_probability() const;

 private:
  std::uint64_t universe_size_;
  std::map<std::uint64_t, Rational> probabilities_;
};

// Half the L1 distance; equal to the largest gap Pr[p in E] - Pr[r in E]
// over events E. Throws kUniverseMismatch.
Rational statistical_distance(const Distribution& p, const Distribution& r);

// H_inf(p) = -log2(max_x p(x)), kept as the exact maximum probability.
struct MinEntropy {
  Rational max_probability;
  double bits() const;
  // H_inf >= -log2(threshold), decided exactly.
  bool at_least(const Rational& threshold_probability) const {
    return max_probability <= threshold_probability;
  }
};

MinEntropy min_entropy(const Distribution& p);

// 2^(-bits) for a non-negative integer `bits`; throws kInvalidParameters
// for a fractional value, which has no exact rational threshold.
Rational dyadic_threshold(const Rational& bits);

// Minimum statistical distance from p to a distribution whose outcome
// probabilities are all <= tau (min-entropy >= -log2 tau):
// sum_x max(p(x) - tau, 0). Throws kUniverseTooSmall when universe*tau < 1,
// since no such distribution exists then.
Rational distance_to_min_entropy(const Distribution& p, const Rational& tau);

}  // namespace mom

#endif  // MOM_DISTRIBUTION_H_
