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

#include "mom/distribution.h"

#include <cmath>

#include "mom/error.h"

namespace mom {

Distribution::Distribution(std::uint64_t universe_size,
                           std::map<std::uint64_t, Rational> probabilities)
    : universe_size_(universe_size) {
  if (universe_size == 0) throw Error(ErrorCode::kInvalidParameters, "empty universe");
  Rational total = 0;
  for (auto& [x, pr] : probabilities) {
    if (x >= universe_size) throw Error(ErrorCode::kInvalidParameters, "outcome outside universe");
    if (pr < 0) throw Error(ErrorCode::kInvalidParameters, "negative probability");
    total += pr;
    if (pr > 0) probabilities_.emplace(x, pr);
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidParameters, "probabilities sum to " + to_string(total));
  }
}

Distribution Distribution::from_counts(const std::vector<std::uint64_t>& counts) {
  BigInt total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw Error(ErrorCode::kInvalidParameters, "all counts are zero");
  std::map<std::uint64_t, Rational> probs;
  for (std::uint64_t x = 0; x < counts.size(); ++x) {
    if (counts[x] > 0) probs.emplace(x, Rational(BigInt(counts[x]), total));
  }
  return Distribution(counts.size(), std::move(probs));
}

Distribution Distribution::uniform(std::uint64_t universe_size) {
  std::map<std::uint64_t, Rational> probs;
  for (std::uint64_t x = 0; x < universe_size; ++x) probs.emplace(x, Rational(1, universe_size));
  return Distribution(universe_size, std::move(probs));
}

Distribution Distribution::point_mass(std::uint64_t universe_size, std::uint64_t outcome) {
  return Distribution(universe_size, {{outcome, Rational(1)}});
}

Rational Distribution::probability(std::uint64_t outcome) const {
  auto it = probabilities_.find(outcome);
  return it == probabilities_.end() ? Rational(0) : it->second;
}

Rational Distribution::max_probability() const {
  Rational best = 0;
  for (const auto& [x, pr] : probabilities_) {
    if (pr > best) best = pr;
  }
  return best;
}

Rational statistical_distance(const Distribution& p, const Distribution& r) {
  if (p.universe_size() != r.universe_size()) {
    throw Error(ErrorCode::kUniverseMismatch, "distributions over different universes");
  }
  // Sum of positive parts of p - r, which equals half the L1 distance.
  Rational gap = 0;
  for (const auto& [x, px] : p.support()) {
    Rational diff = px - r.probability(x);
    if (diff > 0) gap += diff;
  }
  return gap;
}

double MinEntropy::bits() const {
  return -std::log2(static_cast<double>(max_probability));
}

MinEntropy min_entropy(const Distribution& p) { return MinEntropy{p.max_probability()}; }

Rational dyadic_threshold(const Rational& bits) {
  if (denominator(bits) != 1 || bits < 0) {
    throw Error(ErrorCode::kInvalidParameters,
                "min-entropy threshold " + to_string(bits) + " is not a non-negative integer");
  }
  const auto b = static_cast<unsigned>(numerator(bits));
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(2), b));
}

Rational distance_to_min_entropy(const Distribution& p, const Rational& tau) {
  if (tau <= 0) throw Error(ErrorCode::kInvalidParameters, "threshold probability must be positive");
  if (Rational(BigInt(p.universe_size())) * tau < 1) {
    throw Error(ErrorCode::kUniverseTooSmall,
                "universe of " + std::to_string(p.universe_size()) +
                    " outcomes cannot carry max probability " + to_string(tau));
  }
  Rational excess = 0;
  for (const auto& [x, px] : p.support()) {
    if (px > tau) excess += px - tau;
  }
  return excess;
}

}  // namespace mom
