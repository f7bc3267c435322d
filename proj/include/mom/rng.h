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

#ifndef MOM_RNG_H_
#define MOM_RNG_H_

#include <cstdint>

namespace mom {

// SplitMix64 (Steele, Lea, Flood 2014) driven as a counter-based
// generator: the n-th output of stream s under seed k is mix(base + n*G)
// where base = mix(k ^ mix(s)) and G is the 64-bit golden-ratio gamma.
// Independent trials use independent streams of one seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return uniform(den) < num; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t counter_;
};

}  // namespace mom

#endif  // MOM_RNG_H_
