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

#ifndef MOM_SELFTEST_H_
#define MOM_SELFTEST_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mom/field.h"

namespace mom {

struct SelftestOptions {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  // Fields checked by the axiom rows; nullptr means the canonical table.
  const ModulusTable* table = nullptr;
  // Random instances per randomized law.
  std::uint32_t trials = 200;
};

struct SelftestRow {
  std::string statement;
  std::string key;  // "(p,e)" for field rows, else empty
  bool passed = false;
  std::uint64_t checked = 0;
  std::string detail;  // first counterexample, or empty
};

struct SelftestReport {
  std::vector<SelftestRow> rows;
  bool all_passed() const;
};

// Runs every invariant in a fixed order. The report depends only on the
// options' seed, trials and table, not on jobs.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace mom

#endif  // MOM_SELFTEST_H_
