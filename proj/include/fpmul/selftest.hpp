// Copyright 2026 The fpmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FPMUL_SELFTEST_HPP_
#define FPMUL_SELFTEST_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fpmul {

enum class SelftestLevel {
  kQuick,  // sampled invariant suites
  kFull,   // adds the exhaustive m=16 structure suites and larger sweeps
};

struct SelftestOptions {
  SelftestLevel level = SelftestLevel::kQuick;
  uint64_t seed = 1;
  /// Fault-injection hook: runs the encode/decode checks against a corrupted
  /// private copy of the encode tables (must make the suite fail).
  bool corrupt_encode_matrix = false;
};

struct SelftestReport {
  bool ok = true;
  std::vector<std::string> failed_invariants;
};

/// Runs the invariant suites of all modules, logging one line per suite.
SelftestReport run_selftest(const SelftestOptions& opts, std::ostream& log);

}  // namespace fpmul

#endif  // FPMUL_SELFTEST_HPP_
