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

#ifndef FPMUL_EXEC_HPP_
#define FPMUL_EXEC_HPP_

#include <cstddef>

namespace fpmul {

/// Kernel scheduling policy. Parallel kernels split work over OpenMP threads
/// across disjoint index ranges and are bit-identical to the serial schedule.
enum class ExecPolicy {
  kSerial,
  kParallel,
};

/// Default butterfly batch size (field elements): all remaining layers of a
/// batch run before the next batch is touched once blocks fit this budget.
inline constexpr size_t kDefaultButterflyCacheElems = size_t{1} << 15;

}  // namespace fpmul

#endif  // FPMUL_EXEC_HPP_
