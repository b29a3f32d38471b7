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

#ifndef FPMUL_DETAIL_PARALLEL_HPP_
#define FPMUL_DETAIL_PARALLEL_HPP_

#include <cstddef>

namespace fpmul::detail {

/// Static-schedule loop over [0, n). The serial branch never enters the
/// OpenMP runtime, so cheap call sites can gate on `parallel` at no cost.
template <class Body>
inline void par_for(bool parallel, long long n, Body&& body) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (long long i = 0; i < n; ++i) body(i);
}

}  // namespace fpmul::detail

#endif  // FPMUL_DETAIL_PARALLEL_HPP_
