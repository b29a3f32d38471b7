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

// The only translation unit compiled with -mpclmul. Everything here is
// reached solely through the runtime cpu_has_clmul() dispatch.

#include <immintrin.h>
#include <wmmintrin.h>

#include "fpmul/detail/kernels_impl.hpp"

namespace fpmul::detail {

u128 HwClmulArch::clmul64(uint64_t a, uint64_t b) noexcept {
  const __m128i p = _mm_clmulepi64_si128(_mm_set_epi64x(0, static_cast<long long>(a)),
                                         _mm_set_epi64x(0, static_cast<long long>(b)), 0x00);
  return {static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p))),
          static_cast<uint64_t>(_mm_cvtsi128_si64(p))};
}

FPMUL_INSTANTIATE_KERNELS(HwClmulArch)

}  // namespace fpmul::detail
