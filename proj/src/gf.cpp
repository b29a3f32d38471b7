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

#include "fpmul/gf.hpp"

#include <stdexcept>

#include "fpmul/detail/kernels.hpp"

namespace fpmul {
namespace detail {

bool cpu_has_clmul() noexcept {
#if FPMUL_HAVE_PCLMUL && defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  static const bool have = __builtin_cpu_supports("pclmul");
  return have;
#else
  return false;
#endif
}

u128 clmul64_portable(uint64_t a, uint64_t b) noexcept {
  uint64_t lo = 0, hi = 0;
  for (unsigned i = 0; i < 64; ++i) {
    const uint64_t mask = ~((b >> i & 1) - 1);
    lo ^= (a << i) & mask;
    if (i) hi ^= (a >> (64 - i)) & mask;
  }
  return {hi, lo};
}

}  // namespace detail

namespace {

inline bool use_hw() {
  return detail::cpu_has_clmul();
}

}  // namespace

gf16::value_type gf16::mul(value_type a, value_type b) noexcept {
  return detail::FieldOps<gf16, detail::PortableArch>::mul(a, b);
}
gf16::value_type gf16::sqr(value_type a) noexcept {
  return detail::FieldOps<gf16, detail::PortableArch>::sqr(a);
}

gf64::value_type gf64::mul(value_type a, value_type b) noexcept {
#if FPMUL_HAVE_PCLMUL
  if (use_hw()) return detail::FieldOps<gf64, detail::HwClmulArch>::mul(a, b);
#endif
  return detail::FieldOps<gf64, detail::PortableArch>::mul(a, b);
}
gf64::value_type gf64::sqr(value_type a) noexcept {
#if FPMUL_HAVE_PCLMUL
  if (use_hw()) return detail::FieldOps<gf64, detail::HwClmulArch>::sqr(a);
#endif
  return detail::FieldOps<gf64, detail::PortableArch>::sqr(a);
}

gf128::value_type gf128::mul(value_type a, value_type b) noexcept {
#if FPMUL_HAVE_PCLMUL
  if (use_hw()) return detail::FieldOps<gf128, detail::HwClmulArch>::mul(a, b);
#endif
  return detail::FieldOps<gf128, detail::PortableArch>::mul(a, b);
}
gf128::value_type gf128::sqr(value_type a) noexcept {
#if FPMUL_HAVE_PCLMUL
  if (use_hw()) return detail::FieldOps<gf128, detail::HwClmulArch>::sqr(a);
#endif
  return detail::FieldOps<gf128, detail::PortableArch>::sqr(a);
}

unsigned frobenius_order_of_basis(unsigned i) {
  if (i == 0) throw std::invalid_argument("frobenius_order_of_basis: i must be positive (v_0 has order 1)");
  unsigned lg = 0;
  while ((2u << lg) <= i) ++lg;
  return 2u << lg;
}

}  // namespace fpmul
