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

// Hot kernels, templated on an Arch policy supplying the carry-less 64x64
// multiply. Instantiated once against the portable multiplier and, on x86
// with PCLMULQDQ, once more in a translation unit built with -mpclmul.
// Both instantiations are bit-exact; dispatch happens per kernel call.

#ifndef FPMUL_DETAIL_KERNELS_HPP_
#define FPMUL_DETAIL_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

#include "fpmul/gf.hpp"

namespace fpmul::detail {

struct PortableArch {
  static u128 clmul64(uint64_t a, uint64_t b) noexcept { return clmul64_portable(a, b); }
};

// The definition lives in the -mpclmul translation unit; nothing outside it
// may call this member.
struct HwClmulArch {
  static u128 clmul64(uint64_t a, uint64_t b) noexcept;
};

// Modular reductions. These are plain shift/XOR folds and are shared by both
// arch instantiations, so the two paths agree bit for bit by construction of
// everything except the 64x64 product itself.

inline uint64_t gf64_reduce(u128 p) noexcept {
  const uint64_t hi = p.hi;
  uint64_t r = p.lo ^ hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
  const uint64_t o = (hi >> 63) ^ (hi >> 61) ^ (hi >> 60);
  return r ^ o ^ (o << 1) ^ (o << 3) ^ (o << 4);
}

inline u128 gf128_reduce(u128 hi, u128 lo) noexcept {
  lo ^= hi ^ (hi << 1) ^ (hi << 2) ^ (hi << 7);
  const u128 o = (hi >> 127) ^ (hi >> 126) ^ (hi >> 121);
  return lo ^ o ^ (o << 1) ^ (o << 2) ^ (o << 7);
}

inline uint16_t gf16_reduce(uint64_t p) noexcept {
  while (p >> 16) {
    const uint64_t h = p >> 16;
    p = (p & 0xFFFF) ^ h ^ (h << 2) ^ (h << 3) ^ (h << 5);
  }
  return static_cast<uint16_t>(p);
}

template <class F, class Arch>
struct FieldOps;

template <class Arch>
struct FieldOps<gf16, Arch> {
  static uint16_t mul(uint16_t a, uint16_t b) noexcept {
    return gf16_reduce(clmul64_portable(a, b).lo);
  }
  static uint16_t sqr(uint16_t a) noexcept { return mul(a, a); }
};

template <class Arch>
struct FieldOps<gf64, Arch> {
  static uint64_t mul(uint64_t a, uint64_t b) noexcept { return gf64_reduce(Arch::clmul64(a, b)); }
  static uint64_t sqr(uint64_t a) noexcept { return gf64_reduce(Arch::clmul64(a, a)); }
};

template <class Arch>
struct FieldOps<gf128, Arch> {
  static u128 mul(u128 a, u128 b) noexcept {
    // Karatsuba: 3 carry-less products for the 128x128 -> 256 multiply, then
    // a two-step fold.
    const u128 c0 = Arch::clmul64(a.lo, b.lo);
    const u128 c2 = Arch::clmul64(a.hi, b.hi);
    u128 c1 = Arch::clmul64(a.lo ^ a.hi, b.lo ^ b.hi);
    c1 ^= c0 ^ c2;
    const u128 lo{c0.hi ^ c1.lo, c0.lo};
    const u128 hi{c2.hi, c2.lo ^ c1.hi};
    return gf128_reduce(hi, lo);
  }
  static u128 sqr(u128 a) noexcept {
    const u128 s0 = Arch::clmul64(a.lo, a.lo);
    const u128 s1 = Arch::clmul64(a.hi, a.hi);
    return gf128_reduce(s1, s0);
  }
};

/// One pass of LCH butterflies. Layers run from `layers-1` down to 0
/// (forward) or 0 up to `layers-1` (inverse); the multiplier for layer i,
/// block b sits at mults[2^(layers-1-i) - 1 + b]. Large layers run
/// breadth-first; once a block fits in `cache_elems` elements, all its
/// remaining layers run before the next block is touched.
template <class F, class Arch>
void butterfly_kernel(FieldElem<F>* data, size_t count, const typename F::value_type* mults,
                      unsigned layers, bool inverse, size_t cache_elems, bool parallel);

template <class F, class Arch>
void pointwise_kernel(const FieldElem<F>* a, const FieldElem<F>* b, FieldElem<F>* out, size_t count,
                      bool parallel);

/// Schoolbook carry-less product of word blocks: out[0..wa+wb) ^= a * b.
template <class Arch>
void naive_mul_words_kernel(const uint64_t* a, size_t wa, const uint64_t* b, size_t wb,
                            uint64_t* out);

#define FPMUL_DECLARE_KERNELS(Arch)                                                               \
  extern template void butterfly_kernel<gf16, Arch>(FieldElem<gf16>*, size_t,                     \
                                                    const gf16::value_type*, unsigned, bool,      \
                                                    size_t, bool);                                \
  extern template void butterfly_kernel<gf64, Arch>(FieldElem<gf64>*, size_t,                     \
                                                    const gf64::value_type*, unsigned, bool,      \
                                                    size_t, bool);                                \
  extern template void butterfly_kernel<gf128, Arch>(FieldElem<gf128>*, size_t,                   \
                                                     const gf128::value_type*, unsigned, bool,    \
                                                     size_t, bool);                               \
  extern template void pointwise_kernel<gf16, Arch>(const FieldElem<gf16>*,                       \
                                                    const FieldElem<gf16>*, FieldElem<gf16>*,     \
                                                    size_t, bool);                                \
  extern template void pointwise_kernel<gf64, Arch>(const FieldElem<gf64>*,                       \
                                                    const FieldElem<gf64>*, FieldElem<gf64>*,     \
                                                    size_t, bool);                                \
  extern template void pointwise_kernel<gf128, Arch>(const FieldElem<gf128>*,                     \
                                                     const FieldElem<gf128>*, FieldElem<gf128>*,  \
                                                     size_t, bool);                               \
  extern template void naive_mul_words_kernel<Arch>(const uint64_t*, size_t, const uint64_t*,     \
                                                    size_t, uint64_t*);

FPMUL_DECLARE_KERNELS(PortableArch)
#if FPMUL_HAVE_PCLMUL
FPMUL_DECLARE_KERNELS(HwClmulArch)
#endif

}  // namespace fpmul::detail

#endif  // FPMUL_DETAIL_KERNELS_HPP_
