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

// Template definitions for the Arch-parameterized kernels. Include only from
// a translation unit that explicitly instantiates them.

#ifndef FPMUL_DETAIL_KERNELS_IMPL_HPP_
#define FPMUL_DETAIL_KERNELS_IMPL_HPP_

#include "fpmul/detail/kernels.hpp"
#include "fpmul/detail/parallel.hpp"

namespace fpmul::detail {

// Loops shorter than this are not worth forking threads for.
inline constexpr size_t kParallelGrain = size_t{1} << 14;

template <class F, class Arch>
static inline void butterfly_block(FieldElem<F>* data, size_t start, size_t block_elems,
                                   const typename F::value_type* mults, unsigned top_layer,
                                   unsigned layers, bool inverse) {
  using Ops = FieldOps<F, Arch>;
  if (!inverse) {
    for (unsigned i = top_layer + 1; i-- > 0;) {
      const size_t half = size_t{1} << i;
      const size_t first_block = start >> (i + 1);
      const typename F::value_type* layer_mults = mults + ((size_t{1} << (layers - 1 - i)) - 1);
      for (size_t bb = 0; bb < block_elems >> (i + 1); ++bb) {
        const typename F::value_type w = layer_mults[first_block + bb];
        FieldElem<F>* p = data + start + (bb << (i + 1));
        for (size_t j = 0; j < half; ++j) {
          p[j].v ^= Ops::mul(w, p[j + half].v);
          p[j + half].v ^= p[j].v;
        }
      }
    }
  } else {
    for (unsigned i = 0; i <= top_layer; ++i) {
      const size_t half = size_t{1} << i;
      const size_t first_block = start >> (i + 1);
      const typename F::value_type* layer_mults = mults + ((size_t{1} << (layers - 1 - i)) - 1);
      for (size_t bb = 0; bb < block_elems >> (i + 1); ++bb) {
        const typename F::value_type w = layer_mults[first_block + bb];
        FieldElem<F>* p = data + start + (bb << (i + 1));
        for (size_t j = 0; j < half; ++j) {
          p[j + half].v ^= p[j].v;
          p[j].v ^= Ops::mul(w, p[j + half].v);
        }
      }
    }
  }
}

template <class F, class Arch>
static inline void butterfly_flat_layer(FieldElem<F>* data, size_t count,
                                        const typename F::value_type* mults, unsigned layers,
                                        unsigned i, bool inverse, bool parallel) {
  using Ops = FieldOps<F, Arch>;
  const size_t half = size_t{1} << i;
  const size_t pairs = count / 2;
  const typename F::value_type* layer_mults = mults + ((size_t{1} << (layers - 1 - i)) - 1);
  const bool go_wide = parallel && pairs >= kParallelGrain;
  par_for(go_wide, static_cast<long long>(pairs), [&](long long g) {
    const size_t b = static_cast<size_t>(g) >> i;
    const size_t j = static_cast<size_t>(g) & (half - 1);
    FieldElem<F>* p = data + (b << (i + 1)) + j;
    const typename F::value_type w = layer_mults[b];
    if (!inverse) {
      p[0].v ^= Ops::mul(w, p[half].v);
      p[half].v ^= p[0].v;
    } else {
      p[half].v ^= p[0].v;
      p[0].v ^= Ops::mul(w, p[half].v);
    }
  });
}

template <class F, class Arch>
void butterfly_kernel(FieldElem<F>* data, size_t count, const typename F::value_type* mults,
                      unsigned layers, bool inverse, size_t cache_elems, bool parallel) {
  if (layers == 0) return;
  // Blocks of 2^(i_cache+1) elements run all their remaining layers in one go.
  unsigned i_cache = 0;
  while (i_cache + 1 < layers && (size_t{2} << (i_cache + 1)) <= cache_elems) ++i_cache;
  const size_t block = size_t{1} << (i_cache + 1);
  const long long nblocks = static_cast<long long>(count / block);
  const bool block_par = parallel && nblocks > 1 && count >= kParallelGrain;
  if (!inverse) {
    for (unsigned i = layers; i-- > i_cache + 1;)
      butterfly_flat_layer<F, Arch>(data, count, mults, layers, i, false, parallel);
    par_for(block_par, nblocks, [&](long long b) {
      butterfly_block<F, Arch>(data, static_cast<size_t>(b) * block, block, mults, i_cache, layers,
                               false);
    });
  } else {
    par_for(block_par, nblocks, [&](long long b) {
      butterfly_block<F, Arch>(data, static_cast<size_t>(b) * block, block, mults, i_cache, layers,
                               true);
    });
    for (unsigned i = i_cache + 1; i < layers; ++i)
      butterfly_flat_layer<F, Arch>(data, count, mults, layers, i, true, parallel);
  }
}

template <class F, class Arch>
void pointwise_kernel(const FieldElem<F>* a, const FieldElem<F>* b, FieldElem<F>* out, size_t count,
                      bool parallel) {
  using Ops = FieldOps<F, Arch>;
  const bool go_wide = parallel && count >= kParallelGrain;
  par_for(go_wide, static_cast<long long>(count),
          [&](long long i) { out[i].v = Ops::mul(a[i].v, b[i].v); });
}

template <class Arch>
void naive_mul_words_kernel(const uint64_t* a, size_t wa, const uint64_t* b, size_t wb,
                            uint64_t* out) {
  for (size_t i = 0; i < wa; ++i) {
    const uint64_t x = a[i];
    if (!x) continue;
    for (size_t j = 0; j < wb; ++j) {
      const u128 p = Arch::clmul64(x, b[j]);
      out[i + j] ^= p.lo;
      out[i + j + 1] ^= p.hi;
    }
  }
}

#define FPMUL_INSTANTIATE_KERNELS(Arch)                                                           \
  template void butterfly_kernel<gf16, Arch>(FieldElem<gf16>*, size_t, const gf16::value_type*,   \
                                             unsigned, bool, size_t, bool);                       \
  template void butterfly_kernel<gf64, Arch>(FieldElem<gf64>*, size_t, const gf64::value_type*,   \
                                             unsigned, bool, size_t, bool);                       \
  template void butterfly_kernel<gf128, Arch>(FieldElem<gf128>*, size_t,                          \
                                              const gf128::value_type*, unsigned, bool, size_t,   \
                                              bool);                                              \
  template void pointwise_kernel<gf16, Arch>(const FieldElem<gf16>*, const FieldElem<gf16>*,      \
                                             FieldElem<gf16>*, size_t, bool);                     \
  template void pointwise_kernel<gf64, Arch>(const FieldElem<gf64>*, const FieldElem<gf64>*,      \
                                             FieldElem<gf64>*, size_t, bool);                     \
  template void pointwise_kernel<gf128, Arch>(const FieldElem<gf128>*, const FieldElem<gf128>*,   \
                                              FieldElem<gf128>*, size_t, bool);                   \
  template void naive_mul_words_kernel<Arch>(const uint64_t*, size_t, const uint64_t*, size_t,    \
                                             uint64_t*);

}  // namespace fpmul::detail

#endif  // FPMUL_DETAIL_KERNELS_IMPL_HPP_
