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

#ifndef FPMUL_BUTTERFLY_HPP_
#define FPMUL_BUTTERFLY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fpmul/cantor.hpp"
#include "fpmul/exec.hpp"
#include "fpmul/gf.hpp"

namespace fpmul {

/// FFT-domain values (or, before the butterfly, novelpoly coefficients over
/// GF(2^m)); the length is always a power of two.
template <class F>
using EvalVec = std::vector<FieldElem<F>>;

/// Precomputed multipliers for one butterfly network of `layers` layers over
/// a coset base + V_layers. Layer i in {layers-1, ..., 0} has one multiplier
/// per block of 2^(i+1) elements:
///   multiplier(i, b) = s_i(base + blockbase(i, b))
/// evaluated via the Cantor shift and stored in polynomial representation, so
/// the hot loop performs no representation changes.
template <class F>
struct ButterflyPlan {
  unsigned layers = 0;
  CantorVec<F> base{};
  std::vector<typename F::value_type> mults;  // layer-major, layer layers-1 first

  size_t layer_offset(unsigned i) const { return (size_t{1} << (layers - 1 - i)) - 1; }
  FieldElem<F> multiplier(unsigned i, size_t block) const {
    return {mults[layer_offset(i) + block]};
  }
};

template <class F>
ButterflyPlan<F> plan_butterflies(unsigned layers, CantorVec<F> base);

/// In-place butterflies: v starts as novelpoly coefficients g_0..g_{2^l-1}
/// and ends as evaluations; entry i holds the value at base + i-bar (the
/// Cantor element with integer encoding i). Each butterfly is
/// h0 = p0 + s_i(alpha)*p1, h1 = h0 + p1. Throws on length mismatch.
template <class F>
void lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan,
                   ExecPolicy policy = ExecPolicy::kParallel,
                   size_t cache_elems = kDefaultButterflyCacheElems);

/// Exact inverse: layers in reverse order, each butterfly inverted as
/// p1 = h0 + h1, p0 = h0 + s_i(alpha)*p1.
template <class F>
void i_lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan,
                     ExecPolicy policy = ExecPolicy::kParallel,
                     size_t cache_elems = kDefaultButterflyCacheElems);

/// Term-by-term evaluation of sum_k g_k * X_k at one point, via subspace_eval
/// and gf_mul. Test oracle for the butterfly.
template <class F>
FieldElem<F> direct_eval(std::span<const FieldElem<F>> coeffs, CantorVec<F> pt);

namespace reference {

/// Plain layer-by-layer serial schedule, kept as the reference the optimized
/// kernels are checked against bit for bit.
template <class F>
void lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan);

template <class F>
void i_lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan);

/// Runs only layers hi_layer..lo_layer (forward order); exposes partial
/// networks for the encode-vs-virtual-layers equivalence checks.
template <class F>
void run_layers(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan, unsigned hi_layer,
                unsigned lo_layer);

}  // namespace reference

#define FPMUL_DECLARE_BUTTERFLY(F)                                                             \
  extern template ButterflyPlan<F> plan_butterflies<F>(unsigned, CantorVec<F>);                \
  extern template void lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&,      \
                                        ExecPolicy, size_t);                                   \
  extern template void i_lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&,    \
                                          ExecPolicy, size_t);                                 \
  extern template FieldElem<F> direct_eval<F>(std::span<const FieldElem<F>>, CantorVec<F>);    \
  namespace reference {                                                                        \
  extern template void lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&);     \
  extern template void i_lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&);   \
  extern template void run_layers<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&,         \
                                     unsigned, unsigned);                                      \
  }

FPMUL_DECLARE_BUTTERFLY(gf16)
FPMUL_DECLARE_BUTTERFLY(gf64)
FPMUL_DECLARE_BUTTERFLY(gf128)
#undef FPMUL_DECLARE_BUTTERFLY

}  // namespace fpmul

#endif  // FPMUL_BUTTERFLY_HPP_
