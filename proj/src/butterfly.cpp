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

#include "fpmul/butterfly.hpp"

#include <stdexcept>

#include "fpmul/detail/kernels.hpp"

namespace fpmul {
namespace {

template <class F>
void check_size(std::span<const FieldElem<F>> v, const ButterflyPlan<F>& plan) {
  if (v.size() != size_t{1} << plan.layers)
    throw std::invalid_argument("lch_butterfly: vector length does not match plan");
}

}  // namespace

template <class F>
ButterflyPlan<F> plan_butterflies(unsigned layers, CantorVec<F> base) {
  const auto& field = CantorField<F>::get();
  ButterflyPlan<F> plan;
  plan.layers = layers;
  plan.base = base;
  if (layers == 0) return plan;
  plan.mults.resize((size_t{1} << layers) - 1);
  using V = typename F::value_type;
  size_t pos = 0;
  for (unsigned i = layers; i-- > 0;) {
    const size_t blocks = size_t{1} << (layers - 1 - i);
    for (size_t b = 0; b < blocks; ++b) {
      // blockbase(i, b) has encoding b*2^(i+1); s_i shifts Cantor coordinates
      // right by i, so the multiplier is (base >> i) ^ 2b in Cantor form.
      const CantorVec<F> c{static_cast<V>(
          detail::value_shr(base.bits, i) ^ detail::from_low_word<V>(static_cast<uint64_t>(b) << 1))};
      plan.mults[pos++] = field.cantor_to_poly(c).v;
    }
  }
  return plan;
}

template <class F>
void lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan, ExecPolicy policy,
                   size_t cache_elems) {
  check_size<F>(v, plan);
  const bool parallel = policy == ExecPolicy::kParallel;
#if FPMUL_HAVE_PCLMUL
  if (detail::cpu_has_clmul()) {
    detail::butterfly_kernel<F, detail::HwClmulArch>(v.data(), v.size(), plan.mults.data(),
                                                     plan.layers, false, cache_elems, parallel);
    return;
  }
#endif
  detail::butterfly_kernel<F, detail::PortableArch>(v.data(), v.size(), plan.mults.data(),
                                                    plan.layers, false, cache_elems, parallel);
}

template <class F>
void i_lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan, ExecPolicy policy,
                     size_t cache_elems) {
  check_size<F>(v, plan);
  const bool parallel = policy == ExecPolicy::kParallel;
#if FPMUL_HAVE_PCLMUL
  if (detail::cpu_has_clmul()) {
    detail::butterfly_kernel<F, detail::HwClmulArch>(v.data(), v.size(), plan.mults.data(),
                                                     plan.layers, true, cache_elems, parallel);
    return;
  }
#endif
  detail::butterfly_kernel<F, detail::PortableArch>(v.data(), v.size(), plan.mults.data(),
                                                    plan.layers, true, cache_elems, parallel);
}

template <class F>
FieldElem<F> direct_eval(std::span<const FieldElem<F>> coeffs, CantorVec<F> pt) {
  const auto& field = CantorField<F>::get();
  FieldElem<F> acc{};
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == FieldElem<F>{}) continue;
    // X_k(pt) = product of s_i(pt) over the set bits i of k.
    FieldElem<F> term = coeffs[k];
    for (unsigned i = 0; i < 8 * sizeof(size_t); ++i) {
      if ((k >> i) & 1) {
        const FieldElem<F> si = field.cantor_to_poly(subspace_eval(i, pt));
        term = gf_mul(term, si);
      }
    }
    acc = gf_add(acc, term);
  }
  return acc;
}

namespace reference {

template <class F>
void run_layers(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan, unsigned hi_layer,
                unsigned lo_layer) {
  for (unsigned i = hi_layer + 1; i-- > lo_layer;) {
    const size_t half = size_t{1} << i;
    const size_t blocks = v.size() >> (i + 1);
    for (size_t b = 0; b < blocks; ++b) {
      const FieldElem<F> w = plan.multiplier(i, b);
      FieldElem<F>* p = v.data() + (b << (i + 1));
      for (size_t j = 0; j < half; ++j) {
        p[j] = gf_add(p[j], gf_mul(w, p[j + half]));
        p[j + half] = gf_add(p[j + half], p[j]);
      }
    }
  }
}

template <class F>
void lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan) {
  check_size<F>(v, plan);
  if (plan.layers) run_layers<F>(v, plan, plan.layers - 1, 0);
}

template <class F>
void i_lch_butterfly(std::span<FieldElem<F>> v, const ButterflyPlan<F>& plan) {
  check_size<F>(v, plan);
  for (unsigned i = 0; i < plan.layers; ++i) {
    const size_t half = size_t{1} << i;
    const size_t blocks = v.size() >> (i + 1);
    for (size_t b = 0; b < blocks; ++b) {
      const FieldElem<F> w = plan.multiplier(i, b);
      FieldElem<F>* p = v.data() + (b << (i + 1));
      for (size_t j = 0; j < half; ++j) {
        p[j + half] = gf_add(p[j + half], p[j]);
        p[j] = gf_add(p[j], gf_mul(w, p[j + half]));
      }
    }
  }
}

}  // namespace reference

#define FPMUL_INSTANTIATE_BUTTERFLY(F)                                                        \
  template ButterflyPlan<F> plan_butterflies<F>(unsigned, CantorVec<F>);                      \
  template void lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&,            \
                                 ExecPolicy, size_t);                                         \
  template void i_lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&,          \
                                   ExecPolicy, size_t);                                       \
  template FieldElem<F> direct_eval<F>(std::span<const FieldElem<F>>, CantorVec<F>);          \
  namespace reference {                                                                       \
  template void lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&);           \
  template void i_lch_butterfly<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&);         \
  template void run_layers<F>(std::span<FieldElem<F>>, const ButterflyPlan<F>&, unsigned,     \
                              unsigned);                                                      \
  }

FPMUL_INSTANTIATE_BUTTERFLY(gf16)
FPMUL_INSTANTIATE_BUTTERFLY(gf64)
FPMUL_INSTANTIATE_BUTTERFLY(gf128)

}  // namespace fpmul
