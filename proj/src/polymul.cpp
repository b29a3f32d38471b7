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

#include "fpmul/polymul.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "fpmul/basis_convert.hpp"
#include "fpmul/detail/kernels.hpp"
#include "fpmul/encode.hpp"

namespace fpmul {
namespace {

unsigned log2_exact(size_t n) {
  unsigned l = 0;
  while ((size_t{1} << l) < n) ++l;
  return l;
}

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Partition constraints: l >= 0, l < m/2, and the length bound
// n < (m/2)*2^(m/2), the latter expressed as l + 1 < m/2 to stay in
// integer range.
bool field_supports(unsigned m, size_t n_bits) {
  if (n_bits < m) return false;
  const unsigned l = log2_exact(n_bits) - log2_exact(m);
  return l < m / 2 && l + 1 < m / 2;
}

struct StageTimer {
  explicit StageTimer(double* slot) : slot_(slot) {
    if (slot_) start_ = std::chrono::steady_clock::now();
  }
  ~StageTimer() {
    if (slot_)
      *slot_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  double* slot_;
  std::chrono::steady_clock::time_point start_;
};

template <class F>
const ButterflyPlan<F>& cached_plan(unsigned layers) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<ButterflyPlan<F>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[layers];
  if (!slot) {
    const auto spec = make_partition_spec<F>(layers);
    slot = std::make_unique<ButterflyPlan<F>>(plan_butterflies<F>(layers, spec.base));
  }
  return *slot;
}

// The full pipeline over one field: basis conversion, encode and butterfly
// on both inputs, pointwise products, then the reverse chain.
template <class F>
BitPoly run_pipeline(const BitPoly& a, const BitPoly& b, const MulPlan& plan,
                     const MulOptions& opts) {
  const auto& mat = EncodeMatrix<F>::get();
  const auto spec = make_partition_spec<F>(plan.l);
  const auto& bplan = cached_plan<F>(plan.l);
  StageSeconds* prof = opts.stage_seconds;

  auto transform_input = [&](const BitPoly& p) {
    BitPoly padded = p;
    padded.resize_bits(plan.n_bits);
    {
      StageTimer t(prof ? &prof->basiscvt : nullptr);
      basis_cvt(padded, opts.policy, p.bit_length());
    }
    EvalVec<F> ev;
    {
      StageTimer t(prof ? &prof->encode : nullptr);
      ev = encode<F>(padded, spec, mat, opts.policy);
    }
    {
      StageTimer t(prof ? &prof->butterfly : nullptr);
      lch_butterfly<F>(std::span<FieldElem<F>>(ev), bplan, opts.policy,
                       opts.butterfly_cache_elems);
    }
    return ev;
  };

  EvalVec<F> ea = transform_input(a);
  {
    EvalVec<F> eb = transform_input(b);
    StageTimer t(prof ? &prof->pointwise : nullptr);
    const bool parallel = opts.policy == ExecPolicy::kParallel;
#if FPMUL_HAVE_PCLMUL
    if (detail::cpu_has_clmul())
      detail::pointwise_kernel<F, detail::HwClmulArch>(ea.data(), eb.data(), ea.data(), ea.size(),
                                                       parallel);
    else
#endif
      detail::pointwise_kernel<F, detail::PortableArch>(ea.data(), eb.data(), ea.data(), ea.size(),
                                                        parallel);
  }
  {
    StageTimer t(prof ? &prof->ibutterfly : nullptr);
    i_lch_butterfly<F>(std::span<FieldElem<F>>(ea), bplan, opts.policy,
                       opts.butterfly_cache_elems);
  }
  BitPoly c;
  {
    StageTimer t(prof ? &prof->decode : nullptr);
    c = decode<F>(std::span<const FieldElem<F>>(ea), spec, mat, opts.policy);
  }
  {
    StageTimer t(prof ? &prof->ibasiscvt : nullptr);
    i_basis_cvt(c, opts.policy);
  }
  return c;
}

void accumulate_word_product(const BitPoly& a, const BitPoly& b, BitPoly& out) {
  const size_t wa = (a.bit_length() + 63) / 64, wb = (b.bit_length() + 63) / 64;
#if FPMUL_HAVE_PCLMUL
  if (detail::cpu_has_clmul()) {
    detail::naive_mul_words_kernel<detail::HwClmulArch>(a.word_data(), wa, b.word_data(), wb,
                                                        out.word_data());
    return;
  }
#endif
  detail::naive_mul_words_kernel<detail::PortableArch>(a.word_data(), wa, b.word_data(), wb,
                                                       out.word_data());
}

size_t product_bits(const BitPoly& a, const BitPoly& b) {
  if (a.bit_length() == 0 || b.bit_length() == 0) return 0;
  return a.bit_length() + b.bit_length() - 1;
}

// Karatsuba on equal power-of-two word counts; scratch holds 4n words.
void kara_words(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t n, uint64_t* scratch) {
  constexpr size_t kBaseWords = 16;
  if (n <= kBaseWords) {
    for (size_t i = 0; i < 2 * n; ++i) out[i] = 0;
#if FPMUL_HAVE_PCLMUL
    if (detail::cpu_has_clmul()) {
      detail::naive_mul_words_kernel<detail::HwClmulArch>(a, n, b, n, out);
      return;
    }
#endif
    detail::naive_mul_words_kernel<detail::PortableArch>(a, n, b, n, out);
    return;
  }
  const size_t h = n / 2;
  uint64_t* sa = scratch;
  uint64_t* sb = scratch + h;
  uint64_t* mid = scratch + 2 * h;
  uint64_t* rest = scratch + 4 * h;
  kara_words(a, b, out, h, rest);                  // low words
  kara_words(a + h, b + h, out + 2 * h, h, rest);  // high words
  for (size_t i = 0; i < h; ++i) {
    sa[i] = a[i] ^ a[h + i];
    sb[i] = b[i] ^ b[h + i];
  }
  kara_words(sa, sb, mid, h, rest);
  for (size_t i = 0; i < 2 * h; ++i) mid[i] ^= out[i] ^ out[2 * h + i];
  for (size_t i = 0; i < 2 * h; ++i) out[h + i] ^= mid[i];
}

}  // namespace

MulPlan plan_mul(size_t len_a_bits, size_t len_b_bits, FieldChoice field) {
  if (len_a_bits == 0 || len_b_bits == 0)
    throw std::invalid_argument("plan_mul: input lengths must be positive");
  const size_t max_len = len_a_bits > len_b_bits ? len_a_bits : len_b_bits;
  if (max_len > (size_t{1} << 62))
    throw std::invalid_argument("plan_mul: input length out of range");
  size_t n = next_pow2(2 * max_len);

  unsigned m = 0;
  switch (field) {
    case FieldChoice::kGF64:
      m = 64;
      break;
    case FieldChoice::kGF128:
      m = 128;
      break;
    case FieldChoice::kAuto:
      m = field_supports(64, n < 64 ? 64 : n) ? 64 : 128;
      break;
  }
  if (n < m) n = m;
  if (!field_supports(m, n))
    throw std::invalid_argument("plan_mul: length exceeds the field's supported bound");

  MulPlan plan;
  plan.n_bits = n;
  plan.log2_n = log2_exact(n);
  plan.field_degree = m;
  plan.log2_field_degree = m == 64 ? 6 : (m == 128 ? 7 : 4);
  plan.l = plan.log2_n - plan.log2_field_degree;
  plan.n_p = size_t{1} << plan.l;
  return plan;
}

BitPoly fp_polymul(const BitPoly& a, const BitPoly& b) { return fp_polymul(a, b, MulOptions{}); }

BitPoly fp_polymul(const BitPoly& a, const BitPoly& b, const MulOptions& opts) {
  const size_t out_bits = product_bits(a, b);
  if (out_bits == 0) return BitPoly{};

  const size_t max_len = a.bit_length() > b.bit_length() ? a.bit_length() : b.bit_length();
  if (opts.field == FieldChoice::kAuto && max_len < opts.fft_threshold_bits) {
    BitPoly c = karatsuba_mul(a, b);
    c.resize_bits(out_bits);
    return c;
  }

  const MulPlan plan = plan_mul(a.bit_length(), b.bit_length(), opts.field);
  BitPoly c = plan.field_degree == 64 ? run_pipeline<gf64>(a, b, plan, opts)
                                      : run_pipeline<gf128>(a, b, plan, opts);
  c.resize_bits(out_bits);
  return c;
}

template <class F>
EvalVec<F> pointwise_mul(std::span<const FieldElem<F>> u, std::span<const FieldElem<F>> v,
                         ExecPolicy policy) {
  if (u.size() != v.size()) throw std::invalid_argument("pointwise_mul: length mismatch");
  EvalVec<F> out(u.size());
  const bool parallel = policy == ExecPolicy::kParallel;
#if FPMUL_HAVE_PCLMUL
  if (detail::cpu_has_clmul()) {
    detail::pointwise_kernel<F, detail::HwClmulArch>(u.data(), v.data(), out.data(), u.size(),
                                                     parallel);
    return out;
  }
#endif
  detail::pointwise_kernel<F, detail::PortableArch>(u.data(), v.data(), out.data(), u.size(),
                                                    parallel);
  return out;
}

BitPoly naive_mul(const BitPoly& a, const BitPoly& b) {
  const size_t out_bits = product_bits(a, b);
  if (out_bits == 0) return BitPoly{};
  BitPoly out(((a.bit_length() + 63) / 64 + (b.bit_length() + 63) / 64) * 64);
  accumulate_word_product(a, b, out);
  out.resize_bits(out_bits);
  return out;
}

BitPoly karatsuba_mul(const BitPoly& a, const BitPoly& b) {
  const size_t out_bits = product_bits(a, b);
  if (out_bits == 0) return BitPoly{};
  const size_t wa = (a.bit_length() + 63) / 64, wb = (b.bit_length() + 63) / 64;
  const size_t n = next_pow2(wa > wb ? wa : wb);
  std::vector<uint64_t> pa(n, 0), pb(n, 0), prod(2 * n, 0), scratch(4 * n, 0);
  for (size_t i = 0; i < wa; ++i) pa[i] = a.word_data()[i];
  for (size_t i = 0; i < wb; ++i) pb[i] = b.word_data()[i];
  kara_words(pa.data(), pb.data(), prod.data(), n, scratch.data());
  BitPoly out(out_bits);
  const size_t out_words = out.word_count();
  for (size_t i = 0; i < out_words && i < 2 * n; ++i) out.word_data()[i] = prod[i];
  out.resize_bits(out_bits);
  return out;
}

template <class F>
bool frobenius_value_check(const BitPoly& a, FieldElem<F> pt) {
  auto horner = [&](FieldElem<F> x) {
    FieldElem<F> acc{};
    const FieldElem<F> one{detail::unit_bit<typename F::value_type>(0)};
    for (size_t k = a.bit_length(); k-- > 0;) {
      acc = gf_mul(acc, x);
      if (a.bit(k)) acc = gf_add(acc, one);
    }
    return acc;
  };
  return horner(gf_sqr(pt)) == gf_sqr(horner(pt));
}

#define FPMUL_INSTANTIATE_POLYMUL(F)                                                            \
  template EvalVec<F> pointwise_mul<F>(std::span<const FieldElem<F>>,                           \
                                       std::span<const FieldElem<F>>, ExecPolicy);              \
  template bool frobenius_value_check<F>(const BitPoly&, FieldElem<F>);

FPMUL_INSTANTIATE_POLYMUL(gf16)
FPMUL_INSTANTIATE_POLYMUL(gf64)
FPMUL_INSTANTIATE_POLYMUL(gf128)

}  // namespace fpmul
