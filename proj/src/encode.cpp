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

#include "fpmul/encode.hpp"

#include <stdexcept>

#include "fpmul/detail/bitmat.hpp"
#include "fpmul/detail/parallel.hpp"

namespace fpmul {

using detail::from_low_word;
using detail::test_bit;
using detail::unit_bit;

void transpose64x64(uint64_t m[64]) {
  // Swap the off-diagonal half blocks, then recurse into the halves; with
  // bit c of word r holding entry (r, c), the low-bit block of the high rows
  // trades places with the high-bit block of the low rows.
  uint64_t mask = 0x00000000FFFFFFFFull;
  for (unsigned j = 32; j != 0; j >>= 1, mask ^= mask << j) {
    for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
      const uint64_t t = ((m[k] >> j) ^ m[k + j]) & mask;
      m[k] ^= t << j;
      m[k + j] ^= t;
    }
  }
}

template <class F>
PartitionSpec<F> make_partition_spec(unsigned l) {
  if (l >= F::kDegree / 2) throw std::invalid_argument("PartitionSpec: l must satisfy l < m/2");
  PartitionSpec<F> spec;
  spec.l = l;
  spec.base = CantorVec<F>{unit_bit<typename F::value_type>(l + F::kDegree / 2)};
  spec.n_p = size_t{1} << l;
  return spec;
}

template <class F>
EncodeMatrix<F>::EncodeMatrix() {
  constexpr unsigned m = F::kDegree;
  const auto& field = CantorField<F>::get();

  // Row j collapses the first log2(m) virtual layers for input a_{j*n_p+i}:
  // the product of the layer multipliers s_{l+k}(v_{l+m/2}) = v_{m/2-k}
  // selected by the bits of j. The empty product gives r_0 = 1.
  rows_.resize(m);
  for (unsigned j = 0; j < m; ++j) {
    FieldElem<F> r{unit_bit<value_type>(0)};
    for (unsigned k = 0; k < F::kLogDegree; ++k)
      if ((j >> k) & 1) r = gf_mul(r, field.basis(m / 2 - k));
    rows_[j] = r.v;
  }

  inv_rows_.resize(m);
  if (!detail::bitmat_invert(rows_.data(), m, inv_rows_.data()))
    throw std::runtime_error("EncodeMatrix: matrix is singular (field construction bug)");

  auto build_tables = [&](const std::vector<value_type>& rows, std::vector<value_type>& tab) {
    const unsigned chunks = m / kChunkBits;
    tab.assign(size_t{chunks} * 16, value_type{});
    for (unsigned c = 0; c < chunks; ++c) {
      value_type* t = tab.data() + size_t{c} * 16;
      for (unsigned bit = 0; bit < kChunkBits; ++bit)
        for (unsigned s = 0; s < (1u << bit); ++s)
          t[(1u << bit) + s] = t[s] ^ rows[c * kChunkBits + bit];
    }
  };
  build_tables(rows_, tab_);
  build_tables(inv_rows_, inv_tab_);
}

template <class F>
typename EncodeMatrix<F>::value_type EncodeMatrix<F>::table_product(
    const std::vector<value_type>& tab, value_type x) const {
  constexpr unsigned chunks = F::kDegree / kChunkBits;
  value_type acc{};
  for (unsigned c = 0; c < chunks; ++c) {
    const unsigned idx = static_cast<unsigned>(detail::low_word(detail::value_shr(x, c * kChunkBits))) & 0xF;
    acc ^= tab[size_t{c} * 16 + idx];
  }
  return acc;
}

template <class F>
const EncodeMatrix<F>& EncodeMatrix<F>::get() {
  static const EncodeMatrix instance;
  return instance;
}

namespace {

// Gathers 64 m-bit column vectors out of m row words (bit i of word j is
// coefficient a_{j*n_p + i0 + i}) via 64x64 transposes.
template <class F>
void gather_columns(const uint64_t* rows_at_i0, size_t row_stride_words, typename F::value_type out[64]) {
  constexpr unsigned m = F::kDegree;
  if constexpr (m == 64) {
    uint64_t t[64];
    for (unsigned j = 0; j < 64; ++j) t[j] = rows_at_i0[j * row_stride_words];
    transpose64x64(t);
    for (unsigned i = 0; i < 64; ++i) out[i] = t[i];
  } else if constexpr (m == 128) {
    uint64_t lo[64], hi[64];
    for (unsigned j = 0; j < 64; ++j) lo[j] = rows_at_i0[j * row_stride_words];
    for (unsigned j = 0; j < 64; ++j) hi[j] = rows_at_i0[(64 + j) * row_stride_words];
    transpose64x64(lo);
    transpose64x64(hi);
    for (unsigned i = 0; i < 64; ++i) out[i] = u128{hi[i], lo[i]};
  } else {
    uint64_t t[64] = {};
    for (unsigned j = 0; j < m; ++j) t[j] = rows_at_i0[j * row_stride_words];
    transpose64x64(t);
    for (unsigned i = 0; i < 64; ++i) out[i] = static_cast<typename F::value_type>(t[i]);
  }
}

template <class F>
void scatter_columns(const typename F::value_type in[64], uint64_t* rows_at_i0, size_t row_stride_words) {
  constexpr unsigned m = F::kDegree;
  if constexpr (m == 64) {
    uint64_t t[64];
    for (unsigned i = 0; i < 64; ++i) t[i] = in[i];
    transpose64x64(t);
    for (unsigned j = 0; j < 64; ++j) rows_at_i0[j * row_stride_words] = t[j];
  } else if constexpr (m == 128) {
    uint64_t lo[64], hi[64];
    for (unsigned i = 0; i < 64; ++i) {
      lo[i] = in[i].lo;
      hi[i] = in[i].hi;
    }
    transpose64x64(lo);
    transpose64x64(hi);
    for (unsigned j = 0; j < 64; ++j) rows_at_i0[j * row_stride_words] = lo[j];
    for (unsigned j = 0; j < 64; ++j) rows_at_i0[(64 + j) * row_stride_words] = hi[j];
  } else {
    uint64_t t[64];
    for (unsigned i = 0; i < 64; ++i) t[i] = detail::low_word(in[i]);
    transpose64x64(t);
    for (unsigned j = 0; j < m; ++j) rows_at_i0[j * row_stride_words] = t[j];
  }
}

template <class F>
void check_encode_length(const BitPoly& a, const PartitionSpec<F>& spec) {
  if (a.bit_length() != size_t{F::kDegree} * spec.n_p)
    throw std::invalid_argument("encode: input length must be m * n_p bits");
}

}  // namespace

template <class F>
EvalVec<F> encode(const BitPoly& a, const PartitionSpec<F>& spec, const EncodeMatrix<F>& mat,
                  ExecPolicy policy) {
  check_encode_length(a, spec);
  constexpr unsigned m = F::kDegree;
  const size_t n_p = spec.n_p;
  EvalVec<F> out(n_p);
  if (n_p < 64) {
    // Scalar gather for the tiny shapes (n_p below one machine word).
    for (size_t i = 0; i < n_p; ++i) {
      typename F::value_type x{};
      for (unsigned j = 0; j < m; ++j)
        if (a.bit(j * n_p + i)) x ^= unit_bit<typename F::value_type>(j);
      out[i] = mat.m4r_mul(x);
    }
    return out;
  }
  const uint64_t* words = a.word_data();
  const size_t stride = n_p / 64;  // words per coefficient row
  const long long batches = static_cast<long long>(n_p / 64);
  const bool parallel = policy == ExecPolicy::kParallel && n_p >= (size_t{1} << 12);
  detail::par_for(parallel, batches, [&](long long batch) {
    typename F::value_type cols[64];
    gather_columns<F>(words + batch, stride, cols);
    FieldElem<F>* o = out.data() + batch * 64;
    for (unsigned i = 0; i < 64; ++i) o[i] = mat.m4r_mul(cols[i]);
  });
  return out;
}

template <class F>
BitPoly decode(std::span<const FieldElem<F>> v, const PartitionSpec<F>& spec,
               const EncodeMatrix<F>& mat, ExecPolicy policy) {
  if (v.size() != spec.n_p) throw std::invalid_argument("decode: length must equal n_p");
  constexpr unsigned m = F::kDegree;
  const size_t n_p = spec.n_p;
  BitPoly a(size_t{m} * n_p);
  if (n_p < 64) {
    for (size_t i = 0; i < n_p; ++i) {
      const auto y = mat.m4r_mul_inv(v[i].v);
      for (unsigned j = 0; j < m; ++j)
        if (test_bit(y.v, j)) a.set_bit(j * n_p + i);
    }
    return a;
  }
  uint64_t* words = a.word_data();
  const size_t stride = n_p / 64;
  const long long batches = static_cast<long long>(n_p / 64);
  const bool parallel = policy == ExecPolicy::kParallel && n_p >= (size_t{1} << 12);
  detail::par_for(parallel, batches, [&](long long batch) {
    typename F::value_type cols[64];
    for (unsigned i = 0; i < 64; ++i) cols[i] = mat.m4r_mul_inv(v[batch * 64 + i].v).v;
    scatter_columns<F>(cols, words + batch, stride);
  });
  return a;
}

template <class F>
std::vector<std::vector<typename F::value_type>> enumerate_partition(const PartitionSpec<F>& spec) {
  if (F::kDegree > 16)
    throw std::invalid_argument("enumerate_partition: only the m=16 test field is enumerable");
  const auto& field = CantorField<F>::get();
  constexpr unsigned m = F::kDegree;
  std::vector<std::vector<typename F::value_type>> iterates(m);
  std::vector<typename F::value_type> cur(spec.n_p);
  for (size_t u = 0; u < spec.n_p; ++u)
    cur[u] = spec.base.bits ^ from_low_word<typename F::value_type>(u);
  for (unsigned j = 0; j < m; ++j) {
    iterates[j] = cur;
    for (auto& e : cur) {
      const FieldElem<F> p = field.cantor_to_poly(CantorVec<F>{e});
      e = field.poly_to_cantor(gf_sqr(p)).bits;
    }
  }
  return iterates;
}

namespace reference {

template <class F>
EvalVec<F> encode(const BitPoly& a, const PartitionSpec<F>& spec, const EncodeMatrix<F>& mat) {
  check_encode_length(a, spec);
  EvalVec<F> out(spec.n_p);
  for (size_t i = 0; i < spec.n_p; ++i) {
    FieldElem<F> acc{};
    for (unsigned j = 0; j < F::kDegree; ++j)
      if (a.bit(j * spec.n_p + i)) acc = gf_add(acc, mat.row(j));
    out[i] = acc;
  }
  return out;
}

}  // namespace reference

#define FPMUL_INSTANTIATE_ENCODE(F)                                                             \
  template PartitionSpec<F> make_partition_spec<F>(unsigned);                                   \
  template class EncodeMatrix<F>;                                                               \
  template EvalVec<F> encode<F>(const BitPoly&, const PartitionSpec<F>&, const EncodeMatrix<F>&, \
                                ExecPolicy);                                                    \
  template BitPoly decode<F>(std::span<const FieldElem<F>>, const PartitionSpec<F>&,            \
                             const EncodeMatrix<F>&, ExecPolicy);                               \
  template std::vector<std::vector<typename F::value_type>> enumerate_partition<F>(             \
      const PartitionSpec<F>&);                                                                 \
  namespace reference {                                                                         \
  template EvalVec<F> encode<F>(const BitPoly&, const PartitionSpec<F>&, const EncodeMatrix<F>&); \
  }

FPMUL_INSTANTIATE_ENCODE(gf16)
FPMUL_INSTANTIATE_ENCODE(gf64)
FPMUL_INSTANTIATE_ENCODE(gf128)

}  // namespace fpmul
