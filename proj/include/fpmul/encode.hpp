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

#ifndef FPMUL_ENCODE_HPP_
#define FPMUL_ENCODE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fpmul/bitpoly.hpp"
#include "fpmul/butterfly.hpp"
#include "fpmul/cantor.hpp"
#include "fpmul/exec.hpp"
#include "fpmul/gf.hpp"

namespace fpmul {

/// The evaluation coset base + V_l with base = v_{l+m/2}; n_p = 2^l values.
template <class F>
struct PartitionSpec {
  unsigned l = 0;
  CantorVec<F> base{};
  size_t n_p = 1;
};

/// Validates 0 <= l < m/2 (throws std::invalid_argument otherwise).
template <class F>
PartitionSpec<F> make_partition_spec(unsigned l);

/// The collapsed first log2(m) butterfly layers as an m x m bit matrix. Row j
/// is r_j, the product of the virtual-layer multipliers s_{l+k}(v_{l+m/2}) =
/// v_{m/2-k} selected by the bits of j; r_0 = 1. Holds the inverse matrix and
/// 4-bit M4R lookup tables for both directions. A singular matrix throws
/// std::runtime_error at construction (it would mean the field tables are
/// broken).
template <class F>
class EncodeMatrix {
 public:
  using value_type = typename F::value_type;
  static constexpr unsigned kChunkBits = 4;

  /// The shared immutable instance for this field.
  static const EncodeMatrix& get();

  EncodeMatrix();  // public so tests can build (and corrupt) private copies

  FieldElem<F> row(unsigned j) const { return {rows_[j]}; }
  FieldElem<F> inv_row(unsigned j) const { return {inv_rows_[j]}; }
  std::span<const value_type> rows() const { return rows_; }
  std::span<const value_type> inv_rows() const { return inv_rows_; }

  /// Table-driven product x * E (row convention: XOR of rows selected by x).
  FieldElem<F> m4r_mul(value_type x) const { return {table_product(tab_, x)}; }
  /// Table-driven product x * E^{-1}.
  FieldElem<F> m4r_mul_inv(value_type x) const { return {table_product(inv_tab_, x)}; }

  /// Test hook: flips one bit of one forward-table entry.
  void corrupt_for_test() { tab_[1] ^= detail::unit_bit<value_type>(0); }

 private:
  value_type table_product(const std::vector<value_type>& tab, value_type x) const;

  std::vector<value_type> rows_, inv_rows_;
  std::vector<value_type> tab_, inv_tab_;  // (m/4) chunks x 16 entries, contiguous per chunk
};

/// The enc step: A holds m*n_p novelpoly coefficient bits; output i is
/// the XOR of rows r_j over the set bits a_{j*n_p+i}, i.e. the first n_p
/// entries of the virtual first-l_m-layer butterfly. Throws when
/// A.bit_length() != m*n_p.
template <class F>
EvalVec<F> encode(const BitPoly& a, const PartitionSpec<F>& spec, const EncodeMatrix<F>& mat,
                  ExecPolicy policy = ExecPolicy::kParallel);

/// Exact inverse of encode (multiply by the inverse matrix, scatter back).
template <class F>
BitPoly decode(std::span<const FieldElem<F>> v, const PartitionSpec<F>& spec,
               const EncodeMatrix<F>& mat, ExecPolicy policy = ExecPolicy::kParallel);

/// In-place 64x64 bit-matrix transpose (divide-and-conquer on halves); the
/// building block for the gather/scatter between row-sliced coefficient bits
/// and m-bit column vectors.
void transpose64x64(uint64_t m[64]);

/// Enumerates the Frobenius partition at test scale: element j of the result
/// is phi_2^(applied j times)(Sigma) as Cantor encodings. Rejects fields with
/// m > 16 (the sets are only enumerable at test scale).
template <class F>
std::vector<std::vector<typename F::value_type>> enumerate_partition(const PartitionSpec<F>& spec);

namespace reference {

/// Scalar gather + naive row-XOR products; the oracle for the transpose/M4R
/// fast path.
template <class F>
EvalVec<F> encode(const BitPoly& a, const PartitionSpec<F>& spec, const EncodeMatrix<F>& mat);

}  // namespace reference

#define FPMUL_DECLARE_ENCODE(F)                                                                  \
  extern template PartitionSpec<F> make_partition_spec<F>(unsigned);                             \
  extern template class EncodeMatrix<F>;                                                         \
  extern template EvalVec<F> encode<F>(const BitPoly&, const PartitionSpec<F>&,                  \
                                       const EncodeMatrix<F>&, ExecPolicy);                      \
  extern template BitPoly decode<F>(std::span<const FieldElem<F>>, const PartitionSpec<F>&,      \
                                    const EncodeMatrix<F>&, ExecPolicy);                         \
  extern template std::vector<std::vector<typename F::value_type>> enumerate_partition<F>(       \
      const PartitionSpec<F>&);                                                                  \
  namespace reference {                                                                          \
  extern template EvalVec<F> encode<F>(const BitPoly&, const PartitionSpec<F>&,                  \
                                       const EncodeMatrix<F>&);                                  \
  }

FPMUL_DECLARE_ENCODE(gf16)
FPMUL_DECLARE_ENCODE(gf64)
FPMUL_DECLARE_ENCODE(gf128)
#undef FPMUL_DECLARE_ENCODE

}  // namespace fpmul

#endif  // FPMUL_ENCODE_HPP_
