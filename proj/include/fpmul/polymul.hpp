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

#ifndef FPMUL_POLYMUL_HPP_
#define FPMUL_POLYMUL_HPP_

#include <cstddef>
#include <span>

#include "fpmul/bitpoly.hpp"
#include "fpmul/butterfly.hpp"
#include "fpmul/exec.hpp"
#include "fpmul/gf.hpp"

namespace fpmul {

enum class FieldChoice {
  kAuto,
  kGF64,
  kGF128,
};

/// Derived sizes for one multiplication. n is the padded product length in
/// bits (a power of two), l = log2(n) - log2(m), n_p = 2^l.
struct MulPlan {
  size_t n_bits = 0;
  unsigned log2_n = 0;
  unsigned field_degree = 0;      // m
  unsigned log2_field_degree = 0; // l_m
  unsigned l = 0;
  size_t n_p = 0;
};

/// Smallest legal plan for the given input bit lengths. Auto selection takes
/// m = 64 unless the length bound n < (m/2)*2^(m/2) or l < m/2 fails, then
/// m = 128. Throws std::invalid_argument when no field supports the size.
MulPlan plan_mul(size_t len_a_bits, size_t len_b_bits, FieldChoice field = FieldChoice::kAuto);

/// Optional per-stage wall-clock profile of one multiplication.
struct StageSeconds {
  double basiscvt = 0;
  double encode = 0;
  double butterfly = 0;
  double pointwise = 0;
  double ibutterfly = 0;
  double decode = 0;
  double ibasiscvt = 0;
};

struct MulOptions {
  FieldChoice field = FieldChoice::kAuto;
  /// Inputs shorter than this many bits take the Karatsuba path; the FFT
  /// pipeline's fixed overheads dominate below it. Correctness-neutral.
  size_t fft_threshold_bits = size_t{1} << 12;
  ExecPolicy policy = ExecPolicy::kParallel;
  size_t butterfly_cache_elems = kDefaultButterflyCacheElems;
  StageSeconds* stage_seconds = nullptr;
};

/// C = A*B over GF(2)[x]. Any input lengths; zero padding is internal. The
/// result length is len_a + len_b - 1 bits (0 when either input is empty)
/// with high zero bits cleared.
BitPoly fp_polymul(const BitPoly& a, const BitPoly& b);
BitPoly fp_polymul(const BitPoly& a, const BitPoly& b, const MulOptions& opts);

/// Elementwise field products; lengths must match.
template <class F>
EvalVec<F> pointwise_mul(std::span<const FieldElem<F>> u, std::span<const FieldElem<F>> v,
                         ExecPolicy policy = ExecPolicy::kParallel);

/// Schoolbook word-by-word carry-less product; exact for any sizes.
BitPoly naive_mul(const BitPoly& a, const BitPoly& b);

/// Karatsuba over word blocks with a schoolbook base case; exact. Serves as
/// the independent correctness reference for fp_polymul.
BitPoly karatsuba_mul(const BitPoly& a, const BitPoly& b);

/// Evaluates A (GF(2) coefficients) by Horner at pt and at pt^2 and reports
/// whether A(pt^2) == A(pt)^2, the Frobenius identity evaluation commutes
/// with.
template <class F>
bool frobenius_value_check(const BitPoly& a, FieldElem<F> pt);

#define FPMUL_DECLARE_POLYMUL(F)                                                                \
  extern template EvalVec<F> pointwise_mul<F>(std::span<const FieldElem<F>>,                    \
                                              std::span<const FieldElem<F>>, ExecPolicy);       \
  extern template bool frobenius_value_check<F>(const BitPoly&, FieldElem<F>);

FPMUL_DECLARE_POLYMUL(gf16)
FPMUL_DECLARE_POLYMUL(gf64)
FPMUL_DECLARE_POLYMUL(gf128)
#undef FPMUL_DECLARE_POLYMUL

}  // namespace fpmul

#endif  // FPMUL_POLYMUL_HPP_
