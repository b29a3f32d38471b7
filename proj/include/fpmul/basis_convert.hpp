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

#ifndef FPMUL_BASIS_CONVERT_HPP_
#define FPMUL_BASIS_CONVERT_HPP_

#include "fpmul/bitpoly.hpp"
#include "fpmul/exec.hpp"

namespace fpmul {

/// In-place conversion of a packed GF(2)[x] polynomial from the monomial
/// basis to the novelpoly basis over the Cantor construction: on return,
/// bit k is the coefficient of X_k, the product of the subspace polynomials
/// s_i selected by the bits of k. Pure XOR data flow; higher-index bits only
/// ever fold into lower-index bits.
///
/// The length must be a power of two (callers zero-pad); anything else throws
/// std::invalid_argument. content_bits tells the converter that coefficients
/// at or above that index are zero (the folds only move data toward lower
/// indices, so spans fed entirely from the zero tail are skipped); callers
/// that zero-padded may pass the original length.
void basis_cvt(BitPoly& f, ExecPolicy policy = ExecPolicy::kParallel,
               size_t content_bits = ~size_t{0});

/// Exact inverse of basis_cvt, same length contract.
void i_basis_cvt(BitPoly& g, ExecPolicy policy = ExecPolicy::kParallel);

namespace reference {

/// Bit-at-a-time version of the same conversion, kept as the plain-reading
/// reference for tests.
void basis_cvt(BitPoly& f);
void i_basis_cvt(BitPoly& g);

}  // namespace reference

}  // namespace fpmul

#endif  // FPMUL_BASIS_CONVERT_HPP_
