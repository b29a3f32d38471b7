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

#ifndef FPMUL_CANTOR_HPP_
#define FPMUL_CANTOR_HPP_

#include <span>
#include <vector>

#include "fpmul/gf.hpp"

namespace fpmul {

/// Per-field immutable tables: the Cantor basis v_0..v_{m-1} in polynomial
/// representation (v_0 = 1, v_i^2 + v_i = v_{i-1}) and the basis-change
/// matrices between Cantor coordinates and polynomial representation.
///
/// Construction solves y^2 + y = v_{i-1} as an m x m GF(2) linear system; the
/// two roots differ by 1 and the one with the smaller integer encoding is
/// taken. The reduction modulus is checked irreducible and the recurrence and
/// rank-m invariants are asserted; any failure throws std::runtime_error.
template <class F>
class CantorField {
 public:
  using value_type = typename F::value_type;

  /// The shared immutable instance (built on first use, safe to share).
  static const CantorField& get();

  unsigned degree() const { return F::kDegree; }
  unsigned log_degree() const { return F::kLogDegree; }

  /// v_i in polynomial representation.
  FieldElem<F> basis(unsigned i) const { return {v_[i]}; }

  FieldElem<F> cantor_to_poly(CantorVec<F> c) const;
  CantorVec<F> poly_to_cantor(FieldElem<F> a) const;

  /// Basis-change matrix rows (row j of Cantor->poly is v_j).
  std::span<const value_type> cantor_rows() const { return v_; }
  std::span<const value_type> poly_rows() const { return p2c_; }

  CantorField(const CantorField&) = delete;
  CantorField& operator=(const CantorField&) = delete;

 private:
  CantorField();

  std::vector<value_type> v_;    // C2P rows
  std::vector<value_type> p2c_;  // P2C rows
};

extern template class CantorField<gf16>;
extern template class CantorField<gf64>;
extern template class CantorField<gf128>;

}  // namespace fpmul

#endif  // FPMUL_CANTOR_HPP_
