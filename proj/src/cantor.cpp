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

#include "fpmul/cantor.hpp"

#include <stdexcept>
#include <vector>

#include "fpmul/detail/bitmat.hpp"

namespace fpmul {
namespace {

using detail::test_bit;
using detail::unit_bit;

// GF(2)[x] polynomials on word vectors, just enough for the irreducibility
// check of the reduction modulus (degree <= 128, so at most 3 words).
struct SmallPoly {
  std::vector<uint64_t> w;
  int degree() const {
    for (size_t i = w.size(); i-- > 0;) {
      if (w[i]) {
        unsigned b = 63;
        while (!((w[i] >> b) & 1u)) --b;
        return static_cast<int>(i * 64 + b);
      }
    }
    return -1;
  }
  bool bit(size_t k) const { return k / 64 < w.size() && ((w[k / 64] >> (k % 64)) & 1u); }
  void flip(size_t k) {
    if (k / 64 >= w.size()) w.resize(k / 64 + 1, 0);
    w[k / 64] ^= uint64_t{1} << (k % 64);
  }
  void add_shifted(const SmallPoly& other, size_t shift) {
    for (size_t k = 0; k < other.w.size() * 64; ++k)
      if (other.bit(k)) flip(k + shift);
  }
};

SmallPoly poly_gcd(SmallPoly a, SmallPoly b) {
  while (b.degree() >= 0) {
    int da = a.degree(), db = b.degree();
    while (da >= db && da >= 0) {
      SmallPoly shifted{};
      shifted.add_shifted(b, static_cast<size_t>(da - db));
      for (size_t i = 0; i < shifted.w.size(); ++i) {
        if (i >= a.w.size()) a.w.resize(i + 1, 0);
        a.w[i] ^= shifted.w[i];
      }
      da = a.degree();
    }
    std::swap(a, b);
  }
  return a;
}

template <class F>
SmallPoly modulus_poly() {
  SmallPoly f{};
  f.flip(F::kDegree);
  for (unsigned k = 0; k < 16; ++k)
    if ((F::kModulusTail >> k) & 1u) f.flip(k);
  return f;
}

template <class F>
SmallPoly elem_to_poly(typename F::value_type v) {
  SmallPoly p{};
  for (unsigned k = 0; k < F::kDegree; ++k)
    if (test_bit(v, k)) p.flip(k);
  return p;
}

// f of degree m = 2^k is irreducible iff x^(2^m) == x (mod f) and
// gcd(x^(2^(m/2)) + x, f) = 1; squarings run in the carrier field itself.
template <class F>
bool modulus_is_irreducible() {
  using V = typename F::value_type;
  V t = unit_bit<V>(1);  // the element x
  for (unsigned k = 0; k < F::kDegree / 2; ++k) t = F::sqr(t);
  const V x_half = t;
  for (unsigned k = 0; k < F::kDegree / 2; ++k) t = F::sqr(t);
  if (!(t == unit_bit<V>(1))) return false;
  SmallPoly g = poly_gcd(modulus_poly<F>(), elem_to_poly<F>(x_half ^ unit_bit<V>(1)));
  return g.degree() == 0;
}

}  // namespace

template <class F>
CantorField<F>::CantorField() : v_(F::kDegree), p2c_(F::kDegree) {
  using V = value_type;
  constexpr unsigned m = F::kDegree;

  if (!modulus_is_irreducible<F>())
    throw std::runtime_error("CantorField: reduction modulus is not irreducible");

  // Rows of the GF(2)-linear map y -> y^2 + y in polynomial representation.
  std::vector<V> artin_rows(m);
  for (unsigned k = 0; k < m; ++k) {
    const V e = unit_bit<V>(k);
    artin_rows[k] = F::sqr(e) ^ e;
  }

  v_[0] = unit_bit<V>(0);
  for (unsigned i = 1; i < m; ++i) {
    V y{};
    if (!detail::solve_row_combination(artin_rows.data(), m, v_[i - 1], &y))
      throw std::runtime_error("CantorField: Artin-Schreier equation has no solution (wrong modulus?)");
    // Both y and y+1 solve it; take the smaller encoding (they differ in bit 0).
    y = y ^ (y & unit_bit<V>(0));
    if (!((F::sqr(y) ^ y) == v_[i - 1]))
      throw std::runtime_error("CantorField: basis recurrence check failed");
    v_[i] = y;
  }

  if (detail::bitmat_rank(v_.data(), m) != m)
    throw std::runtime_error("CantorField: basis vectors are linearly dependent");
  if (!detail::bitmat_invert(v_.data(), m, p2c_.data()))
    throw std::runtime_error("CantorField: basis-change matrix not invertible");
}

template <class F>
const CantorField<F>& CantorField<F>::get() {
  static const CantorField instance;
  return instance;
}

template <class F>
FieldElem<F> CantorField<F>::cantor_to_poly(CantorVec<F> c) const {
  return {detail::row_mat_mul(c.bits, v_.data(), F::kDegree)};
}

template <class F>
CantorVec<F> CantorField<F>::poly_to_cantor(FieldElem<F> a) const {
  return {detail::row_mat_mul(a.v, p2c_.data(), F::kDegree)};
}

template class CantorField<gf16>;
template class CantorField<gf64>;
template class CantorField<gf128>;

}  // namespace fpmul
