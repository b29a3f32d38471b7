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

// Shared test-side oracles. These deliberately re-derive results along
// different routes than the library (bit-serial modular arithmetic, dense
// GF(2)[x] polynomials, row-echelon rank) so the two sides check each other.

#ifndef FPMUL_TESTS_TEST_SUPPORT_HPP_
#define FPMUL_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "fpmul/gf.hpp"

namespace testsupport {

template <class F>
typename F::value_type random_elem(std::mt19937_64& rng) {
  using V = typename F::value_type;
  if constexpr (F::kDegree == 16)
    return static_cast<V>(rng());
  else if constexpr (F::kDegree == 64)
    return static_cast<V>(rng());
  else
    return fpmul::u128{rng(), rng()};
}

/// Bit-serial shift-and-reduce product: reduces on every shift instead of
/// multiplying wide and folding.
template <class F>
typename F::value_type bitserial_mul(typename F::value_type a, typename F::value_type b) {
  using V = typename F::value_type;
  using fpmul::detail::from_low_word;
  using fpmul::detail::test_bit;
  V acc{};
  for (unsigned i = F::kDegree; i-- > 0;) {
    const bool carry = test_bit(acc, F::kDegree - 1);
    acc = static_cast<V>(acc << 1);
    if (carry) acc ^= from_low_word<V>(F::kModulusTail);
    if (test_bit(b, i)) acc ^= a;
  }
  return acc;
}

/// Dense GF(2)[x] polynomial on uint64 words, for building X_k by hand.
struct DensePoly {
  std::vector<uint64_t> w;
  bool bit(size_t k) const { return k / 64 < w.size() && ((w[k / 64] >> (k % 64)) & 1u); }
  void flip(size_t k) {
    if (k / 64 >= w.size()) w.resize(k / 64 + 1, 0);
    w[k / 64] ^= uint64_t{1} << (k % 64);
  }
};

inline DensePoly dense_mul(const DensePoly& a, size_t da, const DensePoly& b, size_t db) {
  DensePoly r;
  r.w.resize((da + db) / 64 + 2, 0);
  for (size_t i = 0; i <= da; ++i)
    if (a.bit(i))
      for (size_t j = 0; j <= db; ++j)
        if (b.bit(j)) r.flip(i + j);
  return r;
}

/// s_j(x) over GF(2)[x] via s_0 = x, s_j = s_{j-1}^2 + s_{j-1} (squaring a
/// GF(2) polynomial spreads its exponents by two).
inline std::pair<DensePoly, size_t> subspace_poly_dense(unsigned j) {
  DensePoly s;
  s.flip(1);
  size_t deg = 1;
  for (unsigned it = 0; it < j; ++it) {
    DensePoly nxt;
    nxt.w.resize(2 * deg / 64 + 2, 0);
    for (size_t k = 0; k <= deg; ++k)
      if (s.bit(k)) {
        nxt.flip(2 * k);
        nxt.flip(k);
      }
    s = nxt;
    deg *= 2;
  }
  return {s, deg};
}

/// Row-echelon rank over GF(2), reducing by the highest set bit.
template <class V>
unsigned echelon_rank(std::vector<V> rows, unsigned width) {
  using fpmul::detail::test_bit;
  unsigned rank = 0;
  for (unsigned col = width; col-- > 0;) {
    size_t piv = rank;
    while (piv < rows.size() && !test_bit(rows[piv], col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && test_bit(rows[r], col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace testsupport

#endif  // FPMUL_TESTS_TEST_SUPPORT_HPP_
