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

// Small dense GF(2) linear algebra over row words. The convention throughout
// is row-vector times matrix: multiplying x by M means XORing together the
// rows of M selected by the set bits of x.

#ifndef FPMUL_DETAIL_BITMAT_HPP_
#define FPMUL_DETAIL_BITMAT_HPP_

#include <cstddef>
#include <vector>

#include "fpmul/gf.hpp"

namespace fpmul::detail {

template <class W>
inline W row_mat_mul(W x, const W* rows, unsigned m) {
  W acc{};
  for (unsigned j = 0; j < m; ++j)
    if (test_bit(x, j)) acc ^= rows[j];
  return acc;
}

template <class W>
inline unsigned bitmat_rank(const W* rows, unsigned m) {
  std::vector<W> ech;
  ech.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    W r = rows[i];
    for (const W& p : ech) {
      unsigned lead = 0;
      while (!test_bit(p, lead)) ++lead;
      if (test_bit(r, lead)) r ^= p;
    }
    if (static_cast<bool>(r)) ech.push_back(r);
  }
  return static_cast<unsigned>(ech.size());
}

/// Gauss-Jordan inverse with the row convention above. Returns false when the
/// matrix is singular.
template <class W>
inline bool bitmat_invert(const W* rows, unsigned m, W* inv_out) {
  std::vector<W> a(rows, rows + m), inv(m);
  for (unsigned i = 0; i < m; ++i) inv[i] = unit_bit<W>(i);
  for (unsigned col = 0; col < m; ++col) {
    unsigned piv = col;
    while (piv < m && !test_bit(a[piv], col)) ++piv;
    if (piv == m) return false;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    for (unsigned r = 0; r < m; ++r) {
      if (r != col && test_bit(a[r], col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  for (unsigned i = 0; i < m; ++i) inv_out[i] = inv[i];
  return true;
}

/// Finds x with x * M = target (XOR of M's rows selected by x). Returns false
/// when target is outside the row span. With a singular M the returned x is
/// one valid solution.
template <class W>
inline bool solve_row_combination(const W* rows, unsigned m, W target, W* x_out) {
  std::vector<W> ech, tag;
  for (unsigned i = 0; i < m; ++i) {
    W r = rows[i];
    W t = unit_bit<W>(i);
    for (size_t j = 0; j < ech.size(); ++j) {
      unsigned lead = 0;
      while (!test_bit(ech[j], lead)) ++lead;
      if (test_bit(r, lead)) {
        r ^= ech[j];
        t ^= tag[j];
      }
    }
    if (static_cast<bool>(r)) {
      ech.push_back(r);
      tag.push_back(t);
    }
  }
  W acc = target;
  W x{};
  for (size_t j = 0; j < ech.size(); ++j) {
    unsigned lead = 0;
    while (!test_bit(ech[j], lead)) ++lead;
    if (test_bit(acc, lead)) {
      acc ^= ech[j];
      x ^= tag[j];
    }
  }
  if (static_cast<bool>(acc)) return false;
  *x_out = x;
  return true;
}

}  // namespace fpmul::detail

#endif  // FPMUL_DETAIL_BITMAT_HPP_
