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

#ifndef FPMUL_GF_HPP_
#define FPMUL_GF_HPP_

#include <cstdint>

namespace fpmul {

/// 128-bit value as two little-endian 64-bit words, with just enough operator
/// surface for field arithmetic and bit-matrix code.
struct u128 {
  uint64_t lo = 0;
  uint64_t hi = 0;

  constexpr u128() = default;
  constexpr u128(uint64_t low) : lo(low), hi(0) {}
  constexpr u128(uint64_t high, uint64_t low) : lo(low), hi(high) {}

  friend constexpr bool operator==(const u128&, const u128&) = default;
  explicit constexpr operator bool() const { return lo || hi; }

  friend constexpr u128 operator^(u128 a, u128 b) { return {a.hi ^ b.hi, a.lo ^ b.lo}; }
  friend constexpr u128 operator&(u128 a, u128 b) { return {a.hi & b.hi, a.lo & b.lo}; }
  friend constexpr u128 operator|(u128 a, u128 b) { return {a.hi | b.hi, a.lo | b.lo}; }
  constexpr u128& operator^=(u128 b) { lo ^= b.lo; hi ^= b.hi; return *this; }

  friend constexpr u128 operator<<(u128 a, unsigned s) {
    if (s == 0) return a;
    if (s >= 128) return {};
    if (s >= 64) return {a.lo << (s - 64), 0};
    return {(a.hi << s) | (a.lo >> (64 - s)), a.lo << s};
  }
  friend constexpr u128 operator>>(u128 a, unsigned s) {
    if (s == 0) return a;
    if (s >= 128) return {};
    if (s >= 64) return {0, a.hi >> (s - 64)};
    return {a.hi >> s, (a.lo >> s) | (a.hi << (64 - s))};
  }
};

namespace detail {

/// Generic full-shift-safe right shift (value >> width is well defined here).
inline constexpr uint16_t value_shr(uint16_t v, unsigned s) { return s >= 16 ? uint16_t{0} : uint16_t(v >> s); }
inline constexpr uint64_t value_shr(uint64_t v, unsigned s) { return s >= 64 ? uint64_t{0} : v >> s; }
inline constexpr u128 value_shr(u128 v, unsigned s) { return v >> s; }

inline constexpr bool test_bit(uint16_t v, unsigned i) { return (v >> i) & 1u; }
inline constexpr bool test_bit(uint64_t v, unsigned i) { return (v >> i) & 1u; }
inline constexpr bool test_bit(u128 v, unsigned i) { return i < 64 ? ((v.lo >> i) & 1u) : ((v.hi >> (i - 64)) & 1u); }

template <class W>
inline constexpr W unit_bit(unsigned i) {
  if constexpr (__is_same(W, u128))
    return u128{1} << i;
  else
    return W(W{1} << i);
}

inline constexpr uint64_t low_word(uint16_t v) { return v; }
inline constexpr uint64_t low_word(uint64_t v) { return v; }
inline constexpr uint64_t low_word(u128 v) { return v.lo; }

template <class W>
inline constexpr W from_low_word(uint64_t v) {
  if constexpr (__is_same(W, u128))
    return u128{0, v};
  else
    return static_cast<W>(v);
}

bool cpu_has_clmul() noexcept;

/// Carry-less 64x64 -> 128 product, portable reference.
u128 clmul64_portable(uint64_t a, uint64_t b) noexcept;

}  // namespace detail

// Field tags. The value is the fully reduced polynomial representation: bit k
// is the coefficient of x^k modulo the field's reduction polynomial.

struct gf16 {
  using value_type = uint16_t;
  static constexpr unsigned kDegree = 16;
  static constexpr unsigned kLogDegree = 4;
  // x^16 + x^5 + x^3 + x^2 + 1
  static constexpr uint64_t kModulusTail = 0x2D;
  static value_type mul(value_type a, value_type b) noexcept;
  static value_type sqr(value_type a) noexcept;
};

struct gf64 {
  using value_type = uint64_t;
  static constexpr unsigned kDegree = 64;
  static constexpr unsigned kLogDegree = 6;
  // x^64 + x^4 + x^3 + x + 1
  static constexpr uint64_t kModulusTail = 0x1B;
  static value_type mul(value_type a, value_type b) noexcept;
  static value_type sqr(value_type a) noexcept;
};

struct gf128 {
  using value_type = u128;
  static constexpr unsigned kDegree = 128;
  static constexpr unsigned kLogDegree = 7;
  // x^128 + x^7 + x^2 + x + 1 (the AES-GCM modulus)
  static constexpr uint64_t kModulusTail = 0x87;
  static value_type mul(value_type a, value_type b) noexcept;
  static value_type sqr(value_type a) noexcept;
};

/// A field element in polynomial representation.
template <class F>
struct FieldElem {
  typename F::value_type v{};
  friend constexpr bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// A field element in Cantor-basis coordinates: bit j is the coefficient of
/// the basis vector v_j.
template <class F>
struct CantorVec {
  typename F::value_type bits{};
  friend constexpr bool operator==(const CantorVec&, const CantorVec&) = default;
};

template <class F>
inline FieldElem<F> gf_add(FieldElem<F> a, FieldElem<F> b) {
  return {static_cast<typename F::value_type>(a.v ^ b.v)};
}

template <class F>
inline FieldElem<F> gf_mul(FieldElem<F> a, FieldElem<F> b) {
  return {F::mul(a.v, b.v)};
}

/// The Frobenius map: squaring in characteristic 2.
template <class F>
inline FieldElem<F> gf_sqr(FieldElem<F> a) {
  return {F::sqr(a.v)};
}

/// s_i evaluated in Cantor coordinates: a right shift by i (0 <= i <= m).
template <class F>
inline CantorVec<F> subspace_eval(unsigned i, CantorVec<F> a) {
  return {detail::value_shr(a.bits, i)};
}

/// Order of the Frobenius map on basis vector v_i: 2*2^floor(log2 i).
/// Rejects i = 0 (v_0 = 1 is a fixed point of order 1).
unsigned frobenius_order_of_basis(unsigned i);

}  // namespace fpmul

#endif  // FPMUL_GF_HPP_
