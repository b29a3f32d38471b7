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

#include <random>
#include <set>

#include <stdexcept>
#include "doctest.h"
#include "fpmul/encode.hpp"
#include "test_support.hpp"

using namespace fpmul;
using testsupport::random_elem;

TEST_SUITE_BEGIN("encode");

TEST_CASE("rows: r_0 = 1, r_1 = v_{m/2}, r_3 = v_{m/2} * v_{m/2-1}") {
  // r_j collapses the virtual layers s_{l+k}(v_{l+m/2}) = v_{m/2-k}.
  auto check = [](auto field_tag) {
    using F = decltype(field_tag);
    const auto& fld = CantorField<F>::get();
    const auto& mat = EncodeMatrix<F>::get();
    CHECK(mat.row(0).v == detail::unit_bit<typename F::value_type>(0));
    CHECK(mat.row(1) == fld.basis(F::kDegree / 2));
    CHECK(mat.row(2) == fld.basis(F::kDegree / 2 - 1));
    CHECK(mat.row(3) == gf_mul(fld.basis(F::kDegree / 2), fld.basis(F::kDegree / 2 - 1)));
  };
  check(gf16{});
  check(gf64{});
  check(gf128{});
}

TEST_CASE("m4r tables match the naive row-XOR product") {
  auto check = [](auto field_tag, int samples) {
    using F = decltype(field_tag);
    const auto& mat = EncodeMatrix<F>::get();
    std::mt19937_64 rng(55 + F::kDegree);
    for (int i = 0; i < samples; ++i) {
      const auto x = random_elem<F>(rng);
      FieldElem<F> naive{};
      for (unsigned j = 0; j < F::kDegree; ++j)
        if (detail::test_bit(x, j)) naive = gf_add(naive, mat.row(j));
      REQUIRE(mat.m4r_mul(x) == naive);
    }
    // unit vectors select single rows; zero maps to zero
    CHECK(mat.m4r_mul(typename F::value_type{}) == FieldElem<F>{});
    for (unsigned j = 0; j < F::kDegree; ++j)
      CHECK(mat.m4r_mul(detail::unit_bit<typename F::value_type>(j)) == mat.row(j));
  };
  check(gf16{}, 10000);
  check(gf64{}, 10000);
  check(gf128{}, 10000);
}

TEST_CASE("transpose64x64: definition, identity pattern, involution") {
  uint64_t m[64];
  // single bit (r,c) -> (c,r)
  std::mt19937_64 rng(66);
  for (int t = 0; t < 100; ++t) {
    const unsigned r = rng() % 64, c = rng() % 64;
    for (auto& w : m) w = 0;
    m[r] = uint64_t{1} << c;
    transpose64x64(m);
    for (unsigned j = 0; j < 64; ++j) CHECK(m[j] == (j == c ? uint64_t{1} << r : 0));
  }
  // diagonal is fixed
  for (unsigned j = 0; j < 64; ++j) m[j] = uint64_t{1} << j;
  transpose64x64(m);
  for (unsigned j = 0; j < 64; ++j) CHECK(m[j] == uint64_t{1} << j);
  // involution on random blocks
  for (int t = 0; t < 1000; ++t) {
    uint64_t orig[64];
    for (unsigned j = 0; j < 64; ++j) orig[j] = m[j] = rng();
    transpose64x64(m);
    transpose64x64(m);
    for (unsigned j = 0; j < 64; ++j) REQUIRE(m[j] == orig[j]);
  }
}

TEST_CASE("encode equals the scalar reference and decode inverts it") {
  auto check = [](auto field_tag, std::initializer_list<unsigned> ls) {
    using F = decltype(field_tag);
    const auto& mat = EncodeMatrix<F>::get();
    std::mt19937_64 rng(77 + F::kDegree);
    for (unsigned l : ls) {
      const auto spec = make_partition_spec<F>(l);
      for (int t = 0; t < 20; ++t) {
        const BitPoly a = random_bitpoly(F::kDegree * spec.n_p, rng);
        const auto ev = encode<F>(a, spec, mat);
        const auto ref = reference::encode<F>(a, spec, mat);
        REQUIRE(ev == ref);
        const auto par = encode<F>(a, spec, mat, ExecPolicy::kParallel);
        REQUIRE(par == ev);
        const BitPoly back = decode<F>(std::span<const FieldElem<F>>(ev), spec, mat);
        REQUIRE(back == a);
      }
    }
  };
  check(gf16{}, {0u, 1u, 3u, 6u, 7u});
  check(gf64{}, {0u, 2u, 6u, 8u});
  check(gf128{}, {0u, 5u, 7u});
}

TEST_CASE("single coefficient bit round-trips through f_i = r_j") {
  const auto& mat = EncodeMatrix<gf64>::get();
  const auto spec = make_partition_spec<gf64>(4);
  std::mt19937_64 rng(88);
  for (int t = 0; t < 50; ++t) {
    const unsigned j = rng() % 64;
    const size_t i = rng() % spec.n_p;
    BitPoly a(64 * spec.n_p);
    a.set_bit(j * spec.n_p + i);
    const auto ev = encode<gf64>(a, spec, mat);
    for (size_t k = 0; k < spec.n_p; ++k)
      REQUIRE(ev[k] == (k == i ? mat.row(j) : FieldElem<gf64>{}));
    REQUIRE(decode<gf64>(std::span<const FieldElem<gf64>>(ev), spec, mat) == a);
  }
}

TEST_CASE("n_p = 1 is a single matrix-vector product") {
  const auto& mat = EncodeMatrix<gf128>::get();
  const auto spec = make_partition_spec<gf128>(0);
  std::mt19937_64 rng(99);
  BitPoly a(128);
  for (size_t k = 0; k < 128; ++k) a.set_bit(k, rng() & 1);
  const auto ev = encode<gf128>(a, spec, mat);
  REQUIRE(ev.size() == 1);
  FieldElem<gf128> want{};
  for (unsigned j = 0; j < 128; ++j)
    if (a.bit(j)) want = gf_add(want, mat.row(j));
  CHECK(ev[0] == want);
}

TEST_CASE("encode equals the first n_p outputs of the untruncated virtual layers (m=16)") {
  const auto& mat = EncodeMatrix<gf16>::get();
  std::mt19937_64 rng(111);
  for (unsigned l = 0; l <= 7; ++l) {
    const auto spec = make_partition_spec<gf16>(l);
    const unsigned layers = l + 4;
    const auto plan = plan_butterflies<gf16>(layers, spec.base);
    for (int t = 0; t < 30; ++t) {
      const BitPoly a = random_bitpoly(size_t{16} << l, rng);
      EvalVec<gf16> wide(size_t{1} << layers);
      for (size_t k = 0; k < wide.size(); ++k) wide[k].v = a.bit(k) ? 1 : 0;
      reference::run_layers<gf16>(std::span<FieldElem<gf16>>(wide), plan, layers - 1, l);
      const auto enc = encode<gf16>(a, spec, mat);
      for (size_t i = 0; i < spec.n_p; ++i) {
        CAPTURE(l);
        CAPTURE(i);
        REQUIRE(enc[i] == wide[i]);
      }
    }
  }
}

TEST_CASE("Frobenius partition structure at m=16 for every legal l") {
  const auto& fld = CantorField<gf16>::get();
  for (unsigned l = 0; l < 8; ++l) {
    const auto spec = make_partition_spec<gf16>(l);
    const auto iterates = enumerate_partition<gf16>(spec);
    REQUIRE(iterates.size() == 16);
    REQUIRE(iterates[0].size() == spec.n_p);  // |Sigma| = 2^l = n/m
    std::set<uint16_t> all;
    std::set<uint16_t> sigma(iterates[0].begin(), iterates[0].end());
    for (unsigned j = 0; j < 16; ++j) {
      std::set<uint16_t> s(iterates[j].begin(), iterates[j].end());
      REQUIRE(s.size() == spec.n_p);
      if (j > 0) REQUIRE(s != sigma);  // Ord(Sigma) = m, no early return
      for (uint16_t e : s) REQUIRE(all.insert(e).second);  // pairwise disjoint
    }
    REQUIRE(all.size() == size_t{16} << l);  // |Omega| = n
    // phi maps V_l onto itself
    std::set<uint16_t> vl, image;
    for (uint32_t u = 0; u < (1u << l); ++u) {
      vl.insert(static_cast<uint16_t>(u));
      const auto p = fld.cantor_to_poly(CantorVec<gf16>{static_cast<uint16_t>(u)});
      image.insert(fld.poly_to_cantor(gf_sqr(p)).bits);
    }
    REQUIRE(vl == image);
  }
}

TEST_CASE("enumerate_partition rejects fields beyond test scale; spec validates l") {
  CHECK_THROWS_AS(enumerate_partition<gf64>(make_partition_spec<gf64>(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_partition_spec<gf16>(8), std::invalid_argument);
  CHECK_THROWS_AS(make_partition_spec<gf64>(32), std::invalid_argument);
  CHECK_NOTHROW(make_partition_spec<gf16>(7));
}

TEST_CASE("encode rejects mismatched lengths") {
  const auto& mat = EncodeMatrix<gf64>::get();
  const auto spec = make_partition_spec<gf64>(3);
  BitPoly a(64 * 8 - 64);
  CHECK_THROWS_AS(encode<gf64>(a, spec, mat), std::invalid_argument);
  EvalVec<gf64> v(4);
  CHECK_THROWS_AS(decode<gf64>(std::span<const FieldElem<gf64>>(v), spec, mat),
                  std::invalid_argument);
}

TEST_SUITE_END();
