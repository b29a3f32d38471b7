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

#include <stdexcept>
#include "doctest.h"
#include "fpmul/butterfly.hpp"
#include "fpmul/encode.hpp"
#include "test_support.hpp"

using namespace fpmul;
using testsupport::random_elem;

namespace {

template <class F>
EvalVec<F> random_vec(size_t n, std::mt19937_64& rng) {
  EvalVec<F> v(n);
  for (auto& e : v) e.v = random_elem<F>(rng);
  return v;
}

template <class F>
void check_against_direct_eval(unsigned max_l, int vectors_per_l, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned l = 0; l <= max_l; ++l) {
    for (int t = 0; t < vectors_per_l; ++t) {
      const CantorVec<F> base{random_elem<F>(rng)};
      const auto plan = plan_butterflies<F>(l, base);
      EvalVec<F> coeffs = random_vec<F>(size_t{1} << l, rng);
      EvalVec<F> v = coeffs;
      lch_butterfly<F>(std::span<FieldElem<F>>(v), plan);
      for (size_t idx = 0; idx < v.size(); ++idx) {
        const CantorVec<F> pt{static_cast<typename F::value_type>(
            base.bits ^ detail::from_low_word<typename F::value_type>(idx))};
        CAPTURE(l);
        CAPTURE(idx);
        REQUIRE(direct_eval<F>(std::span<const FieldElem<F>>(coeffs), pt) == v[idx]);
      }
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("butterfly");

TEST_CASE("plans: l=0 empty; l=1 base=0 single zero multiplier") {
  const auto p0 = plan_butterflies<gf64>(0, CantorVec<gf64>{});
  CHECK(p0.mults.empty());
  const auto p1 = plan_butterflies<gf64>(1, CantorVec<gf64>{});
  REQUIRE(p1.mults.size() == 1);
  CHECK(p1.mults[0] == 0);
}

TEST_CASE("pipeline plan's first virtual layers multiply by v_{m/2-k}") {
  const auto& fld = CantorField<gf64>::get();
  for (unsigned l : {0u, 2u, 5u}) {
    const auto spec = make_partition_spec<gf64>(l);
    const auto plan = plan_butterflies<gf64>(l + gf64::kLogDegree, spec.base);
    for (unsigned k = 0; k < gf64::kLogDegree; ++k) {
      CAPTURE(l);
      CAPTURE(k);
      // cross-check via subspace_eval as well
      const auto direct = fld.cantor_to_poly(subspace_eval(l + k, spec.base));
      CHECK(plan.multiplier(l + k, 0) == fld.basis(32 - k));
      CHECK(plan.multiplier(l + k, 0) == direct);
    }
  }
}

TEST_CASE("l=0 and l=1 base cases") {
  std::mt19937_64 rng(7);
  const auto plan0 = plan_butterflies<gf64>(0, CantorVec<gf64>{});
  EvalVec<gf64> v{FieldElem<gf64>{rng()}};
  const auto keep = v[0];
  lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan0);
  CHECK(v[0] == keep);

  const auto plan1 = plan_butterflies<gf64>(1, CantorVec<gf64>{});
  EvalVec<gf64> w{FieldElem<gf64>{rng()}, FieldElem<gf64>{rng()}};
  const auto g0 = w[0], g1 = w[1];
  lch_butterfly<gf64>(std::span<FieldElem<gf64>>(w), plan1);
  CHECK(w[0] == g0);
  CHECK(w[1] == gf_add(g0, g1));
  // (h0, h1) -> (h0, h0^h1) is self-inverse at multiplier zero
  i_lch_butterfly<gf64>(std::span<FieldElem<gf64>>(w), plan1);
  CHECK(w[0] == g0);
  CHECK(w[1] == g1);
}

TEST_CASE("outputs equal direct evaluation at base + i-bar") {
  check_against_direct_eval<gf16>(6, 4, 100);
  check_against_direct_eval<gf64>(6, 4, 101);
  check_against_direct_eval<gf128>(6, 2, 102);
}

TEST_CASE("sampled output indices match direct evaluation up to l = 12") {
  std::mt19937_64 rng(14);
  for (unsigned l : {10u, 12u}) {
    const CantorVec<gf64> base{rng()};
    const auto plan = plan_butterflies<gf64>(l, base);
    EvalVec<gf64> coeffs = random_vec<gf64>(size_t{1} << l, rng);
    EvalVec<gf64> v = coeffs;
    lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan);
    for (int probe = 0; probe < 40; ++probe) {
      const size_t idx = rng() & (v.size() - 1);
      const CantorVec<gf64> pt{base.bits ^ idx};
      REQUIRE(direct_eval<gf64>(std::span<const FieldElem<gf64>>(coeffs), pt) == v[idx]);
    }
  }
}

TEST_CASE("direct_eval examples") {
  const auto& fld = CantorField<gf64>::get();
  std::mt19937_64 rng(9);
  // constant polynomial evaluates to the constant anywhere
  EvalVec<gf64> c(8);
  c[0].v = rng();
  for (int t = 0; t < 10; ++t)
    CHECK(direct_eval<gf64>(std::span<const FieldElem<gf64>>(c), CantorVec<gf64>{rng()}) == c[0]);
  // X_1 = x at the point v_0 = 1 gives 1
  EvalVec<gf64> e1(2);
  e1[1].v = 1;
  CHECK(direct_eval<gf64>(std::span<const FieldElem<gf64>>(e1),
                          fld.poly_to_cantor(FieldElem<gf64>{1}))
            .v == 1);
  // single nonzero g_0 with base 0 yields a constant output vector
  const auto plan = plan_butterflies<gf64>(4, CantorVec<gf64>{});
  EvalVec<gf64> v(16);
  v[0].v = 0xDEADBEEF;
  lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan);
  for (const auto& e : v) CHECK(e.v == 0xDEADBEEF);
}

TEST_CASE("inverse butterfly round trip up to l=12") {
  std::mt19937_64 rng(10);
  for (unsigned l : {2u, 5u, 9u, 12u}) {
    const CantorVec<gf64> base{rng()};
    const auto plan = plan_butterflies<gf64>(l, base);
    const auto coeffs = random_vec<gf64>(size_t{1} << l, rng);
    EvalVec<gf64> v = coeffs;
    lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan);
    i_lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan);
    REQUIRE(v == coeffs);
  }
  // all-zero stays all-zero
  const auto plan = plan_butterflies<gf64>(6, CantorVec<gf64>{rng()});
  EvalVec<gf64> z(64);
  lch_butterfly<gf64>(std::span<FieldElem<gf64>>(z), plan);
  for (const auto& e : z) CHECK(e.v == 0);
}

TEST_CASE("cache-blocked and parallel schedules are bit-exact vs the naive order") {
  std::mt19937_64 rng(11);
  for (unsigned l : {3u, 8u, 13u}) {
    const CantorVec<gf64> base{rng()};
    const auto plan = plan_butterflies<gf64>(l, base);
    const auto init = random_vec<gf64>(size_t{1} << l, rng);
    EvalVec<gf64> naive = init;
    reference::lch_butterfly<gf64>(std::span<FieldElem<gf64>>(naive), plan);
    for (size_t budget : {2u, 64u, 1u << 10, 1u << 16}) {
      EvalVec<gf64> fast = init;
      lch_butterfly<gf64>(std::span<FieldElem<gf64>>(fast), plan, ExecPolicy::kSerial, budget);
      REQUIRE(fast == naive);
      EvalVec<gf64> par = init;
      lch_butterfly<gf64>(std::span<FieldElem<gf64>>(par), plan, ExecPolicy::kParallel, budget);
      REQUIRE(par == naive);
      // inverse along the same schedules
      EvalVec<gf64> back = naive;
      i_lch_butterfly<gf64>(std::span<FieldElem<gf64>>(back), plan, ExecPolicy::kParallel, budget);
      REQUIRE(back == init);
    }
  }
}

TEST_CASE("per-layer operation count is n_p/2 multiplications, n_p additions") {
  // Instrumented replica of one layer; its output must match the reference
  // layer runner, which pins the real kernels to the same work shape.
  std::mt19937_64 rng(12);
  const unsigned l = 6;
  const CantorVec<gf16> base{static_cast<uint16_t>(rng())};
  const auto plan = plan_butterflies<gf16>(l, base);
  auto v = random_vec<gf16>(size_t{1} << l, rng);
  for (unsigned i = l; i-- > 0;) {
    EvalVec<gf16> expect = v;
    reference::run_layers<gf16>(std::span<FieldElem<gf16>>(expect), plan, i, i);
    size_t muls = 0, adds = 0;
    const size_t half = size_t{1} << i;
    for (size_t b = 0; b < v.size() >> (i + 1); ++b) {
      const auto w = plan.multiplier(i, b);
      for (size_t j = 0; j < half; ++j) {
        auto& p0 = v[(b << (i + 1)) + j];
        auto& p1 = v[(b << (i + 1)) + half + j];
        p0 = gf_add(p0, gf_mul(w, p1));
        ++muls;
        ++adds;
        p1 = gf_add(p1, p0);
        ++adds;
      }
    }
    CHECK(muls == v.size() / 2);
    CHECK(adds == v.size());
    REQUIRE(v == expect);
  }
}

TEST_CASE("length mismatch is rejected") {
  const auto plan = plan_butterflies<gf64>(3, CantorVec<gf64>{});
  EvalVec<gf64> v(4);
  CHECK_THROWS_AS(lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan), std::invalid_argument);
  CHECK_THROWS_AS(i_lch_butterfly<gf64>(std::span<FieldElem<gf64>>(v), plan),
                  std::invalid_argument);
}

TEST_SUITE_END();
