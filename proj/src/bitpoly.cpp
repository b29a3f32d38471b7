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

#include "fpmul/bitpoly.hpp"

namespace fpmul {

BitPoly random_bitpoly(size_t n_bits, std::mt19937_64& rng) {
  BitPoly p(n_bits);
  for (size_t w = 0; w < p.word_count(); ++w) p.word_data()[w] = rng();
  p.resize_bits(n_bits);
  return p;
}

}  // namespace fpmul
