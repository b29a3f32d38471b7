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

#ifndef FPMUL_BITPOLY_HPP_
#define FPMUL_BITPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace fpmul {

/// A polynomial over GF(2) packed into 64-bit words: coefficient k lives at
/// bit (k mod 64) of word k/64. Bits at positions >= bit_length() are kept
/// zero at all times.
class BitPoly {
 public:
  static constexpr size_t kWordBits = 64;

  BitPoly() = default;
  explicit BitPoly(size_t n_bits) : words_((n_bits + 63) / 64, 0), n_bits_(n_bits) {}

  size_t bit_length() const { return n_bits_; }
  size_t word_count() const { return words_.size(); }
  uint64_t* word_data() { return words_.data(); }
  const uint64_t* word_data() const { return words_.data(); }

  bool bit(size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }

  void set_bit(size_t k, bool value = true) {
    const uint64_t mask = uint64_t{1} << (k % 64);
    if (value)
      words_[k / 64] |= mask;
    else
      words_[k / 64] &= ~mask;
  }

  void flip_bit(size_t k) { words_[k / 64] ^= uint64_t{1} << (k % 64); }

  /// Changes the logical length. Retained low bits are preserved; any bits at
  /// or above the new length are cleared.
  void resize_bits(size_t n_bits) {
    words_.resize((n_bits + 63) / 64, 0);
    n_bits_ = n_bits;
    clear_excess();
  }

  void clear() { words_.assign(words_.size(), 0); }

  /// Index one past the highest set coefficient (0 for the zero polynomial).
  size_t max_degree_plus_one() const {
    for (size_t w = words_.size(); w-- > 0;) {
      if (words_[w]) {
        unsigned b = 63;
        while (!((words_[w] >> b) & 1u)) --b;
        return w * 64 + b + 1;
      }
    }
    return 0;
  }

  BitPoly& operator^=(const BitPoly& other) {
    if (other.n_bits_ > n_bits_) resize_bits(other.n_bits_);
    for (size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  /// Value comparison: trailing zero coefficients do not matter.
  friend bool operator==(const BitPoly& a, const BitPoly& b) {
    const size_t n = a.words_.size() > b.words_.size() ? a.words_.size() : b.words_.size();
    for (size_t w = 0; w < n; ++w) {
      const uint64_t wa = w < a.words_.size() ? a.words_[w] : 0;
      const uint64_t wb = w < b.words_.size() ? b.words_[w] : 0;
      if (wa != wb) return false;
    }
    return true;
  }
  friend bool operator!=(const BitPoly& a, const BitPoly& b) { return !(a == b); }

 private:
  void clear_excess() {
    if (n_bits_ % 64) words_.back() &= (uint64_t{1} << (n_bits_ % 64)) - 1;
  }

  std::vector<uint64_t> words_;
  size_t n_bits_ = 0;
};

/// Uniformly random polynomial with exactly n_bits coefficient slots.
BitPoly random_bitpoly(size_t n_bits, std::mt19937_64& rng);

}  // namespace fpmul

#endif  // FPMUL_BITPOLY_HPP_
