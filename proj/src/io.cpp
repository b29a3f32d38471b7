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

#include "fpmul/io.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace fpmul {

BitPoly load_polynomial(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::vector<unsigned char> bytes;
  unsigned char buf[1 << 16];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) bytes.insert(bytes.end(), buf, buf + got);
  const bool bad = std::ferror(f);
  std::fclose(f);
  if (bad) throw std::runtime_error("read error on '" + path + "'");

  BitPoly p(bytes.size() * 8);
  for (size_t i = 0; i < bytes.size(); ++i)
    p.word_data()[i / 8] |= uint64_t{bytes[i]} << (8 * (i % 8));
  return p;
}

void store_polynomial(const std::string& path, const BitPoly& poly) {
  const size_t used_bits = poly.max_degree_plus_one();
  const size_t nbytes = (used_bits + 7) / 8;
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  bool bad = false;
  for (size_t i = 0; i < nbytes; ++i) {
    const unsigned char byte =
        static_cast<unsigned char>(poly.word_data()[i / 8] >> (8 * (i % 8)));
    if (std::fputc(byte, f) == EOF) {
      bad = true;
      break;
    }
  }
  if (std::fclose(f) != 0) bad = true;
  if (bad) throw std::runtime_error("write error on '" + path + "'");
}

}  // namespace fpmul
