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

#ifndef FPMUL_IO_HPP_
#define FPMUL_IO_HPP_

#include <string>

#include "fpmul/bitpoly.hpp"

namespace fpmul {

// Binary polynomial file format: a raw little-endian byte stream where
// coefficient k is bit (k mod 8) of byte k/8. The logical degree is the
// highest set bit; trailing zero bytes are permitted on input and trimmed on
// output.

/// Throws std::runtime_error on I/O failure.
BitPoly load_polynomial(const std::string& path);

/// Writes the canonical trim (up to the last nonzero byte; an empty payload
/// for the zero polynomial). Throws std::runtime_error on I/O failure.
void store_polynomial(const std::string& path, const BitPoly& poly);

}  // namespace fpmul

#endif  // FPMUL_IO_HPP_
