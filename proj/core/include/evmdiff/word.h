// Copyright 2026 The evmdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVMDIFF_WORD_H_
#define EVMDIFF_WORD_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace evmdiff {

// 256-bit machine word. Arithmetic wraps modulo 2^256.
using Word = boost::multiprecision::uint256_t;

using Bytes = std::vector<uint8_t>;

inline const Word kWordMax = ~Word(0);
inline const Word kInt256Max = kWordMax >> 1;
inline const Word kInt256Min = Word(1) << 255;
inline const Word kAddressMask = (Word(1) << 160) - 1;

// Reads up to 32 big-endian bytes; shorter input is right-padded with zeros,
// matching CALLDATALOAD semantics.
Word WordFromBytes(std::span<const uint8_t> bytes);

std::array<uint8_t, 32> WordToBytes(const Word& w);

inline bool IsNegative(const Word& w) { return bit_test(w, 255); }

std::string ToDecimal(const Word& w);
std::string ToHexWord(const Word& w);  // "0x" + minimal lowercase hex

// Parses a decimal or 0x-prefixed hex literal. Returns nullopt when the value
// does not fit in 256 bits or the text is malformed.
std::optional<Word> ParseWordLiteral(std::string_view text);

// Lowercase hex without prefix.
std::string ToHex(std::span<const uint8_t> bytes);
// Accepts an optional 0x prefix. nullopt on odd length or non-hex digits.
std::optional<Bytes> FromHex(std::string_view hex);

}  // namespace evmdiff

#endif  // EVMDIFF_WORD_H_
