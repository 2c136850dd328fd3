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

#include "evmdiff/word.h"

#include <algorithm>
#include <cctype>

namespace evmdiff {

Word WordFromBytes(std::span<const uint8_t> bytes) {
  std::array<uint8_t, 32> buf{};
  std::copy_n(bytes.begin(), std::min<size_t>(bytes.size(), 32), buf.begin());
  Word w;
  boost::multiprecision::import_bits(w, buf.begin(), buf.end(), 8, true);
  return w;
}

std::array<uint8_t, 32> WordToBytes(const Word& w) {
  std::array<uint8_t, 32> out{};
  std::vector<uint8_t> raw;
  raw.reserve(32);
  boost::multiprecision::export_bits(w, std::back_inserter(raw), 8, true);
  std::copy(raw.begin(), raw.end(), out.end() - raw.size());
  return out;
}

std::string ToDecimal(const Word& w) { return w.str(); }

std::string ToHexWord(const Word& w) {
  auto bytes = WordToBytes(w);
  std::string hex = ToHex(bytes);
  size_t nz = hex.find_first_not_of('0');
  return "0x" + (nz == std::string::npos ? std::string("0") : hex.substr(nz));
}

std::optional<Word> ParseWordLiteral(std::string_view text) {
  if (text.empty()) return std::nullopt;
  boost::multiprecision::cpp_int value = 0;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) return std::nullopt;
      int digit = std::isdigit(static_cast<unsigned char>(c))
                      ? c - '0'
                      : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      value = value * 16 + digit;
      if (value > boost::multiprecision::cpp_int(kWordMax)) return std::nullopt;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      value = value * 10 + (c - '0');
      if (value > boost::multiprecision::cpp_int(kWordMax)) return std::nullopt;
    }
  }
  return Word(value);
}

std::string ToHex(std::span<const uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::optional<Bytes> FromHex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  if (hex.size() % 2 != 0) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]);
    int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<uint8_t>(hi << 4 | lo));
  }
  return out;
}

}  // namespace evmdiff
