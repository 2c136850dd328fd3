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

#ifndef EVMDIFF_BYTECODE_H_
#define EVMDIFF_BYTECODE_H_

#include <span>
#include <string>
#include <string_view>

#include "evmdiff/word.h"

namespace evmdiff {

struct Bytecode {
  Bytes code;

  std::string ToHex() const { return evmdiff::ToHex(code); }
  // Throws Error on malformed hex.
  static Bytecode FromHex(std::string_view hex);
  bool operator==(const Bytecode&) const = default;
};

// One instruction per line: "<offset>: <MNEMONIC> [0xIMMEDIATE]".
std::string Disassemble(std::span<const uint8_t> code);

}  // namespace evmdiff

#endif  // EVMDIFF_BYTECODE_H_
