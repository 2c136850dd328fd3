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

#include "evmdiff/bytecode.h"

#include <sstream>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"

namespace evmdiff {

Bytecode Bytecode::FromHex(std::string_view hex) {
  auto bytes = evmdiff::FromHex(hex);
  if (!bytes) throw Error("malformed bytecode hex");
  return Bytecode{std::move(*bytes)};
}

std::string Disassemble(std::span<const uint8_t> code) {
  std::ostringstream out;
  for (size_t pc = 0; pc < code.size();) {
    uint8_t op = code[pc];
    out << pc << ": " << OpcodeName(op);
    int n = PushSize(op);
    if (n > 0) {
      size_t avail = std::min<size_t>(n, code.size() - pc - 1);
      out << " 0x" << ToHex(code.subspan(pc + 1, avail));
    }
    out << '\n';
    pc += 1 + n;
  }
  return out.str();
}

}  // namespace evmdiff
