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

#include "evmdiff/opcodes.h"

#include <array>
#include <cstdio>
#include <unordered_map>

namespace evmdiff {
namespace {

struct Table {
  std::array<std::string, 256> names;
  std::array<bool, 256> defined{};
  std::vector<uint8_t> isa;
  std::unordered_map<std::string, uint8_t> by_name;

  Table() {
    auto add = [&](uint8_t op, std::string name) {
      names[op] = name;
      defined[op] = true;
      by_name[name] = op;
    };
    add(0x00, "STOP");
    add(0x01, "ADD");
    add(0x02, "MUL");
    add(0x03, "SUB");
    add(0x04, "DIV");
    add(0x06, "MOD");
    add(0x10, "LT");
    add(0x11, "GT");
    add(0x12, "SLT");
    add(0x13, "SGT");
    add(0x14, "EQ");
    add(0x15, "ISZERO");
    add(0x16, "AND");
    add(0x17, "OR");
    add(0x18, "XOR");
    add(0x19, "NOT");
    add(0x35, "CALLDATALOAD");
    add(0x36, "CALLDATASIZE");
    add(0x50, "POP");
    add(0x51, "MLOAD");
    add(0x52, "MSTORE");
    add(0x54, "SLOAD");
    add(0x55, "SSTORE");
    add(0x56, "JUMP");
    add(0x57, "JUMPI");
    add(0x5b, "JUMPDEST");
    for (int n = 1; n <= 32; ++n) add(PushN(n), "PUSH" + std::to_string(n));
    for (int n = 1; n <= 16; ++n) add(DupN(n), "DUP" + std::to_string(n));
    for (int n = 1; n <= 16; ++n) add(SwapN(n), "SWAP" + std::to_string(n));
    add(0xf1, "CALL");
    add(0xf3, "RETURN");
    add(0xfd, "REVERT");
    add(0xfe, "INVALID");
    for (int op = 0; op < 256; ++op) {
      if (defined[op]) {
        isa.push_back(static_cast<uint8_t>(op));
      } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "UNDEFINED_0x%02x", op);
        names[op] = buf;
      }
    }
  }
};

const Table& GetTable() {
  static const Table table;
  return table;
}

}  // namespace

bool IsIsaOpcode(uint8_t op) { return GetTable().defined[op]; }

const std::vector<uint8_t>& IsaOpcodes() { return GetTable().isa; }

std::string OpcodeName(uint8_t op) { return GetTable().names[op]; }

std::optional<uint8_t> OpcodeFromName(std::string_view name) {
  const auto& t = GetTable();
  auto it = t.by_name.find(std::string(name));
  if (it == t.by_name.end()) return std::nullopt;
  return it->second;
}

}  // namespace evmdiff
