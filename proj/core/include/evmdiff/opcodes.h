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

#ifndef EVMDIFF_OPCODES_H_
#define EVMDIFF_OPCODES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evmdiff {

// Byte values follow the EVM encoding for the supported subset.
enum class Opcode : uint8_t {
  kStop = 0x00,
  kAdd = 0x01,
  kMul = 0x02,
  kSub = 0x03,
  kDiv = 0x04,
  kMod = 0x06,
  kLt = 0x10,
  kGt = 0x11,
  kSlt = 0x12,
  kSgt = 0x13,
  kEq = 0x14,
  kIsZero = 0x15,
  kAnd = 0x16,
  kOr = 0x17,
  kXor = 0x18,
  kNot = 0x19,
  kCallDataLoad = 0x35,
  kCallDataSize = 0x36,
  kPop = 0x50,
  kMload = 0x51,
  kMstore = 0x52,
  kSload = 0x54,
  kSstore = 0x55,
  kJump = 0x56,
  kJumpi = 0x57,
  kJumpDest = 0x5b,
  kPush1 = 0x60,
  kPush32 = 0x7f,
  kDup1 = 0x80,
  kDup16 = 0x8f,
  kSwap1 = 0x90,
  kSwap16 = 0x9f,
  kCall = 0xf1,
  kReturn = 0xf3,
  kRevert = 0xfd,
  kInvalid = 0xfe,
};

constexpr uint8_t Op(Opcode op) { return static_cast<uint8_t>(op); }

constexpr bool IsPush(uint8_t op) { return op >= Op(Opcode::kPush1) && op <= Op(Opcode::kPush32); }
constexpr int PushSize(uint8_t op) { return IsPush(op) ? op - Op(Opcode::kPush1) + 1 : 0; }
constexpr uint8_t PushN(int n) { return static_cast<uint8_t>(Op(Opcode::kPush1) + n - 1); }
constexpr uint8_t DupN(int n) { return static_cast<uint8_t>(Op(Opcode::kDup1) + n - 1); }
constexpr uint8_t SwapN(int n) { return static_cast<uint8_t>(Op(Opcode::kSwap1) + n - 1); }

bool IsIsaOpcode(uint8_t op);

// Every opcode of the instruction set, in ascending byte order.
const std::vector<uint8_t>& IsaOpcodes();

// Mnemonic such as "PUSH1" or "SWAP3"; "UNDEFINED_0xNN" outside the ISA.
std::string OpcodeName(uint8_t op);
std::optional<uint8_t> OpcodeFromName(std::string_view name);

}  // namespace evmdiff

#endif  // EVMDIFF_OPCODES_H_
