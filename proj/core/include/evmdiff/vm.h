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

#ifndef EVMDIFF_VM_H_
#define EVMDIFF_VM_H_

#include <chrono>
#include <cstdint>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "evmdiff/gas.h"
#include "evmdiff/word.h"

namespace evmdiff {

enum class ExecStatus {
  kSuccess,
  kRevert,
  kOutOfGas,
  kStepLimitExceeded,
  kVmError,
  kBackendCrash,
};

std::string_view ExecStatusName(ExecStatus s);
ExecStatus ExecStatusFromName(std::string_view name);  // throws Error

// Detail strings carried with kVmError.
inline constexpr char kBadJumpDestination[] = "bad-jump-destination";
inline constexpr char kStackUnderflow[] = "stack-underflow";
inline constexpr char kStackOverflow[] = "stack-overflow";
inline constexpr char kInvalidOpcode[] = "invalid-opcode";
inline constexpr char kUndefinedOpcode[] = "undefined-opcode";
inline constexpr char kMemoryLimit[] = "memory-limit";

struct ExecutionRecord {
  std::string backend_id;
  ExecStatus status = ExecStatus::kSuccess;
  std::string error;  // VmError kind or crash detail
  Bytes output;
  uint64_t gas_used = 0;
  std::vector<uint8_t> op_seq;  // executed opcodes, in order
  std::chrono::nanoseconds wall_time{0};
};

enum class TraceMode {
  kNone,
  kFused,  // PUSH immediately followed by POP is dropped from op_seq
};

struct VmConfig {
  GasSchedule schedule = GasSchedule::Reference();
  TraceMode trace = TraceMode::kNone;
  uint64_t step_limit = 1'000'000;
  uint64_t gas_limit = 10'000'000;
  // When false the interpreter ignores both limits and only stops on a
  // halting opcode, an error, or an external stop request.
  bool guarded = true;
};

inline constexpr size_t kMaxStack = 1024;
inline constexpr size_t kMaxMemory = 1 << 20;

// Runs code to completion. Never throws for program faults; every outcome is
// encoded in the returned record. A stop request yields kBackendCrash.
ExecutionRecord Execute(std::span<const uint8_t> code, std::span<const uint8_t> calldata,
                        const VmConfig& cfg, std::stop_token stop = {});

// Sum of schedule costs over a recorded trace (before refunds).
uint64_t TraceCost(std::span<const uint8_t> op_seq, const GasSchedule& schedule);

std::vector<std::string> OpSeqNames(std::span<const uint8_t> op_seq);

}  // namespace evmdiff

#endif  // EVMDIFF_VM_H_
