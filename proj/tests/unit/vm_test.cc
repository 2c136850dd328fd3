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

#include <gtest/gtest.h>

#include "evmdiff/abi.h"
#include "evmdiff/compiler.h"
#include "evmdiff/opcodes.h"
#include "evmdiff/parser.h"
#include "evmdiff/vm.h"
#include "support/paths.h"

namespace evmdiff {
namespace {

constexpr uint8_t P1 = 0x60;

uint8_t O(Opcode op) { return Op(op); }

ExecutionRecord Exec(const Bytes& code, VmConfig cfg = {}) { return Execute(code, {}, cfg); }

TEST(Vm, PushPushAddStop) {
  Bytes code = {P1, 1, P1, 2, O(Opcode::kAdd), O(Opcode::kStop)};
  GasSchedule g = GasSchedule::Reference();
  auto r = Exec(code);
  EXPECT_EQ(r.status, ExecStatus::kSuccess);
  EXPECT_EQ(r.op_seq.size(), 4u);
  EXPECT_EQ(r.gas_used, g.Cost(P1) * 2 + g.Cost(O(Opcode::kAdd)) + g.Cost(O(Opcode::kStop)));
  EXPECT_EQ(OpSeqNames(r.op_seq),
            (std::vector<std::string>{"PUSH1", "PUSH1", "ADD", "STOP"}));
  EXPECT_TRUE(r.output.empty());
}

TEST(Vm, RunningOffTheEndStops) {
  auto r = Exec({P1, 1});
  EXPECT_EQ(r.status, ExecStatus::kSuccess);
  EXPECT_EQ(OpSeqNames(r.op_seq), (std::vector<std::string>{"PUSH1", "STOP"}));
}

TEST(Vm, ReturnCopiesMemory) {
  // mstore(0, 0x2a); return(0, 32)
  Bytes code = {P1, 0x2a, P1, 0, O(Opcode::kMstore), P1, 32, P1, 0, O(Opcode::kReturn)};
  auto r = Exec(code);
  ASSERT_EQ(r.status, ExecStatus::kSuccess);
  ASSERT_EQ(r.output.size(), 32u);
  EXPECT_EQ(r.output[31], 0x2a);
  EXPECT_EQ(WordFromBytes(r.output), 42);
}

TEST(Vm, RevertKeepsOutput) {
  Bytes code = {P1, 7, P1, 0, O(Opcode::kMstore), P1, 32, P1, 0, O(Opcode::kRevert)};
  auto r = Exec(code);
  EXPECT_EQ(r.status, ExecStatus::kRevert);
  EXPECT_EQ(WordFromBytes(r.output), 7);
}

TEST(Vm, BadJumpDestination) {
  Bytes code = {P1, 3, O(Opcode::kJump), O(Opcode::kStop)};
  auto r = Exec(code);
  EXPECT_EQ(r.status, ExecStatus::kVmError);
  EXPECT_EQ(r.error, kBadJumpDestination);
}

TEST(Vm, JumpIntoPushDataIsRejected) {
  // Offset 1 holds the byte 0x5b but it is PUSH1 immediate data.
  Bytes code = {P1, 0x5b, P1, 1, O(Opcode::kJump)};
  auto r = Exec(code);
  EXPECT_EQ(r.error, kBadJumpDestination);
}

TEST(Vm, ValidJumpAndConditionalJump) {
  // push 1, push 6, jumpi -> lands on JUMPDEST at 6
  Bytes code = {P1, 1, P1, 6, O(Opcode::kJumpi), O(Opcode::kInvalid), O(Opcode::kJumpDest),
                O(Opcode::kStop)};
  EXPECT_EQ(Exec(code).status, ExecStatus::kSuccess);
  code[1] = 0;  // condition false falls through into INVALID
  auto r = Exec(code);
  EXPECT_EQ(r.status, ExecStatus::kVmError);
  EXPECT_EQ(r.error, kInvalidOpcode);
}

TEST(Vm, StackUnderflowAndUndefinedOpcode) {
  EXPECT_EQ(Exec({O(Opcode::kAdd)}).error, kStackUnderflow);
  EXPECT_EQ(Exec({0x0c}).error, kUndefinedOpcode);
}

TEST(Vm, StackOverflow) {
  Bytes code;
  code.push_back(O(Opcode::kJumpDest));
  code.insert(code.end(), {P1, 1, P1, 0, O(Opcode::kJump)});
  auto r = Exec(code);
  EXPECT_EQ(r.status, ExecStatus::kVmError);
  EXPECT_EQ(r.error, kStackOverflow);
}

TEST(Vm, OutOfGasLeavesFailingOpUnrecorded) {
  VmConfig cfg;
  cfg.gas_limit = 7;  // two pushes fit, ADD does not
  auto r = Exec({P1, 1, P1, 2, O(Opcode::kAdd), O(Opcode::kStop)}, cfg);
  EXPECT_EQ(r.status, ExecStatus::kOutOfGas);
  EXPECT_EQ(r.op_seq.size(), 2u);
  EXPECT_LE(r.gas_used, cfg.gas_limit);
}

TEST(Vm, MemoryLimit) {
  Bytes code = {0x63, 0x10, 0x00, 0x00, 0x00, O(Opcode::kMload)};  // PUSH4 0x10000000
  auto r = Exec(code);
  EXPECT_EQ(r.status, ExecStatus::kVmError);
  EXPECT_EQ(r.error, kMemoryLimit);
}

TEST(Vm, StorageRoundTripAndRefund) {
  GasSchedule g = GasSchedule::Reference();
  // sstore(0, 5); sstore(0, 0); sload(0)
  Bytes code = {P1, 5, P1, 0, O(Opcode::kSstore), P1, 0, P1, 0, O(Opcode::kSstore),
                P1, 0, O(Opcode::kSload), O(Opcode::kStop)};
  auto r = Exec(code);
  ASSERT_EQ(r.status, ExecStatus::kSuccess);
  uint64_t raw = 5 * g.Cost(P1) + 2 * g.Cost(O(Opcode::kSstore)) + g.Cost(O(Opcode::kSload));
  uint64_t refund = std::min<uint64_t>(4800, raw / g.refund_cap_divisor);
  EXPECT_EQ(r.gas_used, raw - refund);
  EXPECT_EQ(TraceCost(r.op_seq, g), raw);
}

TEST(Vm, FusedTraceDropsPushPopPairs) {
  Bytes code = {P1, 1, O(Opcode::kPop), P1, 2, P1, 3, O(Opcode::kAdd), O(Opcode::kPop),
                O(Opcode::kStop)};
  VmConfig plain;
  VmConfig fused;
  fused.trace = TraceMode::kFused;
  auto a = Exec(code, plain);
  auto b = Exec(code, fused);
  EXPECT_EQ(a.gas_used, b.gas_used);
  EXPECT_EQ(a.op_seq.size(), 7u);
  // Only the first PUSH1 directly precedes a POP; the pair disappears.
  EXPECT_EQ(b.op_seq.size(), 5u);
}

ExecutionRecord RunTestWhile(uint64_t a, uint64_t b, VmConfig cfg) {
  ContractAst ast = ParseFile(testing::ContractPath("forTest"));
  CompiledFunction fn = Compile(ast, "TestWhile");
  std::vector<AbiValue> args = {UintValue(a), UintValue(b)};
  return Execute(fn.code.code, EncodeCalldata(fn.signature, args), cfg);
}

TEST(Vm, TestWhileHitsStepLimit) {
  VmConfig cfg;
  cfg.step_limit = 10'000;
  auto r = RunTestWhile(1, 2, cfg);
  EXPECT_EQ(r.status, ExecStatus::kStepLimitExceeded);
  EXPECT_EQ(r.op_seq.size(), 10'000u);
}

TEST(Vm, TestWhileTerminatesWhenConditionFalse) {
  auto r = RunTestWhile(2, 1, {});
  EXPECT_EQ(r.status, ExecStatus::kSuccess);
}

TEST(Vm, UnguardedRunStopsOnRequest) {
  VmConfig cfg;
  cfg.guarded = false;
  cfg.step_limit = 100;
  std::stop_source src;
  src.request_stop();
  ContractAst ast = ParseFile(testing::ContractPath("forTest"));
  CompiledFunction fn = Compile(ast, "TestWhile");
  auto r = Execute(fn.code.code, EncodeCalldata(fn.signature, std::vector{UintValue(1), UintValue(2)}),
                   cfg, src.get_token());
  EXPECT_EQ(r.status, ExecStatus::kBackendCrash);
  EXPECT_LE(r.op_seq.size(), 100u);
}

TEST(Vm, StatusNamesRoundTrip) {
  for (auto s : {ExecStatus::kSuccess, ExecStatus::kRevert, ExecStatus::kOutOfGas,
                 ExecStatus::kStepLimitExceeded, ExecStatus::kVmError, ExecStatus::kBackendCrash}) {
    EXPECT_EQ(ExecStatusFromName(ExecStatusName(s)), s);
  }
}

}  // namespace
}  // namespace evmdiff
