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

#include "evmdiff/backend.h"
#include "evmdiff/errors.h"
#include "evmdiff/harness.h"
#include "evmdiff/opcodes.h"
#include "evmdiff/protocol.h"
#include "support/paths.h"

namespace evmdiff {
namespace {

using std::chrono::milliseconds;

const Bytes kCode = {0x60, 1, 0x60, 2, Op(Opcode::kAdd), Op(Opcode::kStop)};

TEST(Protocol, RequestRoundTrip) {
  ProtocolRequest req{1, kCode, {0xaa, 0xbb}, 1000, 50};
  std::string line = EncodeRequest(req);
  ASSERT_EQ(line.back(), '\n');
  EXPECT_EQ(line.find('\n'), line.size() - 1);  // exactly one line
  EXPECT_EQ(DecodeRequest(line), req);
}

TEST(Protocol, ResponseRoundTrip) {
  ExecutionRecord rec;
  rec.status = ExecStatus::kVmError;
  rec.error = kBadJumpDestination;
  rec.output = {1, 2, 3};
  rec.gas_used = 77;
  rec.op_seq = {0x60, Op(Opcode::kJump)};
  ExecutionRecord back = DecodeResponse(EncodeResponse(rec));
  EXPECT_EQ(back.status, rec.status);
  EXPECT_EQ(back.error, rec.error);
  EXPECT_EQ(back.output, rec.output);
  EXPECT_EQ(back.gas_used, rec.gas_used);
  EXPECT_EQ(back.op_seq, rec.op_seq);
}

TEST(Protocol, MalformedResponsesThrow) {
  EXPECT_THROW(DecodeResponse("not json"), ProtocolError);
  EXPECT_THROW(DecodeResponse(R"({"status":"Success"})"), ProtocolError);
  EXPECT_THROW(DecodeResponse(R"({"status":"Fine","output":"","gas_used":0,"op_seq":[]})"),
               ProtocolError);
  EXPECT_THROW(DecodeResponse(R"({"status":"Success","output":"0g","gas_used":0,"op_seq":[]})"),
               ProtocolError);
  EXPECT_THROW(
      DecodeResponse(R"({"status":"Success","output":"","gas_used":0,"op_seq":["FROB"]})"),
      ProtocolError);
  EXPECT_THROW(DecodeRequest(R"({"version":1})"), ProtocolError);
}

ExecutionRecord RunStub(const std::string& script, milliseconds wall = milliseconds(2000)) {
  Limits limits;
  limits.wall_limit = wall;
  auto backend = MakeExternalBackend("stub", testing::TestDataPath(script));
  return backend->Run(kCode, {}, limits, {});
}

TEST(Protocol, EchoStubLoopback) {
  ExecutionRecord r = RunStub("echo_adapter.sh");
  EXPECT_EQ(r.backend_id, "stub");
  EXPECT_EQ(r.status, ExecStatus::kSuccess);
  EXPECT_EQ(r.gas_used, 21u);
  ASSERT_EQ(r.output.size(), 32u);
  EXPECT_EQ(r.output[31], 0x2a);
  EXPECT_EQ(OpSeqNames(r.op_seq), (std::vector<std::string>{"PUSH1", "PUSH1", "ADD", "STOP"}));
}

TEST(Protocol, SleepingStubTimesOut) {
  auto start = std::chrono::steady_clock::now();
  ExecutionRecord r = RunStub("sleep_adapter.sh", milliseconds(300));
  EXPECT_EQ(r.status, ExecStatus::kBackendCrash);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(Protocol, InvalidHexIsCrashWithProtocolError) {
  ExecutionRecord r = RunStub("badhex_adapter.sh");
  EXPECT_EQ(r.status, ExecStatus::kBackendCrash);
  EXPECT_NE(r.error.find("protocol error"), std::string::npos) << r.error;
}

TEST(Protocol, SilentStubIsCrash) {
  EXPECT_EQ(RunStub("silent_adapter.sh").status, ExecStatus::kBackendCrash);
}

TEST(Protocol, MissingExecutableIsCrash) {
  EXPECT_EQ(RunStub("does_not_exist.sh").status, ExecStatus::kBackendCrash);
}

TEST(Protocol, UnsupportedVersionIsConfigError) {
  EXPECT_THROW(MakeExternalBackend("x", testing::TestDataPath("echo_adapter.sh"), {}, 2),
               ConfigError);
}

TEST(Protocol, HarnessMixesBuiltinAndExternal) {
  std::vector<BackendHandle> roster = {
      MakeBackend(Profile::kReference),
      MakeExternalBackend("stub", testing::TestDataPath("sleep_adapter.sh"))};
  Limits limits;
  limits.wall_limit = milliseconds(300);
  auto records = RunAll(roster, kCode, {}, limits);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].status, ExecStatus::kSuccess);
  EXPECT_EQ(records[1].status, ExecStatus::kBackendCrash);
}

#ifdef EVMDIFF_ADAPTER_PATH
TEST(Protocol, AdapterBinaryMatchesBuiltin) {
  for (Profile p : {Profile::kReference, Profile::kTraceVariant, Profile::kGasVariant}) {
    auto ext = MakeExternalBackend("ext", EVMDIFF_ADAPTER_PATH,
                                   {"--profile", std::string(ProfileName(p))});
    Bytes code = {0x60, 1, 0x60, 0, Op(Opcode::kSstore), 0x60, 9, Op(Opcode::kPop),
                  Op(Opcode::kStop)};
    ExecutionRecord a = MakeBackend(p)->Run(code, {}, {}, {});
    ExecutionRecord b = ext->Run(code, {}, {}, {});
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.gas_used, b.gas_used);
    EXPECT_EQ(a.op_seq, b.op_seq);
  }
}
#endif

}  // namespace
}  // namespace evmdiff
