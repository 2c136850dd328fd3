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

#ifndef EVMDIFF_PROTOCOL_H_
#define EVMDIFF_PROTOCOL_H_

// Line protocol spoken with out-of-process backends. The harness writes one
// JSON object terminated by '\n' to the adapter's stdin and reads one JSON
// object line from its stdout:
//
//   request:  {"version":1,"bytecode":"60..","calldata":"..","gas_limit":N,"step_limit":N}
//   response: {"status":"Success","output":"..","gas_used":N,"op_seq":["PUSH1",...]}
//
// "error" is an optional response field carrying the VmError kind.

#include <chrono>
#include <filesystem>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "evmdiff/vm.h"

namespace evmdiff {

struct ProtocolRequest {
  int version = 1;
  Bytes bytecode;
  Bytes calldata;
  uint64_t gas_limit = 0;
  uint64_t step_limit = 0;
  bool operator==(const ProtocolRequest&) const = default;
};

std::string EncodeRequest(const ProtocolRequest& req);
ProtocolRequest DecodeRequest(std::string_view line);  // throws ProtocolError

std::string EncodeResponse(const ExecutionRecord& rec);
ExecutionRecord DecodeResponse(std::string_view line);  // throws ProtocolError

// Spawns `executable`, exchanges one request/response and reaps the child.
// Exceeding `wall_limit` or a stop request kills the child and yields a
// kBackendCrash record. Malformed responses or a child that exits without
// answering throw ProtocolError.
ExecutionRecord RunAdapter(const std::filesystem::path& executable,
                           const std::vector<std::string>& args, const ProtocolRequest& req,
                           std::chrono::milliseconds wall_limit, std::stop_token stop = {});

}  // namespace evmdiff

#endif  // EVMDIFF_PROTOCOL_H_
