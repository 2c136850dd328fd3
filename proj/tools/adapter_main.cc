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

// evmdiff-adapter: a protocol-v1 backend process wrapping a builtin profile.
//
//   evmdiff-adapter [--profile reference|gas_variant|trace_variant|fragile]
//
// Reads one request line on stdin, writes one response line on stdout.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "evmdiff/backend.h"
#include "evmdiff/errors.h"
#include "evmdiff/protocol.h"

int main(int argc, char** argv) {
  CLI::App app{"evmdiff protocol v1 adapter"};
  std::string profile_name = "reference";
  app.add_option("--profile", profile_name, "builtin profile to execute with");
  CLI11_PARSE(app, argc, argv);

  auto profile = evmdiff::ProfileFromName(profile_name);
  if (!profile) {
    std::cerr << "unknown profile " << profile_name << "\n";
    return 1;
  }
  std::string line;
  if (!std::getline(std::cin, line)) {
    std::cerr << "no request on stdin\n";
    return 1;
  }
  try {
    evmdiff::ProtocolRequest req = evmdiff::DecodeRequest(line);
    evmdiff::Limits limits;
    limits.gas_limit = req.gas_limit;
    limits.step_limit = req.step_limit;
    auto backend = evmdiff::MakeBackend(*profile);
    auto rec = backend->Run(req.bytecode, req.calldata, limits, {});
    std::cout << evmdiff::EncodeResponse(rec) << std::flush;
  } catch (const evmdiff::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
