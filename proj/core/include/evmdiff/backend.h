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

#ifndef EVMDIFF_BACKEND_H_
#define EVMDIFF_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "evmdiff/gas.h"
#include "evmdiff/vm.h"

namespace evmdiff {

// Limits applied uniformly to every backend of a harness run.
struct Limits {
  uint64_t gas_limit = 10'000'000;
  uint64_t step_limit = 1'000'000;
  std::chrono::milliseconds wall_limit{10'000};
};

enum class BackendKind { kBuiltin, kExternal };

class Backend {
 public:
  virtual ~Backend() = default;

  virtual const std::string& id() const = 0;
  virtual BackendKind kind() const = 0;

  // Must honor stop requests promptly; a stopped run may return anything,
  // the harness discards it.
  virtual ExecutionRecord Run(std::span<const uint8_t> code, std::span<const uint8_t> calldata,
                              const Limits& limits, std::stop_token stop) const = 0;
};

using BackendHandle = std::shared_ptr<const Backend>;

enum class Profile { kReference, kGasVariant, kTraceVariant, kFragile };

std::string_view ProfileName(Profile p);
std::optional<Profile> ProfileFromName(std::string_view name);

// Cost perturbation applied on top of the base schedule by kGasVariant.
struct GasVariantSpec {
  std::map<std::string, int64_t> cost_delta = {{"SSTORE", 1200}, {"SLOAD", 100}};
  uint64_t refund_cap_divisor = 5;
};

struct ProfileOptions {
  GasSchedule base = GasSchedule::Reference();
  GasVariantSpec gas_variant;
};

// The VM configuration a builtin profile runs with (limits filled from `limits`).
VmConfig ProfileConfig(Profile profile, const ProfileOptions& options, const Limits& limits);

BackendHandle MakeBackend(Profile profile, const ProfileOptions& options = {},
                          std::string id = "");

// A backend living in another process, spoken to via the line protocol.
BackendHandle MakeExternalBackend(std::string id, std::filesystem::path executable,
                                  std::vector<std::string> args = {}, int protocol_version = 1);

}  // namespace evmdiff

#endif  // EVMDIFF_BACKEND_H_
