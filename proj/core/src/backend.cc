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

#include "evmdiff/backend.h"

#include <array>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"
#include "evmdiff/protocol.h"

namespace evmdiff {
namespace {

constexpr std::array<std::string_view, 4> kProfileNames = {"reference", "gas_variant",
                                                           "trace_variant", "fragile"};

class BuiltinBackend final : public Backend {
 public:
  BuiltinBackend(std::string id, Profile profile, ProfileOptions options)
      : id_(std::move(id)), profile_(profile), options_(std::move(options)) {}

  const std::string& id() const override { return id_; }
  BackendKind kind() const override { return BackendKind::kBuiltin; }

  ExecutionRecord Run(std::span<const uint8_t> code, std::span<const uint8_t> calldata,
                      const Limits& limits, std::stop_token stop) const override {
    ExecutionRecord rec = Execute(code, calldata, ProfileConfig(profile_, options_, limits),
                                  std::move(stop));
    rec.backend_id = id_;
    return rec;
  }

 private:
  std::string id_;
  Profile profile_;
  ProfileOptions options_;
};

class ExternalBackend final : public Backend {
 public:
  ExternalBackend(std::string id, std::filesystem::path exe, std::vector<std::string> args,
                  int version)
      : id_(std::move(id)), exe_(std::move(exe)), args_(std::move(args)), version_(version) {}

  const std::string& id() const override { return id_; }
  BackendKind kind() const override { return BackendKind::kExternal; }

  ExecutionRecord Run(std::span<const uint8_t> code, std::span<const uint8_t> calldata,
                      const Limits& limits, std::stop_token stop) const override {
    auto start = std::chrono::steady_clock::now();
    ExecutionRecord rec;
    try {
      ProtocolRequest req{version_, Bytes(code.begin(), code.end()),
                          Bytes(calldata.begin(), calldata.end()), limits.gas_limit,
                          limits.step_limit};
      rec = RunAdapter(exe_, args_, req, limits.wall_limit, stop);
    } catch (const ProtocolError& e) {
      rec = ExecutionRecord{};
      rec.status = ExecStatus::kBackendCrash;
      rec.error = std::string("protocol error: ") + e.what();
    }
    rec.backend_id = id_;
    rec.wall_time = std::chrono::steady_clock::now() - start;
    return rec;
  }

 private:
  std::string id_;
  std::filesystem::path exe_;
  std::vector<std::string> args_;
  int version_;
};

}  // namespace

std::string_view ProfileName(Profile p) { return kProfileNames[static_cast<size_t>(p)]; }

std::optional<Profile> ProfileFromName(std::string_view name) {
  for (size_t i = 0; i < kProfileNames.size(); ++i) {
    if (kProfileNames[i] == name) return static_cast<Profile>(i);
  }
  return std::nullopt;
}

VmConfig ProfileConfig(Profile profile, const ProfileOptions& options, const Limits& limits) {
  VmConfig cfg;
  cfg.schedule = options.base;
  cfg.step_limit = limits.step_limit;
  cfg.gas_limit = limits.gas_limit;
  switch (profile) {
    case Profile::kReference:
      break;
    case Profile::kGasVariant:
      for (const auto& [name, delta] : options.gas_variant.cost_delta) {
        auto op = OpcodeFromName(name);
        if (!op) throw ConfigError("unknown opcode in gas variant: " + name);
        int64_t cost = static_cast<int64_t>(cfg.schedule.cost[*op]) + delta;
        if (cost < 0) throw ConfigError("gas variant makes " + name + " negative");
        cfg.schedule.cost[*op] = static_cast<uint64_t>(cost);
      }
      cfg.schedule.refund_cap_divisor = options.gas_variant.refund_cap_divisor;
      break;
    case Profile::kTraceVariant:
      cfg.trace = TraceMode::kFused;
      break;
    case Profile::kFragile:
      cfg.guarded = false;
      break;
  }
  return cfg;
}

BackendHandle MakeBackend(Profile profile, const ProfileOptions& options, std::string id) {
  if (id.empty()) id = std::string(ProfileName(profile));
  // Validate eagerly so configuration mistakes surface at construction.
  ProfileConfig(profile, options, Limits{});
  return std::make_shared<BuiltinBackend>(std::move(id), profile, options);
}

BackendHandle MakeExternalBackend(std::string id, std::filesystem::path executable,
                                  std::vector<std::string> args, int protocol_version) {
  if (protocol_version != 1) {
    throw ConfigError("unsupported protocol version " + std::to_string(protocol_version));
  }
  return std::make_shared<ExternalBackend>(std::move(id), std::move(executable),
                                           std::move(args), protocol_version);
}

}  // namespace evmdiff
