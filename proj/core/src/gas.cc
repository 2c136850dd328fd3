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

#include "evmdiff/gas.h"

#include <fstream>
#include <sstream>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"
#include "json.hpp"

namespace evmdiff {

using nlohmann::json;

int64_t GasSchedule::Refund(uint8_t op, RefundCondition condition) const {
  int64_t total = 0;
  for (const auto& r : refunds) {
    if (r.opcode == op && r.condition == condition) total += r.amount;
  }
  return total;
}

GasSchedule GasSchedule::Reference() {
  GasSchedule s;
  auto set = [&](Opcode op, uint64_t c) { s.cost[Op(op)] = c; };
  set(Opcode::kStop, 0);
  set(Opcode::kAdd, 3);
  set(Opcode::kSub, 3);
  set(Opcode::kMul, 5);
  set(Opcode::kDiv, 5);
  set(Opcode::kMod, 5);
  for (Opcode op : {Opcode::kLt, Opcode::kGt, Opcode::kSlt, Opcode::kSgt, Opcode::kEq,
                    Opcode::kIsZero, Opcode::kAnd, Opcode::kOr, Opcode::kXor, Opcode::kNot}) {
    set(op, 3);
  }
  set(Opcode::kCallDataLoad, 3);
  set(Opcode::kCallDataSize, 2);
  set(Opcode::kPop, 2);
  set(Opcode::kMload, 3);
  set(Opcode::kMstore, 3);
  set(Opcode::kSload, 200);
  set(Opcode::kSstore, 5000);
  set(Opcode::kJump, 8);
  set(Opcode::kJumpi, 10);
  set(Opcode::kJumpDest, 1);
  for (int n = 1; n <= 32; ++n) s.cost[PushN(n)] = 3;
  for (int n = 1; n <= 16; ++n) s.cost[DupN(n)] = 3;
  for (int n = 1; n <= 16; ++n) s.cost[SwapN(n)] = 3;
  // 700 base plus the fixed 2300 stipend forwarded by the call stub.
  set(Opcode::kCall, 3000);
  set(Opcode::kReturn, 0);
  set(Opcode::kRevert, 0);
  set(Opcode::kInvalid, 0);
  s.refunds.push_back(
      RefundRule{Op(Opcode::kSstore), RefundCondition::kStorageCleared, 4800});
  s.refund_cap_divisor = 2;
  return s;
}

GasSchedule GasScheduleFromJson(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("gas schedule: ") + e.what());
  }
  GasSchedule s = GasSchedule::Reference();
  try {
    if (j.contains("costs")) {
      for (auto& [name, value] : j.at("costs").items()) {
        auto op = OpcodeFromName(name);
        if (!op) throw ConfigError("gas schedule: unknown opcode " + name);
        if (!value.is_number_integer() || value.get<int64_t>() < 0) {
          throw ConfigError("gas schedule: cost of " + name + " must be a non-negative integer");
        }
        s.cost[*op] = value.get<uint64_t>();
      }
    }
    if (j.contains("refunds")) {
      s.refunds.clear();
      for (const auto& r : j.at("refunds")) {
        auto op = OpcodeFromName(r.at("opcode").get<std::string>());
        if (!op) throw ConfigError("gas schedule: unknown refund opcode");
        if (r.at("condition").get<std::string>() != "storage-cleared") {
          throw ConfigError("gas schedule: unsupported refund condition");
        }
        s.refunds.push_back(RefundRule{*op, RefundCondition::kStorageCleared,
                                       r.at("amount").get<int64_t>()});
      }
    }
    if (j.contains("refund_cap_divisor")) {
      s.refund_cap_divisor = j.at("refund_cap_divisor").get<uint64_t>();
      if (s.refund_cap_divisor == 0) throw ConfigError("gas schedule: refund_cap_divisor must be >= 1");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("gas schedule: ") + e.what());
  }
  return s;
}

std::string GasScheduleToJson(const GasSchedule& schedule) {
  json costs = json::object();
  for (uint8_t op : IsaOpcodes()) costs[OpcodeName(op)] = schedule.cost[op];
  json refunds = json::array();
  for (const auto& r : schedule.refunds) {
    refunds.push_back({{"opcode", OpcodeName(r.opcode)},
                       {"condition", "storage-cleared"},
                       {"amount", r.amount}});
  }
  json j = {{"costs", costs},
            {"refunds", refunds},
            {"refund_cap_divisor", schedule.refund_cap_divisor}};
  return j.dump(2);
}

GasSchedule LoadGasSchedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open gas schedule " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return GasScheduleFromJson(ss.str());
}

}  // namespace evmdiff
