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

#ifndef EVMDIFF_GAS_H_
#define EVMDIFF_GAS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace evmdiff {

enum class RefundCondition {
  kStorageCleared,  // SSTORE writing zero over a non-zero slot
};

struct RefundRule {
  uint8_t opcode;
  RefundCondition condition;
  int64_t amount;
  bool operator==(const RefundRule&) const = default;
};

// Flat per-opcode cost table plus refund rules. Loaded from a JSON file of
// the form
//   {"costs": {"ADD": 3, ...},
//    "refunds": [{"opcode": "SSTORE", "condition": "storage-cleared",
//                 "amount": 4800}],
//    "refund_cap_divisor": 2}
// Entries missing from "costs" keep their reference value, so every ISA
// opcode always has a cost.
struct GasSchedule {
  std::array<uint64_t, 256> cost{};
  std::vector<RefundRule> refunds;
  // Applied refund is capped at gas_used / refund_cap_divisor.
  uint64_t refund_cap_divisor = 2;

  uint64_t Cost(uint8_t op) const { return cost[op]; }
  int64_t Refund(uint8_t op, RefundCondition condition) const;

  static GasSchedule Reference();

  bool operator==(const GasSchedule&) const = default;
};

GasSchedule GasScheduleFromJson(std::string_view json_text);
std::string GasScheduleToJson(const GasSchedule& schedule);
GasSchedule LoadGasSchedule(const std::filesystem::path& path);

}  // namespace evmdiff

#endif  // EVMDIFF_GAS_H_
