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

#ifndef EVMDIFF_SCHEDULER_H_
#define EVMDIFF_SCHEDULER_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "evmdiff/ast.h"

namespace evmdiff {

inline constexpr double kMaxDiffPriority = 10.0;
inline constexpr size_t kDefaultPoolCap = 4096;

struct SeedEntry {
  ContractAst contract;
  double diff_pri = 0;    // in [0, 10], proportional to admission_diff
  uint64_t time_pri = 0;  // rounds survived without being chosen
  uint64_t admitted_at = 0;
  double admission_diff = 0;
  uint64_t lineage = 0;  // initial seed this entry descends from
};

class SeedPool {
 public:
  explicit SeedPool(size_t cap = kDefaultPoolCap);

  // Adds a starting seed regardless of the record.
  void AddInitial(ContractAst contract, double diff, uint64_t lineage);

  // Picks the entry with the highest diff_pri + time_pri (earliest admitted
  // on ties), ages every other entry by one round and resets the chosen one.
  // Throws EmptyPool.
  const SeedEntry& Prioritize();

  // Admits `contract` only if `diff` beats the record. The newcomer enters at
  // priority 10 and older entries are rescaled against the new record.
  bool Admit(ContractAst contract, double diff, uint64_t iteration, uint64_t lineage);

  const std::vector<SeedEntry>& entries() const { return entries_; }
  double record() const { return record_; }
  size_t cap() const { return cap_; }
  bool empty() const { return entries_.empty(); }

  // Writes seeds/<k>.msol plus manifest.json under `dir`.
  void Save(const std::filesystem::path& dir) const;
  static SeedPool Load(const std::filesystem::path& dir, size_t cap = kDefaultPoolCap);

 private:
  void Rescale();
  void EvictIfFull();

  std::vector<SeedEntry> entries_;
  double record_ = 0;
  size_t cap_;
};

}  // namespace evmdiff

#endif  // EVMDIFF_SCHEDULER_H_
