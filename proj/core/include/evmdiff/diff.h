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

#ifndef EVMDIFF_DIFF_H_
#define EVMDIFF_DIFF_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "evmdiff/vm.h"

namespace evmdiff {

// |x - y| / max(x, y, 1); always in [0, 1].
double Norm(uint64_t x, uint64_t y);

// Both saturate at 1.0 when either side is a BackendCrash, since the
// indicator is undefined for a run that produced no trustworthy data.
double GasDiff(const ExecutionRecord& a, const ExecutionRecord& b);
double OpDiff(const ExecutionRecord& a, const ExecutionRecord& b);

enum class Classification { kAllAgree, kOutputMismatch, kCrashAsymmetry };

std::string_view ClassificationName(Classification c);
Classification ClassificationFromName(std::string_view name);  // throws Error

struct PairDiff {
  size_t i = 0;
  size_t j = 0;
  double gas_diff = 0;
  double op_diff = 0;
  // Raw absolute differences, kept for reporting only.
  uint64_t gas_abs = 0;
  uint64_t op_abs = 0;
};

struct DiffReport {
  std::vector<PairDiff> per_pair;
  double aggregate_diff = 0;
  bool out_vul = false;
  Classification classification = Classification::kAllAgree;
};

bool IsCrash(const ExecutionRecord& r);

// Throws TooFewBackends for fewer than two records.
DiffReport Aggregate(std::span<const ExecutionRecord> records);

struct IndCounts {
  size_t ind1 = 0;  // sole survivor while all others crashed
  size_t ind2 = 0;  // sole crasher while all others survived
  bool operator==(const IndCounts&) const = default;
};

// Each vector marks crash (true) per backend for one contract; all vectors
// must have `backends` entries.
std::vector<IndCounts> Refine(const std::vector<std::vector<bool>>& crash_vectors,
                              size_t backends);

}  // namespace evmdiff

#endif  // EVMDIFF_DIFF_H_
