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

#include "evmdiff/diff.h"

#include <algorithm>
#include <array>

#include "evmdiff/errors.h"

namespace evmdiff {
namespace {

constexpr std::array<std::string_view, 3> kClassNames = {"AllAgree", "OutputMismatch",
                                                         "CrashAsymmetry"};

uint64_t AbsDiff(uint64_t x, uint64_t y) { return x > y ? x - y : y - x; }

}  // namespace

double Norm(uint64_t x, uint64_t y) {
  uint64_t denom = std::max<uint64_t>({x, y, 1});
  return static_cast<double>(AbsDiff(x, y)) / static_cast<double>(denom);
}

bool IsCrash(const ExecutionRecord& r) { return r.status == ExecStatus::kBackendCrash; }

double GasDiff(const ExecutionRecord& a, const ExecutionRecord& b) {
  if (IsCrash(a) || IsCrash(b)) return 1.0;
  return Norm(a.gas_used, b.gas_used);
}

double OpDiff(const ExecutionRecord& a, const ExecutionRecord& b) {
  if (IsCrash(a) || IsCrash(b)) return 1.0;
  return Norm(a.op_seq.size(), b.op_seq.size());
}

std::string_view ClassificationName(Classification c) {
  return kClassNames[static_cast<size_t>(c)];
}

Classification ClassificationFromName(std::string_view name) {
  for (size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == name) return static_cast<Classification>(i);
  }
  throw Error("unknown classification '" + std::string(name) + "'");
}

DiffReport Aggregate(std::span<const ExecutionRecord> records) {
  if (records.size() < 2) throw TooFewBackends(records.size());
  DiffReport report;
  for (size_t i = 0; i < records.size(); ++i) {
    for (size_t j = i + 1; j < records.size(); ++j) {
      const auto& a = records[i];
      const auto& b = records[j];
      PairDiff p{i, j, GasDiff(a, b), OpDiff(a, b), AbsDiff(a.gas_used, b.gas_used),
                 AbsDiff(a.op_seq.size(), b.op_seq.size())};
      report.aggregate_diff += p.gas_diff + p.op_diff;
      if (a.status != b.status || a.output != b.output) report.out_vul = true;
      report.per_pair.push_back(p);
    }
  }
  size_t crashes = std::count_if(records.begin(), records.end(), IsCrash);
  if (crashes > 0 && crashes < records.size()) {
    report.classification = Classification::kCrashAsymmetry;
  } else if (report.out_vul) {
    report.classification = Classification::kOutputMismatch;
  }
  return report;
}

std::vector<IndCounts> Refine(const std::vector<std::vector<bool>>& crash_vectors,
                              size_t backends) {
  std::vector<IndCounts> table(backends);
  for (const auto& v : crash_vectors) {
    if (v.size() != backends) throw Error("crash vector length does not match backend count");
    size_t crashed = std::count(v.begin(), v.end(), true);
    for (size_t b = 0; b < backends; ++b) {
      if (!v[b] && crashed == backends - 1) ++table[b].ind1;
      if (v[b] && crashed == 1) ++table[b].ind2;
    }
  }
  return table;
}

}  // namespace evmdiff
