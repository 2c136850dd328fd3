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

#ifndef EVMDIFF_FINDINGS_H_
#define EVMDIFF_FINDINGS_H_

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evmdiff/config.h"
#include "evmdiff/diff.h"
#include "evmdiff/vm.h"

namespace evmdiff {

// Everything needed to re-run one inconsistent execution.
struct InconsistencyRecord {
  uint64_t iteration = 0;
  std::string source;
  std::string target;
  Bytes calldata;
  std::vector<std::string> inputs;
  std::vector<BackendSpec> roster;
  Limits limits;
  ProfileOptions profiles;
  std::vector<ExecutionRecord> records;
  DiffReport diff;
};

// Lowercase hex SHA-256 of the text.
std::string Sha256Hex(std::string_view text);

// Findings are only worth storing when outputs differ or a backend crashed
// alone.
bool IsFinding(const DiffReport& diff);

std::string FindingToJson(const InconsistencyRecord& rec);
InconsistencyRecord FindingFromJson(std::string_view text);  // throws InvalidFinding
InconsistencyRecord LoadFinding(const std::filesystem::path& path);

// Writes one file per distinct (classification, source hash) under `dir`
// and maintains dir/index.json. An empty dir keeps findings in memory only.
class FindingStore {
 public:
  explicit FindingStore(std::filesystem::path dir);

  // Returns false for duplicates.
  bool Add(const InconsistencyRecord& rec);

  size_t size() const { return index_.size(); }
  const std::filesystem::path& dir() const { return dir_; }

  // Deterministic JSON index (no timing data).
  std::string IndexJson() const;

 private:
  struct Entry {
    std::string file;
    uint64_t iteration;
    Classification classification;
    std::string hash;
    double aggregate_diff;
    std::vector<std::pair<std::string, ExecStatus>> statuses;
  };

  void WriteIndex() const;

  std::filesystem::path dir_;
  std::set<std::pair<Classification, std::string>> seen_;
  std::vector<Entry> index_;
};

struct ReplayResult {
  std::vector<ExecutionRecord> records;
  DiffReport diff;
};

// Re-runs a finding on `available` backends, matched by id. Throws
// StaleFinding if a recorded backend is missing and InvalidFinding for a
// record that was never a finding.
ReplayResult Replay(const InconsistencyRecord& rec, std::span<const BackendHandle> available);

// Rebuilds the recorded roster (external adapters must still exist).
ReplayResult Replay(const InconsistencyRecord& rec);

}  // namespace evmdiff

#endif  // EVMDIFF_FINDINGS_H_
