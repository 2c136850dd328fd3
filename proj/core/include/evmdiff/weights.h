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

#ifndef EVMDIFF_WEIGHTS_H_
#define EVMDIFF_WEIGHTS_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "evmdiff/mutators.h"

namespace evmdiff {

// Per-mutator selection weights; non-negative and summing to one.
class MutatorWeights {
 public:
  MutatorWeights();  // uniform, 1/8 each

  double operator[](MutatorId id) const { return w_[static_cast<size_t>(id - 1)]; }

  // Mutator ids by descending weight, ties by ascending id.
  std::vector<MutatorId> Ordered() const;

  // Rewards the mutators applied in an iteration that raised the diff:
  // each weight is scaled by (1 + alpha * delta / (diff_after + 1e-9)) and the
  // table is renormalized. Non-positive deltas leave it bit-identical.
  void Update(const std::vector<MutatorId>& applied, double delta_diff, double diff_after,
              double alpha = 0.1);

  std::string ToJson() const;  // {"1": w1, ..., "8": w8}
  static MutatorWeights FromJson(std::string_view text);  // throws ConfigError
  void Save(const std::filesystem::path& path) const;
  static MutatorWeights Load(const std::filesystem::path& path);

  bool operator==(const MutatorWeights&) const = default;

 private:
  std::array<double, kNumMutators> w_;
};

}  // namespace evmdiff

#endif  // EVMDIFF_WEIGHTS_H_
