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

#ifndef EVMDIFF_CONFIG_H_
#define EVMDIFF_CONFIG_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evmdiff/backend.h"
#include "evmdiff/inputgen.h"
#include "evmdiff/strategy.h"

namespace evmdiff {

// One roster entry: either a builtin profile or an external adapter.
struct BackendSpec {
  std::string id;
  std::optional<Profile> profile;
  std::filesystem::path executable;  // external only
  std::vector<std::string> args;     // external only
  bool operator==(const BackendSpec&) const = default;
};

struct CampaignConfig {
  std::filesystem::path corpus;  // empty: nothing is written
  std::vector<std::filesystem::path> seeds;
  std::string target;  // function to call; empty picks the first callable one
  std::vector<BackendSpec> backends;
  StrategyChoice strategy = StrategyChoice::kAllComb;
  uint64_t iterations = 1000;
  std::chrono::milliseconds wall_budget{0};  // zero means no wall-clock budget
  uint64_t rng_seed = 1;
  Limits limits;
  ProfileOptions profiles;
  ValuePool pools = ValuePool::Default();
  std::map<std::string, std::string> fixed_inputs;  // param name -> value text
  bool regenerate_inputs = false;
  // Continue from the pool and weights already stored in the corpus.
  bool resume = false;
  size_t pool_cap = 4096;
  double alpha = 0.1;
};

// Parses a JSON config. Relative paths resolve against `base_dir`.
CampaignConfig ConfigFromJson(std::string_view text, const std::filesystem::path& base_dir);
CampaignConfig LoadConfig(const std::filesystem::path& path);

// Throws ConfigError when the config cannot drive a campaign.
void CheckConfig(const CampaignConfig& cfg);

std::vector<BackendHandle> BuildRoster(const CampaignConfig& cfg);

}  // namespace evmdiff

#endif  // EVMDIFF_CONFIG_H_
