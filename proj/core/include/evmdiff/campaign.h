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

#ifndef EVMDIFF_CAMPAIGN_H_
#define EVMDIFF_CAMPAIGN_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evmdiff/config.h"
#include "evmdiff/diff.h"
#include "evmdiff/strategy.h"
#include "evmdiff/weights.h"

namespace evmdiff {

struct IndRow {
  std::string backend_id;
  size_t ind1 = 0;
  size_t ind2 = 0;
};

struct CampaignReport {
  uint64_t rng_seed = 0;
  StrategyChoice strategy = StrategyChoice::kAllComb;
  std::vector<std::string> roster;
  uint64_t iterations_run = 0;
  uint64_t mutants_generated = 0;
  uint64_t divergent_mutants = 0;      // aggregate_diff > 0
  uint64_t gas_divergent_mutants = 0;  // some pair with gas_diff > 0
  uint64_t trace_only_mutants = 0;     // some op_diff > 0 while out_vul is false
  uint64_t out_vul_mutants = 0;
  uint64_t crash_asymmetries = 0;
  uint64_t findings = 0;  // distinct findings persisted, initial seeds included
  uint64_t admissions = 0;
  std::optional<uint64_t> first_divergence_iteration;
  std::optional<uint64_t> first_gas_divergence_iteration;
  std::optional<uint64_t> first_finding_iteration;
  double record = 0;
  std::vector<double> best_so_far;  // one point per iteration
  std::vector<IndRow> ind_table;
  MutatorWeights final_weights;
  double wall_time_s = 0;  // the only field that varies between identical runs
};

struct IterationEvent {
  uint64_t iteration;
  double diff;
  Classification classification;
  const std::vector<MutatorId>* applied;
};

struct CampaignHooks {
  std::function<void(const IterationEvent&)> on_iteration;
  std::function<void(const std::string&)> on_warning;
};

// Runs the fuzzing loop. When cfg.corpus is set, the seed pool, weights,
// findings and reports are written there. Throws ConfigError or
// NoViableSeeds.
CampaignReport RunCampaign(const CampaignConfig& cfg, const CampaignHooks& hooks = {});

struct StrategySeries {
  StrategyChoice strategy;
  // Mean best-so-far diff across trials, one point per iteration.
  std::vector<double> mean_best;
  // Iteration of the first gas divergence per trial; budget + 1 if none.
  std::vector<uint64_t> first_gas_divergence;
  double median_first_gas_divergence = 0;
};

// Runs one campaign per (strategy, trial). Trial k uses a seed derived from
// cfg.rng_seed and k, shared by every strategy. Nothing is persisted.
std::vector<StrategySeries> CompareStrategies(const CampaignConfig& cfg,
                                              const std::vector<StrategyChoice>& strategies,
                                              int trials, const CampaignHooks& hooks = {});

double Median(std::vector<uint64_t> values);

std::string ReportToJson(const CampaignReport& report);
CampaignReport ReportFromJson(std::string_view text);  // throws ConfigError
std::string RenderReport(const CampaignReport& report);
std::string RenderComparison(const std::vector<StrategySeries>& series);

}  // namespace evmdiff

#endif  // EVMDIFF_CAMPAIGN_H_
