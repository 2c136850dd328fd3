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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "evmdiff/campaign.h"
#include "evmdiff/errors.h"
#include "support/paths.h"

namespace evmdiff {
namespace {

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CampaignConfig VaultConfig(uint64_t iterations) {
  CampaignConfig cfg;
  cfg.seeds = {testing::ContractPath("vault")};
  cfg.backends = {BackendSpec{"reference", Profile::kReference, {}, {}},
                  BackendSpec{"gas_variant", Profile::kGasVariant, {}, {}}};
  cfg.iterations = iterations;
  cfg.rng_seed = 7;
  cfg.limits.wall_limit = std::chrono::milliseconds(2000);
  return cfg;
}

TEST(Campaign, ZeroBudgetIsConfigError) {
  CampaignConfig cfg = VaultConfig(0);
  EXPECT_THROW(RunCampaign(cfg), ConfigError);
}

TEST(Campaign, IdenticalBackendsNeverDiverge) {
  CampaignConfig cfg = VaultConfig(60);
  cfg.backends = {BackendSpec{"a", Profile::kReference, {}, {}},
                  BackendSpec{"b", Profile::kReference, {}, {}}};
  uint64_t events = 0;
  CampaignHooks hooks;
  hooks.on_iteration = [&](const IterationEvent& e) {
    ++events;
    EXPECT_EQ(e.classification, Classification::kAllAgree);
    EXPECT_EQ(e.diff, 0.0);
  };
  CampaignReport r = RunCampaign(cfg, hooks);
  EXPECT_EQ(r.iterations_run, 60u);
  EXPECT_EQ(events, 60u);
  EXPECT_EQ(r.findings, 0u);
  EXPECT_EQ(r.divergent_mutants, 0u);
  EXPECT_FALSE(r.first_divergence_iteration.has_value());
}

TEST(Campaign, GasVariantDivergesOnVault) {
  CampaignReport r = RunCampaign(VaultConfig(200));
  EXPECT_GE(r.gas_divergent_mutants, 1u);
  ASSERT_TRUE(r.first_gas_divergence_iteration.has_value());
  EXPECT_LE(*r.first_gas_divergence_iteration, 200u);
  EXPECT_EQ(r.best_so_far.size(), 200u);
  for (size_t i = 1; i < r.best_so_far.size(); ++i) {
    EXPECT_GE(r.best_so_far[i], r.best_so_far[i - 1]);
  }
  ASSERT_EQ(r.ind_table.size(), 2u);
}

TEST(Campaign, WritesCorpusAndIsReproducible) {
  auto a = testing::ScratchDir("camp_a");
  auto b = testing::ScratchDir("camp_b");
  CampaignConfig cfg = VaultConfig(80);
  cfg.backends.push_back(BackendSpec{"trace_variant", Profile::kTraceVariant, {}, {}});
  cfg.corpus = a;
  CampaignReport ra = RunCampaign(cfg);
  cfg.corpus = b;
  CampaignReport rb = RunCampaign(cfg);
  for (const char* f : {"manifest.json", "weights.json", "report.json", "report.txt"}) {
    EXPECT_TRUE(std::filesystem::exists(a / f)) << f;
  }
  EXPECT_EQ(Slurp(a / "findings" / "index.json"), Slurp(b / "findings" / "index.json"));
  EXPECT_EQ(Slurp(a / "manifest.json"), Slurp(b / "manifest.json"));
  EXPECT_EQ(ra.best_so_far, rb.best_so_far);
  EXPECT_EQ(ra.final_weights, rb.final_weights);
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}

TEST(Campaign, ReportJsonRoundTrip) {
  CampaignReport r = RunCampaign(VaultConfig(30));
  CampaignReport back = ReportFromJson(ReportToJson(r));
  EXPECT_EQ(ReportToJson(back), ReportToJson(r));
  EXPECT_THROW(ReportFromJson("[1]"), ConfigError);
  std::string text = RenderReport(r);
  EXPECT_NE(text.find("reference"), std::string::npos);
  EXPECT_NE(text.find("gas_variant"), std::string::npos);
}

TEST(Campaign, MedianOfOddAndEvenCounts) {
  EXPECT_DOUBLE_EQ(Median({5, 1, 3}), 3.0);
  EXPECT_DOUBLE_EQ(Median({4, 1, 3, 2}), 2.5);
  EXPECT_DOUBLE_EQ(Median({}), 0.0);
}

TEST(Campaign, CompareStrategiesShape) {
  CampaignConfig cfg = VaultConfig(40);
  std::vector<StrategyChoice> strategies = {StrategyChoice::kAllComb, StrategyChoice::kRandomComb};
  auto series = CompareStrategies(cfg, strategies, 3);
  ASSERT_EQ(series.size(), 2u);
  for (size_t i = 0; i < series.size(); ++i) {
    EXPECT_EQ(series[i].strategy, strategies[i]);
    ASSERT_EQ(series[i].mean_best.size(), 40u);
    for (size_t k = 1; k < series[i].mean_best.size(); ++k) {
      EXPECT_GE(series[i].mean_best[k], series[i].mean_best[k - 1]);
    }
    ASSERT_EQ(series[i].first_gas_divergence.size(), 3u);
    for (uint64_t v : series[i].first_gas_divergence) EXPECT_LE(v, 41u);
    EXPECT_DOUBLE_EQ(series[i].median_first_gas_divergence,
                     Median(series[i].first_gas_divergence));
  }
  EXPECT_NE(RenderComparison(series).find("AllComb"), std::string::npos);
}

}  // namespace
}  // namespace evmdiff
