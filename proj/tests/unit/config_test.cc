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

#include <gtest/gtest.h>

#include "evmdiff/config.h"
#include "evmdiff/errors.h"
#include "support/paths.h"

namespace evmdiff {
namespace {

TEST(Config, FullDocument) {
  CampaignConfig cfg = ConfigFromJson(R"({
    "corpus": "out",
    "seeds": ["a.msol", "/abs/b.msol"],
    "target": "deposit",
    "backends": ["reference", {"id": "gv", "profile": "gas_variant"},
                 {"id": "ext", "external": "bin/adapter", "args": ["--profile", "fragile"]}],
    "strategy": "OddComb",
    "iterations": 12,
    "wall_budget_s": 1.5,
    "seed": 99,
    "limits": {"gas_limit": 5000, "step_limit": 700, "wall_limit_ms": 250},
    "gas_variant": {"cost_delta": {"SLOAD": 3}, "refund_cap_divisor": 4},
    "value_pools": {"uint256": ["1", "2", "3"]},
    "fixed_inputs": {"x": "1"},
    "regenerate_inputs": true,
    "pool_cap": 16,
    "alpha": 0.5
  })",
                                      "/base");
  EXPECT_EQ(cfg.corpus, std::filesystem::path("/base/out"));
  ASSERT_EQ(cfg.seeds.size(), 2u);
  EXPECT_EQ(cfg.seeds[0], std::filesystem::path("/base/a.msol"));
  EXPECT_EQ(cfg.seeds[1], std::filesystem::path("/abs/b.msol"));
  EXPECT_EQ(cfg.target, "deposit");
  ASSERT_EQ(cfg.backends.size(), 3u);
  EXPECT_EQ(cfg.backends[0].id, "reference");
  EXPECT_EQ(cfg.backends[0].profile, Profile::kReference);
  EXPECT_EQ(cfg.backends[1].id, "gv");
  EXPECT_EQ(cfg.backends[1].profile, Profile::kGasVariant);
  EXPECT_FALSE(cfg.backends[2].profile.has_value());
  EXPECT_EQ(cfg.backends[2].executable, std::filesystem::path("/base/bin/adapter"));
  EXPECT_EQ(cfg.backends[2].args, (std::vector<std::string>{"--profile", "fragile"}));
  EXPECT_EQ(cfg.strategy, StrategyChoice::kOddComb);
  EXPECT_EQ(cfg.iterations, 12u);
  EXPECT_EQ(cfg.wall_budget, std::chrono::milliseconds(1500));
  EXPECT_EQ(cfg.rng_seed, 99u);
  EXPECT_EQ(cfg.limits.gas_limit, 5000u);
  EXPECT_EQ(cfg.limits.step_limit, 700u);
  EXPECT_EQ(cfg.limits.wall_limit, std::chrono::milliseconds(250));
  EXPECT_EQ(cfg.profiles.gas_variant.cost_delta, (std::map<std::string, int64_t>{{"SLOAD", 3}}));
  EXPECT_EQ(cfg.profiles.gas_variant.refund_cap_divisor, 4u);
  EXPECT_EQ(cfg.pools.For(TypeTag::kUint256).size(), 3u);
  EXPECT_EQ(cfg.fixed_inputs.at("x"), "1");
  EXPECT_TRUE(cfg.regenerate_inputs);
  EXPECT_EQ(cfg.pool_cap, 16u);
  EXPECT_DOUBLE_EQ(cfg.alpha, 0.5);
}

TEST(Config, Rejections) {
  EXPECT_THROW(ConfigFromJson("{", "."), ConfigError);
  EXPECT_THROW(ConfigFromJson(R"({"itertions": 5})", "."), ConfigError);
  EXPECT_THROW(ConfigFromJson(R"({"strategy": "Best"})", "."), ConfigError);
  EXPECT_THROW(ConfigFromJson(R"({"backends": ["warp"]})", "."), ConfigError);
  EXPECT_THROW(ConfigFromJson(R"({"iterations": -1})", "."), ConfigError);
}

TEST(Config, CheckRejectsZeroBudgetAndSmallRoster) {
  CampaignConfig cfg = ConfigFromJson(R"({"seeds": ["x.msol"], "backends": ["reference",
                                           "gas_variant"]})",
                                      ".");
  EXPECT_NO_THROW(CheckConfig(cfg));
  cfg.iterations = 0;
  EXPECT_THROW(CheckConfig(cfg), ConfigError);
  cfg.iterations = 5;
  cfg.backends.pop_back();
  EXPECT_THROW(CheckConfig(cfg), Error);
}

TEST(Config, LoadResolvesAgainstFileDirectory) {
  auto dir = testing::ScratchDir("config");
  std::ofstream(dir / "c.json") << R"({"seeds": ["s.msol"], "corpus": "out"})";
  CampaignConfig cfg = LoadConfig(dir / "c.json");
  EXPECT_EQ(cfg.seeds.at(0), dir / "s.msol");
  EXPECT_EQ(cfg.corpus, dir / "out");
  std::filesystem::remove_all(dir);
}

TEST(Config, RosterBuildsBackends) {
  CampaignConfig cfg = ConfigFromJson(R"({"backends": ["reference", "trace_variant"]})", ".");
  auto roster = BuildRoster(cfg);
  ASSERT_EQ(roster.size(), 2u);
  EXPECT_EQ(roster[1]->id(), "trace_variant");
  EXPECT_EQ(roster[1]->kind(), BackendKind::kBuiltin);
}

}  // namespace
}  // namespace evmdiff
