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
#include <tuple>

#include <gtest/gtest.h>

#include "evmdiff/errors.h"
#include "evmdiff/parser.h"
#include "evmdiff/scheduler.h"
#include "support/paths.h"

namespace evmdiff {
namespace {

ContractAst Named(const std::string& name) {
  return Parse("contract " + name + " { function f() public { } }");
}

TEST(Scheduler, EmptyPoolThrows) {
  SeedPool pool;
  EXPECT_THROW(pool.Prioritize(), EmptyPool);
}

// Writes a pool directory holding the given (diff_pri, time_pri) entries.
SeedPool PoolWith(const std::vector<std::tuple<std::string, double, uint64_t>>& entries) {
  auto dir = testing::ScratchDir("state");
  std::filesystem::create_directories(dir / "seeds");
  std::string manifest = "{\"record\": 10, \"entries\": [";
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& [name, pri, time] = entries[i];
    std::string file = "seeds/" + std::to_string(i) + ".msol";
    std::ofstream(dir / file) << "contract " << name << " { function f() public { } }";
    manifest += (i ? "," : "") + std::string("{\"file\": \"") + file +
                "\", \"admission_diff\": " + std::to_string(pri) +
                ", \"diff_pri\": " + std::to_string(pri) +
                ", \"time_pri\": " + std::to_string(time) +
                ", \"admitted_at\": " + std::to_string(i) + ", \"lineage\": 0}";
  }
  std::ofstream(dir / "manifest.json") << manifest << "]}";
  SeedPool pool = SeedPool::Load(dir);
  std::filesystem::remove_all(dir);
  return pool;
}

TEST(Scheduler, WaitingTimeCanOutweighDiff) {
  SeedPool pool = PoolWith({{"A", 8, 0}, {"B", 3, 6}});
  EXPECT_EQ(pool.Prioritize().contract.name, "B");  // 3 + 6 = 9 > 8 + 0
  EXPECT_EQ(pool.entries()[0].time_pri, 1u);
  EXPECT_EQ(pool.entries()[1].time_pri, 0u);
}

TEST(Scheduler, SumWithTimeOvertakes) {
  SeedPool pool;
  pool.AddInitial(Named("A"), 8, 0);
  pool.AddInitial(Named("B"), 3, 1);
  // Pool normalizes against record 8: A=10, B=3.75.
  ASSERT_DOUBLE_EQ(pool.entries()[0].diff_pri, 10.0);
  ASSERT_DOUBLE_EQ(pool.entries()[1].diff_pri, 3.75);
  std::vector<std::string> picks;
  for (int i = 0; i < 8; ++i) picks.push_back(pool.Prioritize().contract.name);
  // B waits until 3.75 + t > 10, i.e. t = 7 -> eighth pick.
  EXPECT_EQ(picks, (std::vector<std::string>{"A", "A", "A", "A", "A", "A", "A", "B"}));
}

TEST(Scheduler, ChosenResetsAndOthersAge) {
  SeedPool pool;
  pool.AddInitial(Named("A"), 8, 0);
  pool.AddInitial(Named("B"), 3, 1);
  EXPECT_EQ(pool.Prioritize().contract.name, "A");
  EXPECT_EQ(pool.entries()[0].time_pri, 0u);
  EXPECT_EQ(pool.entries()[1].time_pri, 1u);
}

TEST(Scheduler, SingleEntry) {
  SeedPool pool;
  pool.AddInitial(Named("Only"), 0, 0);
  EXPECT_EQ(pool.Prioritize().contract.name, "Only");
  EXPECT_EQ(pool.Prioritize().contract.name, "Only");
}

TEST(Scheduler, TiesGoToEarliestAdmitted) {
  SeedPool pool;
  pool.AddInitial(Named("First"), 5, 0);
  pool.AddInitial(Named("Second"), 5, 1);
  EXPECT_EQ(pool.Prioritize().contract.name, "First");
}

TEST(Scheduler, AdmitIntoEmptyPool) {
  SeedPool pool;
  EXPECT_TRUE(pool.Admit(Named("X"), 346, 1, 0));
  ASSERT_EQ(pool.entries().size(), 1u);
  EXPECT_DOUBLE_EQ(pool.entries()[0].diff_pri, 10.0);
  EXPECT_DOUBLE_EQ(pool.record(), 346);
}

TEST(Scheduler, AdmitBelowRecordIsRejected) {
  SeedPool pool;
  pool.Admit(Named("X"), 1840, 1, 0);
  EXPECT_FALSE(pool.Admit(Named("Y"), 1000, 2, 0));
  EXPECT_EQ(pool.entries().size(), 1u);
  EXPECT_DOUBLE_EQ(pool.record(), 1840);
  EXPECT_FALSE(pool.Admit(Named("Z"), 1840, 3, 0));  // ties do not beat the record
}

TEST(Scheduler, NewRecordRescalesOlderEntries) {
  SeedPool pool;
  pool.Admit(Named("X"), 346, 1, 0);
  EXPECT_TRUE(pool.Admit(Named("Y"), 1840, 2, 0));
  ASSERT_EQ(pool.entries().size(), 2u);
  EXPECT_NEAR(pool.entries()[0].diff_pri, 10.0 * 346 / 1840, 1e-12);
  EXPECT_NEAR(pool.entries()[0].diff_pri, 1.88, 0.005);
  EXPECT_DOUBLE_EQ(pool.entries()[1].diff_pri, 10.0);
  EXPECT_EQ(pool.entries()[1].admitted_at, 2u);
}

TEST(Scheduler, CapEvictsLowestPriority) {
  SeedPool pool(2);
  pool.Admit(Named("X"), 1, 1, 0);
  pool.Admit(Named("Y"), 2, 2, 0);
  pool.Admit(Named("Z"), 4, 3, 0);
  ASSERT_EQ(pool.entries().size(), 2u);
  for (const auto& e : pool.entries()) EXPECT_NE(e.contract.name, "X");
}

TEST(Scheduler, SaveAndLoad) {
  auto dir = testing::ScratchDir("pool");
  SeedPool pool;
  pool.AddInitial(ParseFile(testing::ContractPath("vault")), 0.5, 0);
  pool.Admit(ParseFile(testing::ContractPath("adder")), 1.5, 4, 0);
  pool.Prioritize();
  pool.Save(dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
  SeedPool back = SeedPool::Load(dir);
  ASSERT_EQ(back.entries().size(), pool.entries().size());
  EXPECT_DOUBLE_EQ(back.record(), pool.record());
  for (size_t i = 0; i < back.entries().size(); ++i) {
    EXPECT_EQ(back.entries()[i].contract, pool.entries()[i].contract);
    EXPECT_DOUBLE_EQ(back.entries()[i].diff_pri, pool.entries()[i].diff_pri);
    EXPECT_EQ(back.entries()[i].time_pri, pool.entries()[i].time_pri);
    EXPECT_EQ(back.entries()[i].admitted_at, pool.entries()[i].admitted_at);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace evmdiff
