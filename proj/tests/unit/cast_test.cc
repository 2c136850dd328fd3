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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "evmdiff/cast.h"
#include "evmdiff/parser.h"
#include "support/paths.h"
#include "support/random_ast.h"

namespace evmdiff {
namespace {

std::set<std::string> CriticalSet(const ContractAst& ast) {
  auto paths = CriticalPaths(BuildCast(ast));
  return {paths.begin(), paths.end()};
}

TEST(Cast, DemoCallArgumentsAreCritical) {
  ContractAst ast = ParseFile(testing::ContractPath("demo"));
  auto critical = CriticalSet(ast);
  // The for loop is the third statement; its body holds the call.
  const std::string call = "functions[0].body[2].body[0]";
  EXPECT_TRUE(critical.count(call));
  EXPECT_TRUE(critical.count(call + ".call"));
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(critical.count(call + ".call.args[" + std::to_string(i) + "]")) << i;
  }
  // The loop header and the assert are not part of the call site.
  EXPECT_FALSE(critical.count("functions[0].body[2]"));
  EXPECT_FALSE(critical.count("functions[0].body[2].cond"));
  EXPECT_FALSE(critical.count("functions[0].body[0]"));
}

TEST(Cast, NoCallsMeansNoCriticalNodes) {
  ContractAst ast = ParseFile(testing::ContractPath("forTest"));
  EXPECT_TRUE(CriticalPaths(BuildCast(ast)).empty());
}

TEST(Cast, SendInsideIfBranchFlagsExactlyTheSendSubtree) {
  ContractAst ast = Parse(R"(
    contract S {
      function pay(address to, uint256 amount) public {
        if (amount > 1) {
          to.send(amount + 1);
        } else {
          amount = 0;
        }
      }
    })");
  // Hand-enumerated: the statement, the call and its argument subtrees.
  const std::string s = "functions[0].body[0].then[0]";
  std::set<std::string> expected = {s,
                                    s + ".call",
                                    s + ".call.args[0]",
                                    s + ".call.args[1]",
                                    s + ".call.args[1].lhs",
                                    s + ".call.args[1].rhs"};
  EXPECT_EQ(CriticalSet(ast), expected);
}

TEST(Cast, CallInsideExpressionMarksOnlyTheCall) {
  ContractAst ast = Parse(R"(
    contract S {
      function f(address a) public returns (bool) {
        bool ok = a.call(1) && true;
        return ok;
      }
    })");
  // The call subtree is critical; the other operand of && is not.
  std::set<std::string> expected = {"functions[0].body[0].init.lhs",
                                    "functions[0].body[0].init.lhs.args[0]",
                                    "functions[0].body[0].init.lhs.args[1]"};
  EXPECT_EQ(CriticalSet(ast), expected);
}

TEST(Cast, EraseInvertsBuild) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    ContractAst ast = testing::RandomContract(rng);
    ASSERT_EQ(EraseCast(BuildCast(ast)), ast);
  }
  for (const char* name : {"demo", "payout", "factory", "ledger"}) {
    ContractAst ast = ParseFile(testing::ContractPath(name));
    EXPECT_EQ(EraseCast(BuildCast(ast)), ast) << name;
  }
}

TEST(Cast, PathsAreUniqueAndCriticalIsSubset) {
  ContractAst ast = ParseFile(testing::ContractPath("payout"));
  CastTree cast = BuildCast(ast);
  auto all = AllPaths(cast);
  std::set<std::string> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  for (const auto& p : CriticalPaths(cast)) EXPECT_TRUE(unique.count(p)) << p;
  EXPECT_FALSE(CriticalPaths(cast).empty());
}

}  // namespace
}  // namespace evmdiff
