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
#include <functional>

#include <gtest/gtest.h>

#include "evmdiff/cast.h"
#include "evmdiff/compiler.h"
#include "evmdiff/errors.h"
#include "evmdiff/mutators.h"
#include "evmdiff/parser.h"
#include "evmdiff/printer.h"
#include "evmdiff/validate.h"
#include "support/paths.h"

namespace evmdiff {
namespace {

MutationOutcome Mutate(const ContractAst& ast, MutatorId id, uint64_t seed = 1) {
  Rng rng(seed);
  return ApplyMutator(BuildCast(ast), id, rng);
}

void ExpectSound(const ContractAst& ast) {
  std::string text = EmitSource(ast);
  ContractAst back = Parse(text);  // throws on syntax or validation failure
  EXPECT_TRUE(Validate(back).empty());
  EXPECT_EQ(back, ast);
  EXPECT_NO_THROW(CompileContract(back));
}

int CountIf(const ContractAst& ast, bool (*pred)(const Statement&)) {
  int n = 0;
  std::function<void(const Block&)> walk = [&](const Block& b) {
    for (const auto& s : b) {
      n += pred(s);
      if (auto* i = std::get_if<IfStmt>(&s.node)) {
        walk(i->then_body);
        if (i->else_body) walk(*i->else_body);
      } else if (auto* w = std::get_if<WhileStmt>(&s.node)) {
        walk(w->body);
      } else if (auto* f = std::get_if<ForStmt>(&s.node)) {
        walk(f->body);
      }
    }
  };
  for (const auto& fn : ast.functions) walk(fn.body);
  return n;
}

bool IsAssert(const Statement& s) { return std::holds_alternative<AssertStmt>(s.node); }
bool IsValueReturn(const Statement& s) {
  auto* r = std::get_if<ReturnStmt>(&s.node);
  return r && r->value;
}
bool IsJump(const Statement& s) {
  return std::holds_alternative<BreakStmt>(s.node) || std::holds_alternative<ContinueStmt>(s.node);
}

TEST(Mutators, ConditionalOperatorNegates) {
  ContractAst ast = Parse(
      "contract A { function f(uint256 a, uint256 b) public { if (a > b) { a = b; } } }");
  auto out = Mutate(ast, kConditionalOperator);
  EXPECT_NE(EmitSource(out.mutated).find("if (a <= b)"), std::string::npos);
  EXPECT_EQ(out.applied, std::vector<MutatorId>{kConditionalOperator});
  ExpectSound(out.mutated);
}

TEST(Mutators, ConditionalOperatorNegatesEveryComparison) {
  ContractAst ast = Parse(
      "contract A { function f(uint256 a, uint256 b) public returns (bool) { "
      "return a == b || a < b; } }");
  std::string text = EmitSource(Mutate(ast, kConditionalOperator).mutated);
  EXPECT_NE(text.find("(a != b) || (a >= b)"), std::string::npos) << text;
}

TEST(Mutators, LoopBoundPlusNinetyNine) {
  ContractAst ast = Parse(
      "contract A { uint256 s; function f() public { for (uint i = 0; i < 100; ++i) { s += i; } } }");
  auto out = Mutate(ast, kLoopOperator);
  EXPECT_NE(EmitSource(out.mutated).find("i < 199"), std::string::npos);
  ExpectSound(out.mutated);
}

TEST(Mutators, LoopOperatorNeedsALoop) {
  ContractAst ast = ParseFile(testing::ContractPath("adder"));
  EXPECT_THROW(Mutate(ast, kLoopOperator), NoApplicableSite);
}

TEST(Mutators, ReturnStatementNeedsAReturn) {
  ContractAst ast = Parse("contract A { uint256 s; function f(uint256 a) public { s = a; } }");
  try {
    Mutate(ast, kReturnStatement);
    FAIL();
  } catch (const NoApplicableSite& e) {
    EXPECT_EQ(e.mutator(), kReturnStatement);
  }
}

TEST(Mutators, ReturnStatementDropsValueAndType) {
  ContractAst ast = ParseFile(testing::ContractPath("adder"));
  auto out = Mutate(ast, kReturnStatement);
  EXPECT_FALSE(out.mutated.functions[0].returns.has_value());
  EXPECT_EQ(CountIf(out.mutated, IsValueReturn), 0);
  ExpectSound(out.mutated);
}

TEST(Mutators, ArithmeticOperatorReplaces) {
  ContractAst ast = ParseFile(testing::ContractPath("adder"));
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto out = Mutate(ast, kArithmeticOperator, seed);
    const auto& ret = std::get<ReturnStmt>(out.mutated.functions[0].body[0].node);
    const auto& b = std::get<BinaryExpr>(ret.value->node);
    EXPECT_TRUE(IsArithmetic(b.op));
    EXPECT_NE(b.op, BinaryOp::kAdd);
  }
}

TEST(Mutators, LocalVariableChangesADeclType) {
  ContractAst ast = ParseFile(testing::ContractPath("vault"));
  auto out = Mutate(ast, kLocalVariable);
  const auto& before = std::get<VarDecl>(ast.functions[0].body[0].node);
  const auto& after = std::get<VarDecl>(out.mutated.functions[0].body[0].node);
  EXPECT_NE(before.type, after.type);
  ExpectSound(out.mutated);
}

TEST(Mutators, FunctionPropertyEditsAttributes) {
  ContractAst ast = ParseFile(testing::ContractPath("ledger"));
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto out = Mutate(ast, kFunctionProperty, seed);
    bool changed = false;
    for (size_t i = 0; i < ast.functions.size(); ++i) {
      const auto& a = ast.functions[i];
      const auto& b = out.mutated.functions[i];
      changed |= a.visibility != b.visibility || a.mutability != b.mutability;
      EXPECT_EQ(a.body, b.body);
    }
    EXPECT_TRUE(changed);
    ExpectSound(out.mutated);
  }
}

TEST(Mutators, AssertStatementInsertsOrDeletesOne) {
  ContractAst ast = ParseFile(testing::ContractPath("demo"));
  int before = CountIf(ast, IsAssert);
  bool saw_insert = false;
  bool saw_delete = false;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    auto out = Mutate(ast, kAssertStatement, seed);
    int after = CountIf(out.mutated, IsAssert);
    EXPECT_EQ(std::abs(after - before), 1);
    saw_insert |= after > before;
    saw_delete |= after < before;
    ExpectSound(out.mutated);
  }
  EXPECT_TRUE(saw_insert);
  EXPECT_TRUE(saw_delete);
}

TEST(Mutators, ControlStructureAddsBreakOrContinue) {
  ContractAst ast = ParseFile(testing::ContractPath("counter"));
  int before = CountIf(ast, IsJump);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto out = Mutate(ast, kControlStructure, seed);
    EXPECT_EQ(CountIf(out.mutated, IsJump), before + 1);
    ExpectSound(out.mutated);
  }
  EXPECT_THROW(Mutate(ParseFile(testing::ContractPath("adder")), kControlStructure),
               NoApplicableSite);
}

TEST(Mutators, SameSeedSameMutant) {
  ContractAst ast = ParseFile(testing::ContractPath("multipath"));
  for (MutatorId id : kAllMutators) {
    try {
      auto a = Mutate(ast, id, 77);
      auto b = Mutate(ast, id, 77);
      EXPECT_EQ(a.mutated, b.mutated) << id;
      EXPECT_EQ(a.sites, b.sites);
    } catch (const NoApplicableSite&) {
    }
  }
}

TEST(Mutators, EveryOutcomeIsSound) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(EVMDIFF_CONTRACTS_DIR)) {
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ContractAst> corpus;
  for (const auto& f : files) corpus.push_back(ParseFile(f));
  Rng rng(2024);
  int produced = 0;
  for (int i = 0; i < 400; ++i) {
    const ContractAst& c = corpus[UniformIndex(rng, corpus.size())];
    MutatorId id = kAllMutators[UniformIndex(rng, kAllMutators.size())];
    try {
      auto out = ApplyMutator(BuildCast(c), id, rng);
      ASSERT_NE(out.mutated, c);
      ExpectSound(out.mutated);
      ++produced;
    } catch (const NoApplicableSite&) {
    }
  }
  EXPECT_GT(produced, 200);
}

TEST(Mutators, Names) {
  for (MutatorId id : kAllMutators) EXPECT_FALSE(MutatorName(id).empty());
}

}  // namespace
}  // namespace evmdiff
