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

#include <map>

#include <gtest/gtest.h>

#include "evmdiff/abi.h"
#include "evmdiff/errors.h"
#include "evmdiff/inputgen.h"
#include "evmdiff/parser.h"

namespace evmdiff {
namespace {

AbiSignature Sig(std::string name, std::vector<TypeTag> params) {
  return AbiSignature{std::move(name), std::move(params)};
}

TEST(Abi, SelectorsAreSha256Prefixes) {
  // Reference digests computed outside the library.
  EXPECT_EQ(ToHex(SelectorOf("f()")), "19c10413");
  EXPECT_EQ(ToHex(SelectorOf("f(uint256,uint256)")), "45060da5");
}

TEST(InputGen, TwoWordLayout) {
  AbiSignature sig = Sig("f", {TypeTag::kUint256, TypeTag::kUint256});
  Bytes cd = EncodeCalldata(sig, std::vector{UintValue(1), UintValue(2)});
  ASSERT_EQ(cd.size(), 4u + 64u);
  EXPECT_EQ(ToHex(std::span(cd).first(4)), "45060da5");
  EXPECT_EQ(cd[4 + 31], 1);
  EXPECT_EQ(cd[4 + 63], 2);
  for (size_t i = 4; i < cd.size(); ++i) {
    if (i != 4 + 31 && i != 4 + 63) EXPECT_EQ(cd[i], 0) << i;
  }
}

TEST(InputGen, EmptyParamsIsSelectorOnly) {
  Rng rng(1);
  GeneratedInput in = GenParams(Sig("f", {}), ValuePool::Default(), rng);
  EXPECT_EQ(in.calldata.size(), 4u);
  EXPECT_TRUE(in.values.empty());
}

TEST(InputGen, BytesUseHeadTailLayout) {
  AbiSignature sig = Sig("g", {TypeTag::kBool, TypeTag::kBytes});
  Bytes payload = {0xaa, 0xbb, 0xcc};
  Bytes cd = EncodeCalldata(sig, std::vector{BoolValue(true), BytesValue(payload)});
  ASSERT_EQ(cd.size(), 4u + 64u + 32u + 32u);
  EXPECT_EQ(WordFromBytes(std::span(cd).subspan(4 + 32, 32)), 64);  // tail offset
  EXPECT_EQ(WordFromBytes(std::span(cd).subspan(4 + 64, 32)), 3);   // length
  EXPECT_EQ(cd[4 + 96], 0xaa);
}

TEST(InputGen, DecodeInvertsEncode) {
  Rng rng(5);
  ValuePool pool = ValuePool::Default();
  std::vector<TypeTag> all(kAllTypeTags.begin(), kAllTypeTags.end());
  for (int i = 0; i < 500; ++i) {
    std::vector<TypeTag> params;
    size_t n = UniformIndex(rng, 5);
    for (size_t k = 0; k < n; ++k) params.push_back(all[UniformIndex(rng, all.size())]);
    AbiSignature sig = Sig("h", params);
    GeneratedInput in = GenParams(sig, pool, rng);
    ASSERT_EQ(DecodeCalldata(sig, in.calldata), in.values);
  }
}

TEST(InputGen, PoolValuesAreUniform) {
  Rng rng(42);
  ValuePool pool = ValuePool::Default();
  AbiSignature sig = Sig("u", {TypeTag::kUint256});
  const auto& candidates = pool.For(TypeTag::kUint256);
  ASSERT_EQ(candidates.size(), 5u);
  std::map<Word, int> counts;
  const int kDraws = 10'000;
  for (int i = 0; i < kDraws; ++i) ++counts[GenParams(sig, pool, rng).values[0].word];
  ASSERT_EQ(counts.size(), 5u);
  for (const auto& [w, c] : counts) {
    EXPECT_NEAR(static_cast<double>(c) / kDraws, 0.2, 0.02) << ToDecimal(w);
  }
}

TEST(InputGen, DefaultPoolsFitTheirTypes) {
  ValuePool pool = ValuePool::Default();
  for (TypeTag t : kAllTypeTags) {
    ASSERT_GE(pool.For(t).size(), 2u);
    for (const auto& v : pool.For(t)) {
      EXPECT_EQ(v.type, t);
      EXPECT_TRUE(FitsType(v)) << v.ToString();
    }
  }
}

TEST(InputGen, ParseValues) {
  EXPECT_EQ(ParseAbiValue(TypeTag::kInt256, "-1").word, kWordMax);
  EXPECT_EQ(ParseAbiValue(TypeTag::kUint256, "0x10").word, 16);
  EXPECT_EQ(ParseAbiValue(TypeTag::kBool, "true").word, 1);
  EXPECT_EQ(ParseAbiValue(TypeTag::kBytes, "0xabcd").bytes, (Bytes{0xab, 0xcd}));
  EXPECT_THROW(ParseAbiValue(TypeTag::kBool, "2"), ConfigError);
  EXPECT_THROW(ParseAbiValue(TypeTag::kUint256, "abc"), ConfigError);
  EXPECT_THROW(ParseAbiValue(TypeTag::kAddress, "0x1" + std::string(40, '0')), ConfigError);
}

TEST(InputGen, PoolOverride) {
  ValuePool pool = ValuePool::Default();
  pool.OverrideFromJson(R"({"uint256": ["7", "9"], "bytes": ["0x", "0x01"]})");
  ASSERT_EQ(pool.For(TypeTag::kUint256).size(), 2u);
  EXPECT_EQ(pool.For(TypeTag::kUint256)[1].word, 9);
  EXPECT_THROW(pool.OverrideFromJson(R"({"uint256": ["7"]})"), ConfigError);
  EXPECT_THROW(pool.OverrideFromJson(R"({"float": ["1", "2"]})"), ConfigError);
}

TEST(InputGen, FixedParamsArePinned) {
  ContractAst ast = Parse(
      "contract A { function f(uint256 a, bool b, uint256 c) public { } }");
  Rng rng(3);
  std::map<std::string, std::string> fixed = {{"a", "1"}, {"c", "2"}};
  for (int i = 0; i < 20; ++i) {
    GeneratedInput in = GenParams(ast.functions[0], ValuePool::Default(), fixed, rng);
    EXPECT_EQ(in.values[0].word, 1);
    EXPECT_EQ(in.values[2].word, 2);
  }
}

}  // namespace
}  // namespace evmdiff
