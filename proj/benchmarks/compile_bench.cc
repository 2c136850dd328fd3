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

#include <benchmark/benchmark.h>

#include "evmdiff/compiler.h"
#include "evmdiff/parser.h"
#include "evmdiff/printer.h"
#include "evmdiff/validate.h"

namespace evmdiff {
namespace {

std::string Source() {
  return EmitSource(ParseFile(std::filesystem::path(EVMDIFF_CONTRACTS_DIR) / "multipath.msol"));
}

void BM_Parse(benchmark::State& state) {
  std::string src = Source();
  for (auto _ : state) benchmark::DoNotOptimize(Parse(src));
}
BENCHMARK(BM_Parse);

void BM_Validate(benchmark::State& state) {
  ContractAst ast = Parse(Source());
  for (auto _ : state) benchmark::DoNotOptimize(Validate(ast));
}
BENCHMARK(BM_Validate);

void BM_Compile(benchmark::State& state) {
  ContractAst ast = Parse(Source());
  for (auto _ : state) benchmark::DoNotOptimize(CompileContract(ast));
}
BENCHMARK(BM_Compile);

}  // namespace
}  // namespace evmdiff
