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

#include "evmdiff/abi.h"
#include "evmdiff/backend.h"
#include "evmdiff/compiler.h"
#include "evmdiff/harness.h"
#include "evmdiff/parser.h"
#include "evmdiff/vm.h"

namespace evmdiff {
namespace {

ContractAst Load(const char* name) {
  return ParseFile(std::filesystem::path(EVMDIFF_CONTRACTS_DIR) / (std::string(name) + ".msol"));
}

// Bounded loop through TestWhile: the step limit sets the trace length.
void BM_ExecuteLoop(benchmark::State& state) {
  CompiledFunction fn = Compile(Load("forTest"), "TestWhile");
  Bytes calldata = EncodeCalldata(fn.signature, std::vector{UintValue(1), UintValue(2)});
  VmConfig cfg;
  cfg.step_limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    ExecutionRecord r = Execute(fn.code.code, calldata, cfg);
    benchmark::DoNotOptimize(r.op_seq.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExecuteLoop)->Arg(1'000)->Arg(100'000);

void BM_HarnessFourBackends(benchmark::State& state) {
  ContractAst ast = Load("vault");
  CompiledFunction fn = Compile(ast, ast.functions[0].name);
  std::vector<AbiValue> args(fn.signature.params.size(), UintValue(5));
  Bytes calldata = EncodeCalldata(fn.signature, args);
  std::vector<BackendHandle> roster = {
      MakeBackend(Profile::kReference), MakeBackend(Profile::kGasVariant),
      MakeBackend(Profile::kTraceVariant), MakeBackend(Profile::kFragile)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunAll(roster, fn.code.code, calldata, Limits{}));
  }
}
BENCHMARK(BM_HarnessFourBackends);

}  // namespace
}  // namespace evmdiff
