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

#ifndef EVMDIFF_COMPILER_H_
#define EVMDIFF_COMPILER_H_

#include <string_view>
#include <vector>

#include "evmdiff/abi.h"
#include "evmdiff/ast.h"
#include "evmdiff/bytecode.h"

namespace evmdiff {

// Bytecode layout:
//   - dispatcher: selector = CALLDATALOAD(0) / 2^224, compared against every
//     externally callable function; no match reverts with empty data;
//   - per function: parameters copied from calldata slots 4 + 32*i into
//     memory, locals live in 32-byte memory slots, state variables in
//     storage slots numbered by declaration order;
//   - `return e` writes e to memory[0..32) and RETURNs it, falling off the
//     end STOPs with empty output;
//   - assert lowers to ISZERO + JUMPI to a shared INVALID block;
//   - critical calls lower to CALL with a fixed 2300 stipend, whose stub
//     always pushes 1.
struct CompiledContract {
  Bytecode code;
  std::vector<AbiSignature> entry_points;
};

struct CompiledFunction {
  Bytecode code;
  AbiSignature signature;
};

// Compiles the whole contract. Throws CompileError on constructs the
// backend cannot express (unresolved names, code larger than 64 KiB).
CompiledContract CompileContract(const ContractAst& ast);

// Compiles the contract and resolves the signature of `function`, which must
// exist and be externally callable.
CompiledFunction Compile(const ContractAst& ast, std::string_view function);

}  // namespace evmdiff

#endif  // EVMDIFF_COMPILER_H_
