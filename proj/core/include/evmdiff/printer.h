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

#ifndef EVMDIFF_PRINTER_H_
#define EVMDIFF_PRINTER_H_

#include <string>

#include "evmdiff/ast.h"

namespace evmdiff {

// Regenerates source text. Parse(EmitSource(ast)) == ast for every valid ast.
std::string EmitSource(const ContractAst& ast);
std::string EmitExpression(const Expression& expr);

// Deterministic indented dump with a fixed field order, for golden tests and
// debugging output.
std::string DumpAst(const ContractAst& ast);

}  // namespace evmdiff

#endif  // EVMDIFF_PRINTER_H_
