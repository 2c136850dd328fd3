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

#ifndef EVMDIFF_CAST_H_
#define EVMDIFF_CAST_H_

#include <string>
#include <vector>

#include "evmdiff/ast.h"

namespace evmdiff {

enum class CastKind {
  kContract, kStateVar, kFunction, kParam, kBlock,
  kVarDecl, kAssign, kIf, kWhile, kFor, kAssert, kReturn, kBreak, kContinue,
  kExprStmt,
  kLiteral, kVarRef, kBinary, kUnary, kCriticalCall,
  kEmpty,  // placeholder for an absent optional child
};

// One node of the critical-location-annotated tree. `attrs` carries the
// node's scalar payload (names, operators, type tags) so that the original
// ContractAst can be rebuilt from the tree alone.
struct CastNode {
  CastKind kind;
  std::vector<std::string> attrs;
  std::string path;
  bool critical = false;
  std::vector<CastNode> children;
};

struct CastTree {
  CastNode root;
};

// A node is critical iff it lies in the subtree of a critical call: either
// a statement whose expression is a CriticalCall, or a CriticalCall nested in
// another expression.
CastTree BuildCast(const ContractAst& ast);

// Drops the annotation and rebuilds the syntax tree.
ContractAst EraseCast(const CastTree& cast);

std::vector<std::string> CriticalPaths(const CastTree& cast);
std::vector<std::string> AllPaths(const CastTree& cast);

}  // namespace evmdiff

#endif  // EVMDIFF_CAST_H_
