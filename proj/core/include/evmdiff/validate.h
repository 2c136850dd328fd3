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

#ifndef EVMDIFF_VALIDATE_H_
#define EVMDIFF_VALIDATE_H_

#include <string>
#include <vector>

#include "evmdiff/ast.h"

namespace evmdiff {

// Rule names reported in Violation::rule.
inline constexpr char kRuleUnresolvedName[] = "unresolved-name";
inline constexpr char kRuleDuplicateFunction[] = "duplicate-function";
inline constexpr char kRuleDuplicateDeclaration[] = "duplicate-declaration";
inline constexpr char kRuleBreakOutsideLoop[] = "break-outside-loop";
inline constexpr char kRuleContinueOutsideLoop[] = "continue-outside-loop";
inline constexpr char kRuleMissingReturn[] = "missing-return";
inline constexpr char kRuleReturnMismatch[] = "return-value-mismatch";
inline constexpr char kRuleLiteralRange[] = "literal-out-of-range";
inline constexpr char kRuleCallArity[] = "bad-call-arity";

struct Violation {
  std::string path;
  std::string rule;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

std::vector<Violation> Validate(const ContractAst& ast);

// True when every path through `block` ends in a return or a statically
// failing assert.
bool AlwaysTerminates(const Block& block);

}  // namespace evmdiff

#endif  // EVMDIFF_VALIDATE_H_
