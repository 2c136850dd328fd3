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

#ifndef EVMDIFF_PARSER_H_
#define EVMDIFF_PARSER_H_

#include <filesystem>
#include <string_view>

#include "evmdiff/ast.h"

namespace evmdiff {

// Parses a contract source and validates it. Throws SyntaxError on malformed
// input and TypeError when the tree violates a language rule (unresolved
// name, out-of-range literal, misplaced break, ...).
//
// Grammar (whitespace-insensitive, C-style tokens and comments):
//
//   unit      := ('pragma' <anything> ';')* contract
//   contract  := 'contract' ID '{' (statevar | function)* '}'
//   statevar  := type ID ';'
//   function  := 'function' ID '(' params? ')' attr* ('returns' '(' type ')')?
//                block
//   statement := type ID ('=' expr)? ';' | assign ';' | if | while | for
//              | 'assert' '(' expr ')' ';' | 'return' expr? ';'
//              | 'break' ';' | 'continue' ';' | call ';'
//   assign    := ID ('='|'+='|'-='|'*='|'/='|'%=') expr
//              | ('++'|'--') ID | ID ('++'|'--')
//   call      := primary '.' ('call'|'delegatecall'|'callcode'|'send'
//                |'transfer') '(' args ')' | 'new' ID '(' args ')'
ContractAst Parse(std::string_view source);

// Parses without running the validator. Used to construct deliberately
// invalid trees in tests and by the validator's own checks.
ContractAst ParseUnchecked(std::string_view source);

ContractAst ParseFile(const std::filesystem::path& path);

}  // namespace evmdiff

#endif  // EVMDIFF_PARSER_H_
