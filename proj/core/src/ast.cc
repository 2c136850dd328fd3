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

#include "evmdiff/ast.h"

namespace evmdiff {

std::string_view TypeTagName(TypeTag tag) {
  switch (tag) {
    case TypeTag::kUint256: return "uint256";
    case TypeTag::kInt256: return "int256";
    case TypeTag::kBool: return "bool";
    case TypeTag::kAddress: return "address";
    case TypeTag::kBytes32: return "bytes32";
    case TypeTag::kBytes: return "bytes";
  }
  return "?";
}

std::optional<TypeTag> TypeTagFromName(std::string_view name) {
  if (name == "uint" || name == "uint256") return TypeTag::kUint256;
  if (name == "int" || name == "int256") return TypeTag::kInt256;
  if (name == "bool") return TypeTag::kBool;
  if (name == "address") return TypeTag::kAddress;
  if (name == "bytes32") return TypeTag::kBytes32;
  if (name == "bytes") return TypeTag::kBytes;
  return std::nullopt;
}

std::string_view VisibilityName(Visibility v) {
  switch (v) {
    case Visibility::kPublic: return "public";
    case Visibility::kPrivate: return "private";
    case Visibility::kInternal: return "internal";
    case Visibility::kExternal: return "external";
  }
  return "?";
}

std::string_view MutabilityName(Mutability m) {
  switch (m) {
    case Mutability::kNone: return "";
    case Mutability::kConstant: return "constant";
    case Mutability::kView: return "view";
    case Mutability::kPure: return "pure";
    case Mutability::kPayable: return "payable";
  }
  return "?";
}

std::string_view BinaryOpSymbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view UnaryOpSymbol(UnaryOp op) {
  return op == UnaryOp::kNeg ? "-" : "!";
}

std::string_view CallKindName(CallKind kind) {
  switch (kind) {
    case CallKind::kNew: return "new";
    case CallKind::kCall: return "call";
    case CallKind::kDelegateCall: return "delegatecall";
    case CallKind::kCallCode: return "callcode";
    case CallKind::kSend: return "send";
    case CallKind::kTransfer: return "transfer";
  }
  return "?";
}

std::string_view AssignOpSymbol(AssignOp op) {
  switch (op) {
    case AssignOp::kSet: return "=";
    case AssignOp::kAdd: return "+=";
    case AssignOp::kSub: return "-=";
    case AssignOp::kMul: return "*=";
    case AssignOp::kDiv: return "/=";
    case AssignOp::kMod: return "%=";
    case AssignOp::kPreInc:
    case AssignOp::kPostInc: return "++";
    case AssignOp::kPreDec:
    case AssignOp::kPostDec: return "--";
  }
  return "?";
}

bool IsArithmetic(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kSub || op == BinaryOp::kMul ||
         op == BinaryOp::kDiv || op == BinaryOp::kMod;
}

bool IsComparison(BinaryOp op) {
  return op == BinaryOp::kLt || op == BinaryOp::kLe || op == BinaryOp::kGt ||
         op == BinaryOp::kGe || op == BinaryOp::kEq || op == BinaryOp::kNe;
}

bool IsLogical(BinaryOp op) {
  return op == BinaryOp::kAnd || op == BinaryOp::kOr;
}

bool HasOperand(AssignOp op) {
  return op != AssignOp::kPreInc && op != AssignOp::kPostInc &&
         op != AssignOp::kPreDec && op != AssignOp::kPostDec;
}

std::optional<BinaryOp> CompoundArithmetic(AssignOp op) {
  switch (op) {
    case AssignOp::kAdd: return BinaryOp::kAdd;
    case AssignOp::kSub: return BinaryOp::kSub;
    case AssignOp::kMul: return BinaryOp::kMul;
    case AssignOp::kDiv: return BinaryOp::kDiv;
    case AssignOp::kMod: return BinaryOp::kMod;
    default: return std::nullopt;
  }
}

AssignOp CompoundFor(BinaryOp arithmetic) {
  switch (arithmetic) {
    case BinaryOp::kAdd: return AssignOp::kAdd;
    case BinaryOp::kSub: return AssignOp::kSub;
    case BinaryOp::kMul: return AssignOp::kMul;
    case BinaryOp::kDiv: return AssignOp::kDiv;
    case BinaryOp::kMod: return AssignOp::kMod;
    default: return AssignOp::kSet;
  }
}

bool IsExternallyCallable(const FunctionDecl& fn) {
  return !fn.visibility || *fn.visibility == Visibility::kPublic ||
         *fn.visibility == Visibility::kExternal;
}

const FunctionDecl* FindFunction(const ContractAst& ast, std::string_view name) {
  for (const auto& fn : ast.functions) {
    if (fn.name == name) return &fn;
  }
  return nullptr;
}

Expression MakeLiteral(Word value) { return Expression{Literal{std::move(value)}}; }

Expression MakeBool(bool value) {
  return Expression{Literal{Word(value ? 1 : 0), true}};
}

Expression MakeVar(std::string name) { return Expression{VarRef{std::move(name)}}; }

Expression MakeBinary(BinaryOp op, Expression lhs, Expression rhs) {
  return Expression{BinaryExpr{op, std::move(lhs), std::move(rhs)}};
}

Expression MakeUnary(UnaryOp op, Expression operand) {
  return Expression{UnaryExpr{op, std::move(operand)}};
}

}  // namespace evmdiff
