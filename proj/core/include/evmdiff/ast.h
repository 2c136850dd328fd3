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

#ifndef EVMDIFF_AST_H_
#define EVMDIFF_AST_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evmdiff/word.h"

namespace evmdiff {

enum class TypeTag { kUint256, kInt256, kBool, kAddress, kBytes32, kBytes };

inline constexpr std::array<TypeTag, 6> kAllTypeTags = {
    TypeTag::kUint256, TypeTag::kInt256,  TypeTag::kBool,
    TypeTag::kAddress, TypeTag::kBytes32, TypeTag::kBytes};

std::string_view TypeTagName(TypeTag tag);
// Accepts the canonical names plus the `uint` / `int` aliases.
std::optional<TypeTag> TypeTagFromName(std::string_view name);

enum class Visibility { kPublic, kPrivate, kInternal, kExternal };
enum class Mutability { kNone, kConstant, kView, kPure, kPayable };

inline constexpr std::array<Visibility, 4> kAllVisibilities = {
    Visibility::kPublic, Visibility::kPrivate, Visibility::kInternal,
    Visibility::kExternal};
inline constexpr std::array<Mutability, 4> kAllMutabilityKeywords = {
    Mutability::kConstant, Mutability::kView, Mutability::kPure,
    Mutability::kPayable};

std::string_view VisibilityName(Visibility v);
std::string_view MutabilityName(Mutability m);  // "" for kNone

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kLt, kLe, kGt, kGe, kEq, kNe,
  kAnd, kOr,
};

enum class UnaryOp { kNeg, kNot };

// The six transaction-related symbols that mark critical locations.
enum class CallKind { kNew, kCall, kDelegateCall, kCallCode, kSend, kTransfer };

inline constexpr std::array<CallKind, 6> kAllCallKinds = {
    CallKind::kNew,      CallKind::kCall, CallKind::kDelegateCall,
    CallKind::kCallCode, CallKind::kSend, CallKind::kTransfer};

enum class AssignOp {
  kSet, kAdd, kSub, kMul, kDiv, kMod,
  kPreInc, kPostInc, kPreDec, kPostDec,
};

std::string_view BinaryOpSymbol(BinaryOp op);
std::string_view UnaryOpSymbol(UnaryOp op);
std::string_view CallKindName(CallKind kind);
std::string_view AssignOpSymbol(AssignOp op);

bool IsArithmetic(BinaryOp op);
bool IsComparison(BinaryOp op);
bool IsLogical(BinaryOp op);
bool HasOperand(AssignOp op);  // false for the ++/-- forms
// kAdd..kMod for compound assignments, nullopt for kSet and ++/--.
std::optional<BinaryOp> CompoundArithmetic(AssignOp op);
AssignOp CompoundFor(BinaryOp arithmetic);

// Owning pointer with value semantics, used to break recursive node types.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct Expression;

struct Literal {
  Word value;
  bool is_bool = false;  // printed as true/false
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct VarRef {
  std::string name;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

struct BinaryExpr {
  BinaryOp op;
  Box<Expression> lhs;
  Box<Expression> rhs;
  friend bool operator==(const BinaryExpr&, const BinaryExpr&) = default;
};

struct UnaryExpr {
  UnaryOp op;
  Box<Expression> operand;
  friend bool operator==(const UnaryExpr&, const UnaryExpr&) = default;
};

// For kNew, `contract` names the created contract and `args` are the
// constructor arguments. For the message-call kinds args[0] is the receiver.
struct CriticalCall {
  CallKind kind;
  std::string contract;
  std::vector<Expression> args;
  friend bool operator==(const CriticalCall&, const CriticalCall&) = default;
};

struct Expression {
  std::variant<Literal, VarRef, BinaryExpr, UnaryExpr, CriticalCall> node;
  friend bool operator==(const Expression&, const Expression&) = default;
};

struct Statement;
using Block = std::vector<Statement>;

struct VarDecl {
  TypeTag type;
  std::string name;
  std::optional<Expression> init;
  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct Assign {
  std::string target;
  AssignOp op = AssignOp::kSet;
  std::optional<Expression> value;  // absent for ++/--
  friend bool operator==(const Assign&, const Assign&) = default;
};

struct IfStmt {
  Expression cond;
  Block then_body;
  std::optional<Block> else_body;
  friend bool operator==(const IfStmt&, const IfStmt&) = default;
};

struct WhileStmt {
  Expression cond;
  Block body;
  friend bool operator==(const WhileStmt&, const WhileStmt&) = default;
};

using ForInit = std::variant<VarDecl, Assign>;

struct ForStmt {
  std::optional<ForInit> init;
  std::optional<Expression> cond;
  std::optional<Assign> step;
  Block body;
  friend bool operator==(const ForStmt&, const ForStmt&) = default;
};

struct AssertStmt {
  Expression cond;
  friend bool operator==(const AssertStmt&, const AssertStmt&) = default;
};

struct ReturnStmt {
  std::optional<Expression> value;
  friend bool operator==(const ReturnStmt&, const ReturnStmt&) = default;
};

struct BreakStmt {
  friend bool operator==(const BreakStmt&, const BreakStmt&) = default;
};

struct ContinueStmt {
  friend bool operator==(const ContinueStmt&, const ContinueStmt&) = default;
};

struct ExprStmt {
  CriticalCall call;
  friend bool operator==(const ExprStmt&, const ExprStmt&) = default;
};

struct Statement {
  std::variant<VarDecl, Assign, IfStmt, WhileStmt, ForStmt, AssertStmt,
               ReturnStmt, BreakStmt, ContinueStmt, ExprStmt>
      node;
  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Param {
  std::string name;
  TypeTag type;
  friend bool operator==(const Param&, const Param&) = default;
};

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  // Absent visibility means the language default (public).
  std::optional<Visibility> visibility;
  Mutability mutability = Mutability::kNone;
  std::optional<TypeTag> returns;
  Block body;
  friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
};

struct StateVar {
  TypeTag type;
  std::string name;
  friend bool operator==(const StateVar&, const StateVar&) = default;
};

struct ContractAst {
  std::string name;
  std::vector<StateVar> state_vars;
  std::vector<FunctionDecl> functions;
  friend bool operator==(const ContractAst&, const ContractAst&) = default;
};

// Public and external functions (and those without an explicit visibility)
// are reachable through the calldata dispatcher.
bool IsExternallyCallable(const FunctionDecl& fn);

const FunctionDecl* FindFunction(const ContractAst& ast, std::string_view name);

// Convenience constructors used by the parser, mutators and tests.
Expression MakeLiteral(Word value);
Expression MakeBool(bool value);
Expression MakeVar(std::string name);
Expression MakeBinary(BinaryOp op, Expression lhs, Expression rhs);
Expression MakeUnary(UnaryOp op, Expression operand);

}  // namespace evmdiff

#endif  // EVMDIFF_AST_H_
