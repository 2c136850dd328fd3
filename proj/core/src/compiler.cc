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

#include "evmdiff/compiler.h"

#include <optional>
#include <string>
#include <unordered_map>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"

namespace evmdiff {
namespace {

constexpr uint64_t kCallStipend = 2300;

class Assembler {
 public:
  int NewLabel() {
    labels_.push_back(std::nullopt);
    return static_cast<int>(labels_.size()) - 1;
  }

  void Place(int label) {
    labels_[label] = code_.size();
    Emit(Opcode::kJumpDest);
  }

  void PushLabel(int label) {
    code_.push_back(PushN(2));
    fixups_.emplace_back(code_.size(), label);
    code_.push_back(0);
    code_.push_back(0);
  }

  void Emit(Opcode op) { code_.push_back(Op(op)); }
  void EmitRaw(uint8_t op) { code_.push_back(op); }

  void Push(const Word& value) {
    auto bytes = WordToBytes(value);
    size_t first = 0;
    while (first < 31 && bytes[first] == 0) ++first;
    int n = static_cast<int>(32 - first);
    code_.push_back(PushN(n));
    code_.insert(code_.end(), bytes.begin() + first, bytes.end());
  }

  void Push(uint64_t value) { Push(Word(value)); }

  Bytes Finish() {
    if (code_.size() > 0xffff) throw CompileError("code exceeds 64 KiB jump range", "");
    for (auto [at, label] : fixups_) {
      size_t target = *labels_[label];
      code_[at] = static_cast<uint8_t>(target >> 8);
      code_[at + 1] = static_cast<uint8_t>(target & 0xff);
    }
    return std::move(code_);
  }

 private:
  Bytes code_;
  std::vector<std::optional<size_t>> labels_;
  std::vector<std::pair<size_t, int>> fixups_;
};

struct Variable {
  TypeTag type;
  bool storage;
  uint64_t location;  // memory offset or storage slot
};

struct LoopLabels {
  int break_label;
  int continue_label;
};

// Counts memory slots needed for parameters and all locals of a function.
size_t CountSlots(const Block& block) {
  size_t n = 0;
  for (const auto& s : block) {
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            ++n;
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            n += CountSlots(st.then_body);
            if (st.else_body) n += CountSlots(*st.else_body);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            n += CountSlots(st.body);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (st.init && std::holds_alternative<VarDecl>(*st.init)) ++n;
            n += CountSlots(st.body);
          }
        },
        s.node);
  }
  return n;
}

class FunctionCompiler {
 public:
  FunctionCompiler(Assembler& as, const ContractAst& ast, const FunctionDecl& fn,
                   std::string path)
      : as_(as), fn_(fn), path_(std::move(path)) {
    for (size_t i = 0; i < ast.state_vars.size(); ++i) {
      globals_[ast.state_vars[i].name] = Variable{ast.state_vars[i].type, true, i};
    }
    size_t slots = fn.params.size() + CountSlots(fn.body);
    scratch_base_ = 32 * (1 + slots);
  }

  void Compile(int entry_label) {
    fail_label_ = as_.NewLabel();
    as_.Place(entry_label);
    as_.Emit(Opcode::kPop);  // selector copy left by the dispatcher
    scopes_.emplace_back();
    for (size_t i = 0; i < fn_.params.size(); ++i) {
      const Param& p = fn_.params[i];
      as_.Push(4 + 32 * i);
      as_.Emit(Opcode::kCallDataLoad);
      if (p.type == TypeTag::kBytes) {
        // Head slot holds the tail offset; the word value is the length.
        as_.Push(4);
        as_.Emit(Opcode::kAdd);
        as_.Emit(Opcode::kCallDataLoad);
      }
      Convert(p.type);
      Variable v = Declare(p.name, p.type);
      as_.Push(v.location);
      as_.Emit(Opcode::kMstore);
    }
    BlockCode(fn_.body, path_ + ".body");
    as_.Emit(Opcode::kStop);
    as_.Place(fail_label_);
    as_.Emit(Opcode::kInvalid);
  }

 private:
  Variable Declare(const std::string& name, TypeTag type) {
    Variable v{type, false, 32 * (1 + next_slot_++)};
    scopes_.back()[name] = v;
    return v;
  }

  const Variable& Lookup(const std::string& name, const std::string& path) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    auto g = globals_.find(name);
    if (g == globals_.end()) throw CompileError("unresolved name '" + name + "'", path);
    return g->second;
  }

  void Convert(TypeTag type) {
    if (type == TypeTag::kBool) {
      as_.Emit(Opcode::kIsZero);
      as_.Emit(Opcode::kIsZero);
    } else if (type == TypeTag::kAddress) {
      as_.Push(kAddressMask);
      as_.Emit(Opcode::kAnd);
    }
  }

  void Load(const Variable& v) {
    as_.Push(v.location);
    as_.Emit(v.storage ? Opcode::kSload : Opcode::kMload);
  }

  void Store(const Variable& v) {
    Convert(v.type);
    as_.Push(v.location);
    as_.Emit(v.storage ? Opcode::kSstore : Opcode::kMstore);
  }

  bool IsSigned(const Expression& e, const std::string& path) const {
    if (const auto* v = std::get_if<VarRef>(&e.node)) {
      return Lookup(v->name, path).type == TypeTag::kInt256;
    }
    if (const auto* u = std::get_if<UnaryExpr>(&e.node)) {
      return u->op == UnaryOp::kNeg && IsSigned(*u->operand, path);
    }
    if (const auto* b = std::get_if<BinaryExpr>(&e.node)) {
      return IsArithmetic(b->op) && (IsSigned(*b->lhs, path) || IsSigned(*b->rhs, path));
    }
    return false;
  }

  // Pushes 1 if the word at memory[offset] is negative, else 0.
  void SignOf(uint64_t offset) {
    as_.Push(0);
    as_.Push(offset);
    as_.Emit(Opcode::kMload);
    as_.Emit(Opcode::kSlt);
  }

  // Pushes |memory[offset]| (two's complement magnitude).
  void AbsOf(uint64_t offset) {
    SignOf(offset);
    as_.EmitRaw(DupN(1));
    as_.Push(0);
    as_.Emit(Opcode::kSub);
    as_.Push(offset);
    as_.Emit(Opcode::kMload);
    as_.Emit(Opcode::kXor);
    as_.Emit(Opcode::kAdd);
  }

  // [magnitude, sign] -> [sign ? -magnitude : magnitude]
  void ApplySign() {
    as_.EmitRaw(DupN(1));
    as_.Push(0);
    as_.Emit(Opcode::kSub);
    as_.EmitRaw(DupN(3));
    as_.Emit(Opcode::kXor);
    as_.Emit(Opcode::kAdd);
    as_.EmitRaw(SwapN(1));
    as_.Emit(Opcode::kPop);
  }

  // Signed division and remainder built from the unsigned DIV/MOD opcodes.
  // Operands are spilled to two scratch words reserved for this nesting
  // depth; results follow SDIV/SMOD (truncation toward zero, x/0 == 0).
  void SignedDivMod(BinaryOp op, const Expression& lhs, const Expression& rhs,
                    const std::string& path) {
    uint64_t a = scratch_base_ + 64 * depth_;
    uint64_t b = a + 32;
    ++depth_;
    Expr(rhs, path + ".rhs");
    as_.Push(b);
    as_.Emit(Opcode::kMstore);
    Expr(lhs, path + ".lhs");
    as_.Push(a);
    as_.Emit(Opcode::kMstore);
    --depth_;
    AbsOf(b);
    AbsOf(a);
    as_.Emit(op == BinaryOp::kDiv ? Opcode::kDiv : Opcode::kMod);
    if (op == BinaryOp::kDiv) {
      SignOf(b);
      SignOf(a);
      as_.Emit(Opcode::kXor);
    } else {
      SignOf(a);
    }
    ApplySign();
  }

  void Normalize() {
    as_.Emit(Opcode::kIsZero);
    as_.Emit(Opcode::kIsZero);
  }

  void BinaryCode(BinaryOp op, const Expression& lhs, const Expression& rhs,
                  const std::string& path) {
    if (IsLogical(op)) {
      Expr(rhs, path + ".rhs");
      Normalize();
      Expr(lhs, path + ".lhs");
      Normalize();
      as_.Emit(op == BinaryOp::kAnd ? Opcode::kAnd : Opcode::kOr);
      return;
    }
    bool is_signed = IsSigned(lhs, path) || IsSigned(rhs, path);
    if (is_signed && (op == BinaryOp::kDiv || op == BinaryOp::kMod)) {
      SignedDivMod(op, lhs, rhs, path);
      return;
    }
    ++depth_;
    Expr(rhs, path + ".rhs");
    Expr(lhs, path + ".lhs");
    --depth_;
    switch (op) {
      case BinaryOp::kAdd: as_.Emit(Opcode::kAdd); break;
      case BinaryOp::kSub: as_.Emit(Opcode::kSub); break;
      case BinaryOp::kMul: as_.Emit(Opcode::kMul); break;
      case BinaryOp::kDiv: as_.Emit(Opcode::kDiv); break;
      case BinaryOp::kMod: as_.Emit(Opcode::kMod); break;
      case BinaryOp::kLt: as_.Emit(is_signed ? Opcode::kSlt : Opcode::kLt); break;
      case BinaryOp::kGt: as_.Emit(is_signed ? Opcode::kSgt : Opcode::kGt); break;
      case BinaryOp::kLe:
        as_.Emit(is_signed ? Opcode::kSgt : Opcode::kGt);
        as_.Emit(Opcode::kIsZero);
        break;
      case BinaryOp::kGe:
        as_.Emit(is_signed ? Opcode::kSlt : Opcode::kLt);
        as_.Emit(Opcode::kIsZero);
        break;
      case BinaryOp::kEq: as_.Emit(Opcode::kEq); break;
      case BinaryOp::kNe:
        as_.Emit(Opcode::kEq);
        as_.Emit(Opcode::kIsZero);
        break;
      default: break;
    }
  }

  void CallCode(const CriticalCall& c, const std::string& path) {
    // Arguments past the receiver and value are evaluated for effect only.
    size_t first_extra = c.kind == CallKind::kNew ? 0 : 1 + (c.args.size() > 1);
    for (size_t i = first_extra; i < c.args.size(); ++i) {
      Expr(c.args[i], path + ".args[" + std::to_string(i) + "]");
      as_.Emit(Opcode::kPop);
    }
    for (int i = 0; i < 4; ++i) as_.Push(0);  // retSize retOffset argsSize argsOffset
    if (c.kind != CallKind::kNew && c.args.size() > 1) {
      Expr(c.args[1], path + ".args[1]");
    } else {
      as_.Push(0);
    }
    if (c.kind != CallKind::kNew && !c.args.empty()) {
      Expr(c.args[0], path + ".args[0]");
    } else {
      as_.Push(0);
    }
    as_.Push(kCallStipend);
    as_.Emit(Opcode::kCall);
  }

  void Expr(const Expression& expr, const std::string& path) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Literal>) {
            as_.Push(e.value);
          } else if constexpr (std::is_same_v<T, VarRef>) {
            Load(Lookup(e.name, path));
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            BinaryCode(e.op, *e.lhs, *e.rhs, path);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            Expr(*e.operand, path + ".operand");
            if (e.op == UnaryOp::kNeg) {
              as_.Push(0);
              as_.Emit(Opcode::kSub);
            } else {
              as_.Emit(Opcode::kIsZero);
            }
          } else {
            CallCode(e, path);
          }
        },
        expr.node);
  }

  void DeclCode(const VarDecl& d, const std::string& path) {
    if (d.init) {
      Expr(*d.init, path + ".init");
    } else {
      as_.Push(0);
    }
    Store(Declare(d.name, d.type));
  }

  void AssignCode(const Assign& a, const std::string& path) {
    const Variable& target = Lookup(a.target, path);
    Variable v = target;
    if (a.op == AssignOp::kSet) {
      Expr(*a.value, path + ".value");
    } else if (auto arith = CompoundArithmetic(a.op)) {
      BinaryCode(*arith, MakeVar(a.target), *a.value, path);
    } else {
      bool inc = a.op == AssignOp::kPreInc || a.op == AssignOp::kPostInc;
      BinaryCode(inc ? BinaryOp::kAdd : BinaryOp::kSub, MakeVar(a.target), MakeLiteral(1),
                 path);
    }
    Store(v);
  }

  void BlockCode(const Block& block, const std::string& path) {
    scopes_.emplace_back();
    for (size_t i = 0; i < block.size(); ++i) {
      Stmt(block[i], path + "[" + std::to_string(i) + "]");
    }
    scopes_.pop_back();
  }

  void Stmt(const Statement& stmt, const std::string& path) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            DeclCode(s, path);
          } else if constexpr (std::is_same_v<T, Assign>) {
            AssignCode(s, path);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            int end = as_.NewLabel();
            Expr(s.cond, path + ".cond");
            as_.Emit(Opcode::kIsZero);
            if (s.else_body) {
              int otherwise = as_.NewLabel();
              as_.PushLabel(otherwise);
              as_.Emit(Opcode::kJumpi);
              BlockCode(s.then_body, path + ".then");
              as_.PushLabel(end);
              as_.Emit(Opcode::kJump);
              as_.Place(otherwise);
              BlockCode(*s.else_body, path + ".else");
            } else {
              as_.PushLabel(end);
              as_.Emit(Opcode::kJumpi);
              BlockCode(s.then_body, path + ".then");
            }
            as_.Place(end);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            int head = as_.NewLabel();
            int end = as_.NewLabel();
            as_.Place(head);
            Expr(s.cond, path + ".cond");
            as_.Emit(Opcode::kIsZero);
            as_.PushLabel(end);
            as_.Emit(Opcode::kJumpi);
            loops_.push_back({end, head});
            BlockCode(s.body, path + ".body");
            loops_.pop_back();
            as_.PushLabel(head);
            as_.Emit(Opcode::kJump);
            as_.Place(end);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            scopes_.emplace_back();
            if (s.init) {
              if (const auto* d = std::get_if<VarDecl>(&*s.init)) {
                DeclCode(*d, path + ".init");
              } else {
                AssignCode(std::get<Assign>(*s.init), path + ".init");
              }
            }
            int head = as_.NewLabel();
            int cont = as_.NewLabel();
            int end = as_.NewLabel();
            as_.Place(head);
            if (s.cond) {
              Expr(*s.cond, path + ".cond");
              as_.Emit(Opcode::kIsZero);
              as_.PushLabel(end);
              as_.Emit(Opcode::kJumpi);
            }
            loops_.push_back({end, cont});
            BlockCode(s.body, path + ".body");
            loops_.pop_back();
            as_.Place(cont);
            if (s.step) AssignCode(*s.step, path + ".step");
            as_.PushLabel(head);
            as_.Emit(Opcode::kJump);
            as_.Place(end);
            scopes_.pop_back();
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            Expr(s.cond, path + ".cond");
            as_.Emit(Opcode::kIsZero);
            as_.PushLabel(fail_label_);
            as_.Emit(Opcode::kJumpi);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (s.value) {
              Expr(*s.value, path + ".value");
              if (fn_.returns) Convert(*fn_.returns);
              as_.Push(0);
              as_.Emit(Opcode::kMstore);
              as_.Push(32);
              as_.Push(0);
              as_.Emit(Opcode::kReturn);
            } else {
              as_.Emit(Opcode::kStop);
            }
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            if (loops_.empty()) throw CompileError("break outside loop", path);
            as_.PushLabel(loops_.back().break_label);
            as_.Emit(Opcode::kJump);
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            if (loops_.empty()) throw CompileError("continue outside loop", path);
            as_.PushLabel(loops_.back().continue_label);
            as_.Emit(Opcode::kJump);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            CallCode(s.call, path + ".call");
            as_.Emit(Opcode::kPop);
          }
        },
        stmt.node);
  }

  Assembler& as_;
  const FunctionDecl& fn_;
  std::string path_;
  std::unordered_map<std::string, Variable> globals_;
  std::vector<std::unordered_map<std::string, Variable>> scopes_;
  std::vector<LoopLabels> loops_;
  uint64_t next_slot_ = 0;
  uint64_t scratch_base_ = 0;
  uint64_t depth_ = 0;
  int fail_label_ = -1;
};

}  // namespace

CompiledContract CompileContract(const ContractAst& ast) {
  Assembler as;
  CompiledContract out;
  std::vector<std::pair<size_t, int>> entries;

  as.Push(Word(1) << 224);
  as.Push(0);
  as.Emit(Opcode::kCallDataLoad);
  as.Emit(Opcode::kDiv);
  for (size_t i = 0; i < ast.functions.size(); ++i) {
    const FunctionDecl& fn = ast.functions[i];
    if (!IsExternallyCallable(fn)) continue;
    AbiSignature sig = SignatureOf(fn);
    Selector sel = sig.selector();
    int label = as.NewLabel();
    as.EmitRaw(DupN(1));
    as.Push(WordFromBytes(sel) >> 224);
    as.Emit(Opcode::kEq);
    as.PushLabel(label);
    as.Emit(Opcode::kJumpi);
    entries.emplace_back(i, label);
    out.entry_points.push_back(std::move(sig));
  }
  as.Push(0);
  as.EmitRaw(DupN(1));
  as.Emit(Opcode::kRevert);

  for (auto [index, label] : entries) {
    FunctionCompiler fc(as, ast, ast.functions[index],
                        "functions[" + std::to_string(index) + "]");
    fc.Compile(label);
  }
  out.code.code = as.Finish();
  return out;
}

CompiledFunction Compile(const ContractAst& ast, std::string_view function) {
  const FunctionDecl* fn = FindFunction(ast, function);
  if (!fn) throw CompileError("no function named '" + std::string(function) + "'", "functions");
  if (!IsExternallyCallable(*fn)) {
    throw CompileError("function '" + fn->name + "' is not public or external", "functions");
  }
  CompiledContract cc = CompileContract(ast);
  return CompiledFunction{std::move(cc.code), SignatureOf(*fn)};
}

}  // namespace evmdiff
