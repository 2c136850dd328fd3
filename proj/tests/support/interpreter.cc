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

#include "support/interpreter.h"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace evmdiff::testing {
namespace {

using boost::multiprecision::cpp_int;

const cpp_int kModulus = cpp_int(1) << 256;

Word Wrap(cpp_int x) {
  x %= kModulus;
  if (x < 0) x += kModulus;
  return Word(x);
}

cpp_int AsSigned(const Word& w) {
  cpp_int v(w);
  return v >= (cpp_int(1) << 255) ? v - kModulus : v;
}

Word Truth(bool b) { return b ? Word(1) : Word(0); }

Word Coerce(TypeTag type, const Word& w) {
  switch (type) {
    case TypeTag::kBool: return Truth(w != 0);
    case TypeTag::kAddress: return w & kAddressMask;
    default: return w;
  }
}

struct Slot {
  TypeTag type;
  Word value;
};

struct OutOfFuel {};
struct AssertFailed {};

enum class Flow { kNext, kBreak, kContinue, kReturn };

class Machine {
 public:
  Machine(const ContractAst& c, const FunctionDecl& fn, uint64_t fuel) : fn_(fn), fuel_(fuel) {
    for (const auto& sv : c.state_vars) state_[sv.name] = {sv.type, 0};
  }

  InterpResult Run(const std::vector<AbiValue>& args) {
    scopes_.emplace_back();
    for (size_t i = 0; i < fn_.params.size(); ++i) {
      const AbiValue& a = args.at(i);
      Word w = fn_.params[i].type == TypeTag::kBytes ? Word(a.bytes.size()) : a.word;
      scopes_.back()[fn_.params[i].name] = {fn_.params[i].type, Coerce(fn_.params[i].type, w)};
    }
    InterpResult r;
    try {
      if (Run(fn_.body) == Flow::kReturn && returned_) {
        r.kind = InterpResult::Kind::kReturned;
        auto bytes = WordToBytes(*returned_);
        r.output.assign(bytes.begin(), bytes.end());
      }
    } catch (const AssertFailed&) {
      r.kind = InterpResult::Kind::kAssertFailed;
    } catch (const OutOfFuel&) {
      r.kind = InterpResult::Kind::kOutOfFuel;
    }
    return r;
  }

 private:
  void Burn() {
    if (fuel_ == 0) throw OutOfFuel{};
    --fuel_;
  }

  Slot& Find(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    auto g = state_.find(name);
    if (g == state_.end()) throw std::logic_error("unknown variable " + name);
    return g->second;
  }

  bool Signed(const Expression& e) {
    if (const auto* v = std::get_if<VarRef>(&e.node)) return Find(v->name).type == TypeTag::kInt256;
    if (const auto* u = std::get_if<UnaryExpr>(&e.node)) {
      return u->op == UnaryOp::kNeg && Signed(*u->operand);
    }
    if (const auto* b = std::get_if<BinaryExpr>(&e.node)) {
      return IsArithmetic(b->op) && (Signed(*b->lhs) || Signed(*b->rhs));
    }
    return false;
  }

  Word Binary(BinaryOp op, const Expression& lhs_e, const Expression& rhs_e) {
    Word l = Eval(lhs_e);
    Word r = Eval(rhs_e);
    bool sgn = Signed(lhs_e) || Signed(rhs_e);
    cpp_int a = sgn ? AsSigned(l) : cpp_int(l);
    cpp_int b = sgn ? AsSigned(r) : cpp_int(r);
    switch (op) {
      case BinaryOp::kAdd: return Wrap(a + b);
      case BinaryOp::kSub: return Wrap(a - b);
      case BinaryOp::kMul: return Wrap(a * b);
      case BinaryOp::kDiv: return b == 0 ? Word(0) : Wrap(a / b);
      case BinaryOp::kMod: return b == 0 ? Word(0) : Wrap(a % b);
      case BinaryOp::kLt: return Truth(a < b);
      case BinaryOp::kLe: return Truth(a <= b);
      case BinaryOp::kGt: return Truth(a > b);
      case BinaryOp::kGe: return Truth(a >= b);
      case BinaryOp::kEq: return Truth(l == r);
      case BinaryOp::kNe: return Truth(l != r);
      case BinaryOp::kAnd: return Truth(l != 0 && r != 0);
      case BinaryOp::kOr: return Truth(l != 0 || r != 0);
    }
    return 0;
  }

  Word Eval(const Expression& e) {
    if (const auto* lit = std::get_if<Literal>(&e.node)) return lit->value;
    if (const auto* v = std::get_if<VarRef>(&e.node)) return Find(v->name).value;
    if (const auto* u = std::get_if<UnaryExpr>(&e.node)) {
      Word x = Eval(*u->operand);
      return u->op == UnaryOp::kNeg ? Wrap(-cpp_int(x)) : Truth(x == 0);
    }
    if (const auto* b = std::get_if<BinaryExpr>(&e.node)) return Binary(b->op, *b->lhs, *b->rhs);
    // Message calls have no observable effect and always succeed.
    for (const auto& arg : std::get<CriticalCall>(e.node).args) Eval(arg);
    return 1;
  }

  void Declare(const VarDecl& d) {
    Word w = d.init ? Eval(*d.init) : Word(0);
    scopes_.back()[d.name] = {d.type, Coerce(d.type, w)};
  }

  void Update(const Assign& a) {
    Word next;
    if (a.op == AssignOp::kSet) {
      next = Eval(*a.value);
    } else if (auto op = CompoundArithmetic(a.op)) {
      next = Binary(*op, MakeVar(a.target), *a.value);
    } else {
      bool inc = a.op == AssignOp::kPreInc || a.op == AssignOp::kPostInc;
      next = Binary(inc ? BinaryOp::kAdd : BinaryOp::kSub, MakeVar(a.target), MakeLiteral(1));
    }
    Slot& s = Find(a.target);
    s.value = Coerce(s.type, next);
  }

  Flow Run(const Block& block) {
    scopes_.emplace_back();
    Flow f = Flow::kNext;
    for (const auto& s : block) {
      f = Run(s);
      if (f != Flow::kNext) break;
    }
    scopes_.pop_back();
    return f;
  }

  Flow Run(const Statement& stmt) {
    Burn();
    if (const auto* d = std::get_if<VarDecl>(&stmt.node)) {
      Declare(*d);
    } else if (const auto* a = std::get_if<Assign>(&stmt.node)) {
      Update(*a);
    } else if (const auto* i = std::get_if<IfStmt>(&stmt.node)) {
      if (Eval(i->cond) != 0) return Run(i->then_body);
      if (i->else_body) return Run(*i->else_body);
    } else if (const auto* w = std::get_if<WhileStmt>(&stmt.node)) {
      while (Eval(w->cond) != 0) {
        Burn();
        Flow f = Run(w->body);
        if (f == Flow::kBreak) break;
        if (f == Flow::kReturn) return f;
      }
    } else if (const auto* fs = std::get_if<ForStmt>(&stmt.node)) {
      scopes_.emplace_back();
      Flow out = Flow::kNext;
      if (fs->init) {
        if (const auto* d = std::get_if<VarDecl>(&*fs->init)) {
          Declare(*d);
        } else {
          Update(std::get<Assign>(*fs->init));
        }
      }
      while (!fs->cond || Eval(*fs->cond) != 0) {
        Burn();
        Flow f = Run(fs->body);
        if (f == Flow::kBreak) break;
        if (f == Flow::kReturn) {
          out = f;
          break;
        }
        if (fs->step) Update(*fs->step);
      }
      scopes_.pop_back();
      return out;
    } else if (const auto* as = std::get_if<AssertStmt>(&stmt.node)) {
      if (Eval(as->cond) == 0) throw AssertFailed{};
    } else if (const auto* r = std::get_if<ReturnStmt>(&stmt.node)) {
      if (r->value) {
        Word w = Eval(*r->value);
        returned_ = fn_.returns ? Coerce(*fn_.returns, w) : w;
      }
      return Flow::kReturn;
    } else if (std::holds_alternative<BreakStmt>(stmt.node)) {
      return Flow::kBreak;
    } else if (std::holds_alternative<ContinueStmt>(stmt.node)) {
      return Flow::kContinue;
    } else {
      Eval({std::get<ExprStmt>(stmt.node).call});
    }
    return Flow::kNext;
  }

  const FunctionDecl& fn_;
  uint64_t fuel_;
  std::map<std::string, Slot> state_;
  std::vector<std::map<std::string, Slot>> scopes_;
  std::optional<Word> returned_;
};

}  // namespace

InterpResult Interpret(const ContractAst& contract, std::string_view function,
                       const std::vector<AbiValue>& args, uint64_t fuel) {
  const FunctionDecl* fn = FindFunction(contract, function);
  if (!fn) throw std::invalid_argument("no function " + std::string(function));
  return Machine(contract, *fn, fuel).Run(args);
}

}  // namespace evmdiff::testing
