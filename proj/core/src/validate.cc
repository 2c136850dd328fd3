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

#include "evmdiff/validate.h"

#include <set>
#include <string>
#include <unordered_map>

namespace evmdiff {
namespace {

bool IsFalseLiteral(const Expression& e) {
  const auto* lit = std::get_if<Literal>(&e.node);
  return lit && lit->value == 0;
}

bool Terminates(const Statement& s) {
  if (std::holds_alternative<ReturnStmt>(s.node)) return true;
  if (const auto* a = std::get_if<AssertStmt>(&s.node)) return IsFalseLiteral(a->cond);
  if (const auto* i = std::get_if<IfStmt>(&s.node)) {
    return i->else_body && AlwaysTerminates(i->then_body) &&
           AlwaysTerminates(*i->else_body);
  }
  return false;
}

// Checks a literal (optionally negated) against the range of `type`.
bool LiteralFits(TypeTag type, const Expression& e) {
  bool negated = false;
  const Expression* inner = &e;
  if (const auto* u = std::get_if<UnaryExpr>(&e.node); u && u->op == UnaryOp::kNeg) {
    negated = true;
    inner = &*u->operand;
  }
  const auto* lit = std::get_if<Literal>(&inner->node);
  if (!lit) return true;
  const Word& v = lit->value;
  if (negated && v != 0) {
    return type == TypeTag::kInt256 && v <= kInt256Min;
  }
  switch (type) {
    case TypeTag::kInt256: return v <= kInt256Max;
    case TypeTag::kBool: return v <= 1;
    case TypeTag::kAddress: return v <= kAddressMask;
    default: return true;
  }
}

class Validator {
 public:
  explicit Validator(const ContractAst& ast) : ast_(ast) {}

  std::vector<Violation> Run() {
    std::set<std::string> fn_names;
    for (size_t i = 0; i < ast_.state_vars.size(); ++i) {
      const auto& sv = ast_.state_vars[i];
      if (globals_.count(sv.name)) {
        Report("state_vars[" + std::to_string(i) + "]", kRuleDuplicateDeclaration, sv.name);
      }
      globals_[sv.name] = sv.type;
    }
    for (size_t i = 0; i < ast_.functions.size(); ++i) {
      const auto& fn = ast_.functions[i];
      std::string path = "functions[" + std::to_string(i) + "]";
      if (!fn_names.insert(fn.name).second) {
        Report(path, kRuleDuplicateFunction, fn.name);
      }
      Function(fn, path);
    }
    return std::move(out_);
  }

 private:
  void Report(std::string path, const char* rule, std::string detail) {
    out_.push_back(Violation{std::move(path), rule, std::move(detail)});
  }

  const TypeTag* Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    auto g = globals_.find(name);
    return g == globals_.end() ? nullptr : &g->second;
  }

  void Declare(const std::string& name, TypeTag type, const std::string& path) {
    if (Lookup(name)) {
      Report(path, kRuleDuplicateDeclaration, name);
      return;
    }
    scopes_.back()[name] = type;
  }

  void Function(const FunctionDecl& fn, const std::string& path) {
    fn_ = &fn;
    scopes_.clear();
    scopes_.emplace_back();
    for (size_t i = 0; i < fn.params.size(); ++i) {
      Declare(fn.params[i].name, fn.params[i].type,
              path + ".params[" + std::to_string(i) + "]");
    }
    loop_depth_ = 0;
    BlockCheck(fn.body, path + ".body");
    if (fn.returns && !AlwaysTerminates(fn.body)) {
      Report(path, kRuleMissingReturn, fn.name);
    }
    scopes_.clear();
  }

  void BlockCheck(const Block& block, const std::string& path) {
    scopes_.emplace_back();
    for (size_t i = 0; i < block.size(); ++i) {
      StmtCheck(block[i], path + "[" + std::to_string(i) + "]");
    }
    scopes_.pop_back();
  }

  void DeclCheck(const VarDecl& d, const std::string& path) {
    if (d.init) {
      ExprCheck(*d.init, path + ".init");
      if (!LiteralFits(d.type, *d.init)) {
        Report(path + ".init", kRuleLiteralRange, d.name);
      }
    }
    Declare(d.name, d.type, path);
  }

  void AssignCheck(const Assign& a, const std::string& path) {
    const TypeTag* type = Lookup(a.target);
    if (!type) Report(path, kRuleUnresolvedName, a.target);
    if (a.value) {
      ExprCheck(*a.value, path + ".value");
      if (type && a.op == AssignOp::kSet && !LiteralFits(*type, *a.value)) {
        Report(path + ".value", kRuleLiteralRange, a.target);
      }
    }
  }

  void StmtCheck(const Statement& stmt, const std::string& path) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            DeclCheck(s, path);
          } else if constexpr (std::is_same_v<T, Assign>) {
            AssignCheck(s, path);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            ExprCheck(s.cond, path + ".cond");
            BlockCheck(s.then_body, path + ".then");
            if (s.else_body) BlockCheck(*s.else_body, path + ".else");
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            ExprCheck(s.cond, path + ".cond");
            ++loop_depth_;
            BlockCheck(s.body, path + ".body");
            --loop_depth_;
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            scopes_.emplace_back();
            if (s.init) {
              if (const auto* d = std::get_if<VarDecl>(&*s.init)) {
                DeclCheck(*d, path + ".init");
              } else {
                AssignCheck(std::get<Assign>(*s.init), path + ".init");
              }
            }
            if (s.cond) ExprCheck(*s.cond, path + ".cond");
            if (s.step) AssignCheck(*s.step, path + ".step");
            ++loop_depth_;
            BlockCheck(s.body, path + ".body");
            --loop_depth_;
            scopes_.pop_back();
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            ExprCheck(s.cond, path + ".cond");
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (s.value.has_value() != fn_->returns.has_value()) {
              Report(path, kRuleReturnMismatch, fn_->name);
            }
            if (s.value) {
              ExprCheck(*s.value, path + ".value");
              if (fn_->returns && !LiteralFits(*fn_->returns, *s.value)) {
                Report(path + ".value", kRuleLiteralRange, fn_->name);
              }
            }
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            if (loop_depth_ == 0) Report(path, kRuleBreakOutsideLoop, "break");
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            if (loop_depth_ == 0) Report(path, kRuleContinueOutsideLoop, "continue");
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            CallCheck(s.call, path + ".call");
          }
        },
        stmt.node);
  }

  void CallCheck(const CriticalCall& c, const std::string& path) {
    bool ok = true;
    if (c.kind == CallKind::kNew) {
      ok = !c.contract.empty();
    } else if (c.kind == CallKind::kSend || c.kind == CallKind::kTransfer) {
      ok = c.args.size() == 2;
    } else {
      ok = !c.args.empty();
    }
    if (!ok) Report(path, kRuleCallArity, std::string(CallKindName(c.kind)));
    for (size_t i = 0; i < c.args.size(); ++i) {
      ExprCheck(c.args[i], path + ".args[" + std::to_string(i) + "]");
    }
  }

  void ExprCheck(const Expression& expr, const std::string& path) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            if (!Lookup(e.name)) Report(path, kRuleUnresolvedName, e.name);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            ExprCheck(*e.lhs, path + ".lhs");
            ExprCheck(*e.rhs, path + ".rhs");
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            ExprCheck(*e.operand, path + ".operand");
          } else if constexpr (std::is_same_v<T, CriticalCall>) {
            CallCheck(e, path);
          }
        },
        expr.node);
  }

  const ContractAst& ast_;
  const FunctionDecl* fn_ = nullptr;
  std::unordered_map<std::string, TypeTag> globals_;
  std::vector<std::unordered_map<std::string, TypeTag>> scopes_;
  int loop_depth_ = 0;
  std::vector<Violation> out_;
};

}  // namespace

bool AlwaysTerminates(const Block& block) {
  for (const auto& s : block) {
    if (Terminates(s)) return true;
  }
  return false;
}

std::vector<Violation> Validate(const ContractAst& ast) { return Validator(ast).Run(); }

}  // namespace evmdiff
