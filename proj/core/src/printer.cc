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

#include "evmdiff/printer.h"

#include <sstream>

namespace evmdiff {
namespace {

std::string Indent(int depth) { return std::string(static_cast<size_t>(depth) * 4, ' '); }

class SourceWriter {
 public:
  std::string Contract(const ContractAst& ast) {
    out_ << "contract " << ast.name << " {\n";
    for (const auto& sv : ast.state_vars) {
      out_ << Indent(1) << TypeTagName(sv.type) << ' ' << sv.name << ";\n";
    }
    for (size_t i = 0; i < ast.functions.size(); ++i) {
      if (i > 0 || !ast.state_vars.empty()) out_ << '\n';
      Function(ast.functions[i]);
    }
    out_ << "}\n";
    return out_.str();
  }

 private:
  void Function(const FunctionDecl& fn) {
    out_ << Indent(1) << "function " << fn.name << '(';
    for (size_t i = 0; i < fn.params.size(); ++i) {
      if (i) out_ << ", ";
      out_ << TypeTagName(fn.params[i].type) << ' ' << fn.params[i].name;
    }
    out_ << ')';
    if (fn.visibility) out_ << ' ' << VisibilityName(*fn.visibility);
    if (fn.mutability != Mutability::kNone) out_ << ' ' << MutabilityName(fn.mutability);
    if (fn.returns) out_ << " returns (" << TypeTagName(*fn.returns) << ')';
    out_ << " {\n";
    Statements(fn.body, 2);
    out_ << Indent(1) << "}\n";
  }

  void Statements(const Block& block, int depth) {
    for (const auto& s : block) Stmt(s, depth);
  }

  static std::string Decl(const VarDecl& d) {
    std::string s = std::string(TypeTagName(d.type)) + " " + d.name;
    if (d.init) s += " = " + EmitExpression(*d.init);
    return s;
  }

  static std::string AssignText(const Assign& a) {
    switch (a.op) {
      case AssignOp::kPreInc: return "++" + a.target;
      case AssignOp::kPreDec: return "--" + a.target;
      case AssignOp::kPostInc: return a.target + "++";
      case AssignOp::kPostDec: return a.target + "--";
      default:
        return a.target + " " + std::string(AssignOpSymbol(a.op)) + " " +
               EmitExpression(*a.value);
    }
  }

  void IfChain(const IfStmt& s, int depth) {
    out_ << "if (" << EmitExpression(s.cond) << ") {\n";
    Statements(s.then_body, depth + 1);
    out_ << Indent(depth) << '}';
    if (s.else_body) {
      const Block& eb = *s.else_body;
      if (eb.size() == 1 && std::holds_alternative<IfStmt>(eb[0].node)) {
        out_ << " else ";
        IfChain(std::get<IfStmt>(eb[0].node), depth);
        return;
      }
      out_ << " else {\n";
      Statements(eb, depth + 1);
      out_ << Indent(depth) << '}';
    }
  }

  void Stmt(const Statement& stmt, int depth) {
    out_ << Indent(depth);
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            out_ << Decl(s) << ";\n";
          } else if constexpr (std::is_same_v<T, Assign>) {
            out_ << AssignText(s) << ";\n";
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            IfChain(s, depth);
            out_ << '\n';
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            out_ << "while (" << EmitExpression(s.cond) << ") {\n";
            Statements(s.body, depth + 1);
            out_ << Indent(depth) << "}\n";
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            out_ << "for (";
            if (s.init) {
              if (auto* d = std::get_if<VarDecl>(&*s.init)) {
                out_ << Decl(*d);
              } else {
                out_ << AssignText(std::get<Assign>(*s.init));
              }
            }
            out_ << ';';
            if (s.cond) out_ << ' ' << EmitExpression(*s.cond);
            out_ << ';';
            if (s.step) out_ << ' ' << AssignText(*s.step);
            out_ << ") {\n";
            Statements(s.body, depth + 1);
            out_ << Indent(depth) << "}\n";
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            out_ << "assert(" << EmitExpression(s.cond) << ");\n";
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            out_ << "return";
            if (s.value) out_ << ' ' << EmitExpression(*s.value);
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            out_ << "break;\n";
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            out_ << "continue;\n";
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            out_ << EmitExpression(Expression{s.call}) << ";\n";
          }
        },
        stmt.node);
  }

  std::ostringstream out_;
};

std::string Operand(const Expression& e) {
  if (std::holds_alternative<BinaryExpr>(e.node) ||
      std::holds_alternative<UnaryExpr>(e.node)) {
    return "(" + EmitExpression(e) + ")";
  }
  return EmitExpression(e);
}

std::string Receiver(const Expression& e) {
  if (std::holds_alternative<VarRef>(e.node)) return EmitExpression(e);
  return "(" + EmitExpression(e) + ")";
}

}  // namespace

std::string EmitExpression(const Expression& expr) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Literal>) {
          if (e.is_bool) return e.value != 0 ? "true" : "false";
          return ToDecimal(e.value);
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return e.name;
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return Operand(*e.lhs) + " " + std::string(BinaryOpSymbol(e.op)) + " " +
                 Operand(*e.rhs);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return std::string(UnaryOpSymbol(e.op)) + Operand(*e.operand);
        } else {
          std::string args;
          size_t first = e.kind == CallKind::kNew ? 0 : 1;
          for (size_t i = first; i < e.args.size(); ++i) {
            if (i > first) args += ", ";
            args += EmitExpression(e.args[i]);
          }
          if (e.kind == CallKind::kNew) return "new " + e.contract + "(" + args + ")";
          std::string recv = e.args.empty() ? "this" : Receiver(e.args[0]);
          return recv + "." + std::string(CallKindName(e.kind)) + "(" + args + ")";
        }
      },
      expr.node);
}

std::string EmitSource(const ContractAst& ast) { return SourceWriter().Contract(ast); }

namespace {

class Dumper {
 public:
  std::string Run(const ContractAst& ast) {
    Line(0, "contract " + ast.name);
    for (const auto& sv : ast.state_vars) {
      Line(1, "state_var " + std::string(TypeTagName(sv.type)) + " " + sv.name);
    }
    for (const auto& fn : ast.functions) {
      std::string head = "function " + fn.name + " visibility=" +
                         (fn.visibility ? std::string(VisibilityName(*fn.visibility)) : "-") +
                         " mutability=" +
                         (fn.mutability == Mutability::kNone
                              ? std::string("-")
                              : std::string(MutabilityName(fn.mutability))) +
                         " returns=" +
                         (fn.returns ? std::string(TypeTagName(*fn.returns)) : "-");
      Line(1, head);
      for (const auto& p : fn.params) {
        Line(2, "param " + std::string(TypeTagName(p.type)) + " " + p.name);
      }
      BlockDump(fn.body, 2, "body");
    }
    return out_.str();
  }

 private:
  void Line(int depth, const std::string& text) {
    out_ << std::string(static_cast<size_t>(depth) * 2, ' ') << text << '\n';
  }

  void BlockDump(const Block& b, int depth, const std::string& label) {
    Line(depth, label);
    for (const auto& s : b) StmtDump(s, depth + 1);
  }

  void AssignDump(const Assign& a, int depth) {
    Line(depth, "assign " + a.target + " " + std::string(AssignOpSymbol(a.op)) +
                    (a.op == AssignOp::kPreInc || a.op == AssignOp::kPreDec ? " pre" : ""));
    if (a.value) ExprDump(*a.value, depth + 1);
  }

  void DeclDump(const VarDecl& d, int depth) {
    Line(depth, "var_decl " + std::string(TypeTagName(d.type)) + " " + d.name);
    if (d.init) ExprDump(*d.init, depth + 1);
  }

  void StmtDump(const Statement& stmt, int depth) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            DeclDump(s, depth);
          } else if constexpr (std::is_same_v<T, Assign>) {
            AssignDump(s, depth);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            Line(depth, "if");
            ExprDump(s.cond, depth + 1);
            BlockDump(s.then_body, depth + 1, "then");
            if (s.else_body) BlockDump(*s.else_body, depth + 1, "else");
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            Line(depth, "while");
            ExprDump(s.cond, depth + 1);
            BlockDump(s.body, depth + 1, "body");
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            Line(depth, "for");
            if (s.init) {
              if (auto* d = std::get_if<VarDecl>(&*s.init)) {
                DeclDump(*d, depth + 1);
              } else {
                AssignDump(std::get<Assign>(*s.init), depth + 1);
              }
            } else {
              Line(depth + 1, "-");
            }
            if (s.cond) {
              ExprDump(*s.cond, depth + 1);
            } else {
              Line(depth + 1, "-");
            }
            if (s.step) {
              AssignDump(*s.step, depth + 1);
            } else {
              Line(depth + 1, "-");
            }
            BlockDump(s.body, depth + 1, "body");
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            Line(depth, "assert");
            ExprDump(s.cond, depth + 1);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            Line(depth, "return");
            if (s.value) ExprDump(*s.value, depth + 1);
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            Line(depth, "break");
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            Line(depth, "continue");
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            Line(depth, "expr_stmt");
            ExprDump(Expression{s.call}, depth + 1);
          }
        },
        stmt.node);
  }

  void ExprDump(const Expression& expr, int depth) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Literal>) {
            Line(depth, std::string(e.is_bool ? "bool " : "literal ") + ToDecimal(e.value));
          } else if constexpr (std::is_same_v<T, VarRef>) {
            Line(depth, "var " + e.name);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            Line(depth, "binary " + std::string(BinaryOpSymbol(e.op)));
            ExprDump(*e.lhs, depth + 1);
            ExprDump(*e.rhs, depth + 1);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            Line(depth, "unary " + std::string(UnaryOpSymbol(e.op)));
            ExprDump(*e.operand, depth + 1);
          } else {
            Line(depth, "critical_call " + std::string(CallKindName(e.kind)) +
                            (e.contract.empty() ? "" : " " + e.contract));
            for (const auto& a : e.args) ExprDump(a, depth + 1);
          }
        },
        expr.node);
  }

  std::ostringstream out_;
};

}  // namespace

std::string DumpAst(const ContractAst& ast) { return Dumper().Run(ast); }

}  // namespace evmdiff
