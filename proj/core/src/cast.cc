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

#include "evmdiff/cast.h"

#include <stdexcept>

namespace evmdiff {
namespace {

template <typename E>
std::string EnumAttr(E e) {
  return std::to_string(static_cast<int>(e));
}

template <typename E>
E AttrEnum(const std::string& s) {
  return static_cast<E>(std::stoi(s));
}

std::string Index(const std::string& base, const char* field, size_t i) {
  return base + "." + field + "[" + std::to_string(i) + "]";
}

CastNode Empty(std::string path) { return CastNode{CastKind::kEmpty, {}, std::move(path)}; }

class Builder {
 public:
  CastNode Contract(const ContractAst& ast) {
    CastNode root{CastKind::kContract, {ast.name}, ""};
    for (size_t i = 0; i < ast.state_vars.size(); ++i) {
      const auto& sv = ast.state_vars[i];
      root.children.push_back(CastNode{CastKind::kStateVar,
                                       {EnumAttr(sv.type), sv.name},
                                       "state_vars[" + std::to_string(i) + "]"});
    }
    for (size_t i = 0; i < ast.functions.size(); ++i) {
      root.children.push_back(Function(ast.functions[i], "functions[" + std::to_string(i) + "]"));
    }
    return root;
  }

 private:
  CastNode Function(const FunctionDecl& fn, const std::string& path) {
    CastNode n{CastKind::kFunction,
               {fn.name, fn.visibility ? EnumAttr(*fn.visibility) : "",
                EnumAttr(fn.mutability), fn.returns ? EnumAttr(*fn.returns) : ""},
               path};
    for (size_t i = 0; i < fn.params.size(); ++i) {
      n.children.push_back(CastNode{CastKind::kParam,
                                    {EnumAttr(fn.params[i].type), fn.params[i].name},
                                    Index(path, "params", i)});
    }
    n.children.push_back(BlockNode(fn.body, path + ".body", false));
    return n;
  }

  CastNode BlockNode(const Block& b, const std::string& path, bool critical) {
    CastNode n{CastKind::kBlock, {}, path, critical};
    for (size_t i = 0; i < b.size(); ++i) {
      n.children.push_back(Stmt(b[i], path + "[" + std::to_string(i) + "]", critical));
    }
    return n;
  }

  CastNode Decl(const VarDecl& d, const std::string& path, bool critical) {
    CastNode n{CastKind::kVarDecl, {EnumAttr(d.type), d.name}, path, critical};
    n.children.push_back(d.init ? Expr(*d.init, path + ".init", critical)
                                : Empty(path + ".init"));
    return n;
  }

  CastNode AssignNode(const Assign& a, const std::string& path, bool critical) {
    CastNode n{CastKind::kAssign, {a.target, EnumAttr(a.op)}, path, critical};
    n.children.push_back(a.value ? Expr(*a.value, path + ".value", critical)
                                 : Empty(path + ".value"));
    return n;
  }

  CastNode Stmt(const Statement& stmt, const std::string& path, bool critical) {
    return std::visit(
        [&](const auto& s) -> CastNode {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            return Decl(s, path, critical);
          } else if constexpr (std::is_same_v<T, Assign>) {
            return AssignNode(s, path, critical);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            CastNode n{CastKind::kIf, {}, path, critical};
            n.children.push_back(Expr(s.cond, path + ".cond", critical));
            n.children.push_back(BlockNode(s.then_body, path + ".then", critical));
            n.children.push_back(s.else_body
                                     ? BlockNode(*s.else_body, path + ".else", critical)
                                     : Empty(path + ".else"));
            return n;
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            CastNode n{CastKind::kWhile, {}, path, critical};
            n.children.push_back(Expr(s.cond, path + ".cond", critical));
            n.children.push_back(BlockNode(s.body, path + ".body", critical));
            return n;
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            CastNode n{CastKind::kFor, {}, path, critical};
            if (!s.init) {
              n.children.push_back(Empty(path + ".init"));
            } else if (const auto* d = std::get_if<VarDecl>(&*s.init)) {
              n.children.push_back(Decl(*d, path + ".init", critical));
            } else {
              n.children.push_back(AssignNode(std::get<Assign>(*s.init), path + ".init", critical));
            }
            n.children.push_back(s.cond ? Expr(*s.cond, path + ".cond", critical)
                                        : Empty(path + ".cond"));
            n.children.push_back(s.step ? AssignNode(*s.step, path + ".step", critical)
                                        : Empty(path + ".step"));
            n.children.push_back(BlockNode(s.body, path + ".body", critical));
            return n;
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            CastNode n{CastKind::kAssert, {}, path, critical};
            n.children.push_back(Expr(s.cond, path + ".cond", critical));
            return n;
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            CastNode n{CastKind::kReturn, {}, path, critical};
            n.children.push_back(s.value ? Expr(*s.value, path + ".value", critical)
                                         : Empty(path + ".value"));
            return n;
          } else if constexpr (std::is_same_v<T, BreakStmt>) {
            return CastNode{CastKind::kBreak, {}, path, critical};
          } else if constexpr (std::is_same_v<T, ContinueStmt>) {
            return CastNode{CastKind::kContinue, {}, path, critical};
          } else {
            // The whole statement is the critical call site.
            CastNode n{CastKind::kExprStmt, {}, path, true};
            n.children.push_back(Expr(Expression{s.call}, path + ".call", true));
            return n;
          }
        },
        stmt.node);
  }

  CastNode Expr(const Expression& expr, const std::string& path, bool critical) {
    return std::visit(
        [&](const auto& e) -> CastNode {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Literal>) {
            return CastNode{CastKind::kLiteral,
                            {ToDecimal(e.value), e.is_bool ? "bool" : "int"},
                            path,
                            critical};
          } else if constexpr (std::is_same_v<T, VarRef>) {
            return CastNode{CastKind::kVarRef, {e.name}, path, critical};
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            CastNode n{CastKind::kBinary, {EnumAttr(e.op)}, path, critical};
            n.children.push_back(Expr(*e.lhs, path + ".lhs", critical));
            n.children.push_back(Expr(*e.rhs, path + ".rhs", critical));
            return n;
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            CastNode n{CastKind::kUnary, {EnumAttr(e.op)}, path, critical};
            n.children.push_back(Expr(*e.operand, path + ".operand", critical));
            return n;
          } else {
            CastNode n{CastKind::kCriticalCall, {EnumAttr(e.kind), e.contract}, path, true};
            for (size_t i = 0; i < e.args.size(); ++i) {
              n.children.push_back(Expr(e.args[i], Index(path, "args", i), true));
            }
            return n;
          }
        },
        expr.node);
  }
};

class Eraser {
 public:
  ContractAst Contract(const CastNode& root) {
    ContractAst ast;
    ast.name = root.attrs.at(0);
    for (const auto& c : root.children) {
      if (c.kind == CastKind::kStateVar) {
        ast.state_vars.push_back(StateVar{AttrEnum<TypeTag>(c.attrs[0]), c.attrs[1]});
      } else if (c.kind == CastKind::kFunction) {
        ast.functions.push_back(Function(c));
      } else {
        throw std::invalid_argument("unexpected node under contract");
      }
    }
    return ast;
  }

 private:
  FunctionDecl Function(const CastNode& n) {
    FunctionDecl fn;
    fn.name = n.attrs[0];
    if (!n.attrs[1].empty()) fn.visibility = AttrEnum<Visibility>(n.attrs[1]);
    fn.mutability = AttrEnum<Mutability>(n.attrs[2]);
    if (!n.attrs[3].empty()) fn.returns = AttrEnum<TypeTag>(n.attrs[3]);
    for (const auto& c : n.children) {
      if (c.kind == CastKind::kParam) {
        fn.params.push_back(Param{c.attrs[1], AttrEnum<TypeTag>(c.attrs[0])});
      } else {
        fn.body = BlockOf(c);
      }
    }
    return fn;
  }

  Block BlockOf(const CastNode& n) {
    Block b;
    for (const auto& c : n.children) b.push_back(Stmt(c));
    return b;
  }

  std::optional<Expression> OptExpr(const CastNode& n) {
    if (n.kind == CastKind::kEmpty) return std::nullopt;
    return Expr(n);
  }

  VarDecl Decl(const CastNode& n) {
    return VarDecl{AttrEnum<TypeTag>(n.attrs[0]), n.attrs[1], OptExpr(n.children[0])};
  }

  Assign AssignOf(const CastNode& n) {
    return Assign{n.attrs[0], AttrEnum<AssignOp>(n.attrs[1]), OptExpr(n.children[0])};
  }

  Statement Stmt(const CastNode& n) {
    switch (n.kind) {
      case CastKind::kVarDecl: return Statement{Decl(n)};
      case CastKind::kAssign: return Statement{AssignOf(n)};
      case CastKind::kIf: {
        IfStmt s{Expr(n.children[0]), BlockOf(n.children[1]), std::nullopt};
        if (n.children[2].kind != CastKind::kEmpty) s.else_body = BlockOf(n.children[2]);
        return Statement{std::move(s)};
      }
      case CastKind::kWhile:
        return Statement{WhileStmt{Expr(n.children[0]), BlockOf(n.children[1])}};
      case CastKind::kFor: {
        ForStmt s;
        const CastNode& init = n.children[0];
        if (init.kind == CastKind::kVarDecl) s.init = ForInit{Decl(init)};
        if (init.kind == CastKind::kAssign) s.init = ForInit{AssignOf(init)};
        s.cond = OptExpr(n.children[1]);
        if (n.children[2].kind != CastKind::kEmpty) s.step = AssignOf(n.children[2]);
        s.body = BlockOf(n.children[3]);
        return Statement{std::move(s)};
      }
      case CastKind::kAssert: return Statement{AssertStmt{Expr(n.children[0])}};
      case CastKind::kReturn: return Statement{ReturnStmt{OptExpr(n.children[0])}};
      case CastKind::kBreak: return Statement{BreakStmt{}};
      case CastKind::kContinue: return Statement{ContinueStmt{}};
      case CastKind::kExprStmt: {
        Expression e = Expr(n.children[0]);
        return Statement{ExprStmt{std::get<CriticalCall>(std::move(e.node))}};
      }
      default: throw std::invalid_argument("node is not a statement: " + n.path);
    }
  }

  Expression Expr(const CastNode& n) {
    switch (n.kind) {
      case CastKind::kLiteral:
        return Expression{Literal{*ParseWordLiteral(n.attrs[0]), n.attrs[1] == "bool"}};
      case CastKind::kVarRef: return MakeVar(n.attrs[0]);
      case CastKind::kBinary:
        return MakeBinary(AttrEnum<BinaryOp>(n.attrs[0]), Expr(n.children[0]),
                          Expr(n.children[1]));
      case CastKind::kUnary:
        return MakeUnary(AttrEnum<UnaryOp>(n.attrs[0]), Expr(n.children[0]));
      case CastKind::kCriticalCall: {
        CriticalCall c{AttrEnum<CallKind>(n.attrs[0]), n.attrs[1], {}};
        for (const auto& a : n.children) c.args.push_back(Expr(a));
        return Expression{std::move(c)};
      }
      default: throw std::invalid_argument("node is not an expression: " + n.path);
    }
  }
};

void Walk(const CastNode& n, bool critical_only, std::vector<std::string>& out) {
  if (n.kind != CastKind::kEmpty && (!critical_only || n.critical)) out.push_back(n.path);
  for (const auto& c : n.children) Walk(c, critical_only, out);
}

}  // namespace

CastTree BuildCast(const ContractAst& ast) { return CastTree{Builder().Contract(ast)}; }

ContractAst EraseCast(const CastTree& cast) { return Eraser().Contract(cast.root); }

std::vector<std::string> CriticalPaths(const CastTree& cast) {
  std::vector<std::string> out;
  Walk(cast.root, true, out);
  return out;
}

std::vector<std::string> AllPaths(const CastTree& cast) {
  std::vector<std::string> out;
  Walk(cast.root, false, out);
  return out;
}

}  // namespace evmdiff
