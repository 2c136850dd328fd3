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

#include "evmdiff/mutators.h"

#include <algorithm>
#include <functional>
#include <set>

#include "evmdiff/compiler.h"
#include "evmdiff/errors.h"
#include "evmdiff/validate.h"

namespace evmdiff {
namespace {

constexpr int kMaxAttempts = 16;

constexpr std::array<std::string_view, kNumMutators> kNames = {
    "local variable", "conditional operator", "arithmetic operator", "function property",
    "loop operator",  "assert statement",     "return statement",    "control structure"};

constexpr std::array<BinaryOp, 5> kArithmeticOps = {BinaryOp::kAdd, BinaryOp::kSub,
                                                    BinaryOp::kMul, BinaryOp::kDiv,
                                                    BinaryOp::kMod};
constexpr std::array<BinaryOp, 6> kComparisonOps = {BinaryOp::kLt, BinaryOp::kLe,
                                                    BinaryOp::kGt, BinaryOp::kGe,
                                                    BinaryOp::kEq, BinaryOp::kNe};

std::string At(const std::string& base, size_t i) { return base + "[" + std::to_string(i) + "]"; }

bool Sound(const ContractAst& ast) {
  if (!Validate(ast).empty()) return false;
  try {
    CompileContract(ast);
  } catch (const CompileError&) {
    return false;
  }
  return true;
}

BinaryOp Negate(BinaryOp op) {
  switch (op) {
    case BinaryOp::kLt: return BinaryOp::kGe;
    case BinaryOp::kGe: return BinaryOp::kLt;
    case BinaryOp::kGt: return BinaryOp::kLe;
    case BinaryOp::kLe: return BinaryOp::kGt;
    case BinaryOp::kEq: return BinaryOp::kNe;
    case BinaryOp::kNe: return BinaryOp::kEq;
    default: return op;
  }
}

template <typename T, size_t N>
T OtherThan(const std::array<T, N>& pool, T current, Rng& rng) {
  std::vector<T> rest;
  for (T t : pool) {
    if (t != current) rest.push_back(t);
  }
  return rest[UniformIndex(rng, rest.size())];
}

// Pre-order walk over every node that carries a path, with hooks for the
// node kinds mutators care about. Hooks may edit nodes in place but must not
// change the shape of any block being walked.
struct Walker {
  std::function<void(Expression&, const std::string&)> on_expr;
  std::function<void(Assign&, const std::string&)> on_assign;
  std::function<void(VarDecl&, const std::string&)> on_decl;
  std::function<void(Statement&, const std::string&)> on_loop;
  std::function<void(Block&, const std::string&)> on_block;
  std::function<void(Statement&, const std::string&)> on_stmt;

  void Contract(ContractAst& ast) {
    for (size_t i = 0; i < ast.functions.size(); ++i) {
      Body(ast.functions[i].body, "functions[" + std::to_string(i) + "].body");
    }
  }

  void Body(Block& block, const std::string& path) {
    if (on_block) on_block(block, path);
    for (size_t i = 0; i < block.size(); ++i) Stmt(block[i], At(path, i));
  }

  void Expr(Expression& e, const std::string& path) {
    if (on_expr) on_expr(e, path);
    if (auto* b = std::get_if<BinaryExpr>(&e.node)) {
      Expr(*b->lhs, path + ".lhs");
      Expr(*b->rhs, path + ".rhs");
    } else if (auto* u = std::get_if<UnaryExpr>(&e.node)) {
      Expr(*u->operand, path + ".operand");
    } else if (auto* c = std::get_if<CriticalCall>(&e.node)) {
      Call(*c, path);
    }
  }

  void Call(CriticalCall& c, const std::string& path) {
    for (size_t i = 0; i < c.args.size(); ++i) Expr(c.args[i], path + ".args[" + std::to_string(i) + "]");
  }

  void Decl(VarDecl& d, const std::string& path) {
    if (on_decl) on_decl(d, path);
    if (d.init) Expr(*d.init, path + ".init");
  }

  void AssignNode(Assign& a, const std::string& path) {
    if (on_assign) on_assign(a, path);
    if (a.value) Expr(*a.value, path + ".value");
  }

  void Stmt(Statement& stmt, const std::string& path) {
    if (on_stmt) on_stmt(stmt, path);
    std::visit(
        [&](auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            Decl(s, path);
          } else if constexpr (std::is_same_v<T, Assign>) {
            AssignNode(s, path);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            Expr(s.cond, path + ".cond");
            Body(s.then_body, path + ".then");
            if (s.else_body) Body(*s.else_body, path + ".else");
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            if (on_loop) on_loop(stmt, path);
            Expr(s.cond, path + ".cond");
            Body(s.body, path + ".body");
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (on_loop) on_loop(stmt, path);
            if (s.init) {
              if (auto* d = std::get_if<VarDecl>(&*s.init)) {
                Decl(*d, path + ".init");
              } else {
                AssignNode(std::get<Assign>(*s.init), path + ".init");
              }
            }
            if (s.cond) Expr(*s.cond, path + ".cond");
            if (s.step) AssignNode(*s.step, path + ".step");
            Body(s.body, path + ".body");
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            Expr(s.cond, path + ".cond");
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (s.value) Expr(*s.value, path + ".value");
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            Call(s.call, path + ".call");
          }
        },
        stmt.node);
  }
};

class Mutation {
 public:
  Mutation(const CastTree& cast, Rng& rng) : source_(EraseCast(cast)), rng_(rng) {
    for (auto& p : CriticalPaths(cast)) critical_.insert(std::move(p));
  }

  MutationOutcome Run(MutatorId id) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      ContractAst ast = source_;
      std::vector<std::string> sites;
      bool applicable = Dispatch(id, ast, sites);
      if (!applicable) break;
      if (ast != source_ && Sound(ast)) {
        return MutationOutcome{std::move(ast), {id}, std::move(sites)};
      }
    }
    throw NoApplicableSite(id);
  }

 private:
  bool Dispatch(MutatorId id, ContractAst& ast, std::vector<std::string>& sites) {
    switch (id) {
      case kLocalVariable: return LocalVariable(ast, sites);
      case kConditionalOperator: return ConditionalOperator(ast, sites);
      case kArithmeticOperator: return ArithmeticOperator(ast, sites);
      case kFunctionProperty: return FunctionProperty(ast, sites);
      case kLoopOperator: return LoopOperator(ast, sites);
      case kAssertStatement: return AssertStatement(ast, sites);
      case kReturnStatement: return ReturnStatement(ast, sites);
      case kControlStructure: return ControlStructure(ast, sites);
      default: throw Error("unknown mutator id " + std::to_string(id));
    }
  }

  bool IsCritical(const std::string& path) const { return critical_.count(path) > 0; }

  bool SubtreeCritical(const std::string& path) const {
    auto it = critical_.lower_bound(path + ".");
    return it != critical_.end() && it->starts_with(path + ".");
  }

  // Every local declaration gets a different type tag. Each swap is checked
  // on its own so one unrepresentable initializer does not block the rest.
  bool LocalVariable(ContractAst& ast, std::vector<std::string>& sites) {
    std::vector<std::pair<VarDecl*, std::string>> decls;
    Walker w;
    w.on_decl = [&](VarDecl& d, const std::string& p) { decls.emplace_back(&d, p); };
    w.Contract(ast);
    if (decls.empty()) return false;
    for (auto& [decl, path] : decls) {
      TypeTag original = decl->type;
      std::vector<TypeTag> options;
      for (TypeTag t : kAllTypeTags) {
        if (t != original) options.push_back(t);
      }
      std::shuffle(options.begin(), options.end(), rng_);
      for (TypeTag t : options) {
        decl->type = t;
        if (Validate(ast).empty()) break;
        decl->type = original;
      }
      if (decl->type != original) sites.push_back(path);
    }
    return !sites.empty();
  }

  bool ConditionalOperator(ContractAst& ast, std::vector<std::string>& sites) {
    Walker w;
    w.on_expr = [&](Expression& e, const std::string& p) {
      auto* b = std::get_if<BinaryExpr>(&e.node);
      if (b && IsComparison(b->op)) {
        b->op = Negate(b->op);
        sites.push_back(p);
      }
    };
    w.Contract(ast);
    return !sites.empty();
  }

  bool ArithmeticOperator(ContractAst& ast, std::vector<std::string>& sites) {
    Walker w;
    w.on_expr = [&](Expression& e, const std::string& p) {
      auto* b = std::get_if<BinaryExpr>(&e.node);
      if (b && IsArithmetic(b->op)) {
        b->op = OtherThan(kArithmeticOps, b->op, rng_);
        sites.push_back(p);
      }
    };
    w.on_assign = [&](Assign& a, const std::string& p) {
      if (auto op = CompoundArithmetic(a.op)) {
        a.op = CompoundFor(OtherThan(kArithmeticOps, *op, rng_));
        sites.push_back(p);
      }
    };
    w.Contract(ast);
    return !sites.empty();
  }

  // Each function gets one attribute edit: visibility or mutability is
  // inserted when absent, otherwise modified or deleted.
  bool FunctionProperty(ContractAst& ast, std::vector<std::string>& sites) {
    for (size_t i = 0; i < ast.functions.size(); ++i) {
      FunctionDecl& fn = ast.functions[i];
      if (CoinFlip(rng_)) {
        if (!fn.visibility || CoinFlip(rng_)) {
          fn.visibility =
              fn.visibility ? OtherThan(kAllVisibilities, *fn.visibility, rng_)
                            : kAllVisibilities[UniformIndex(rng_, kAllVisibilities.size())];
        } else {
          fn.visibility.reset();
        }
      } else {
        if (fn.mutability == Mutability::kNone) {
          fn.mutability = kAllMutabilityKeywords[UniformIndex(rng_, kAllMutabilityKeywords.size())];
        } else if (CoinFlip(rng_)) {
          fn.mutability = OtherThan(kAllMutabilityKeywords, fn.mutability, rng_);
        } else {
          fn.mutability = Mutability::kNone;
        }
      }
      sites.push_back("functions[" + std::to_string(i) + "]");
    }
    return !sites.empty();
  }

  // One literal operand of a comparison inside a loop condition is raised.
  bool LoopOperator(ContractAst& ast, std::vector<std::string>& sites) {
    std::vector<std::pair<Literal*, std::string>> bounds;
    Walker w;
    w.on_loop = [&](Statement& s, const std::string& p) {
      Expression* cond = nullptr;
      if (auto* wl = std::get_if<WhileStmt>(&s.node)) cond = &wl->cond;
      if (auto* fl = std::get_if<ForStmt>(&s.node); fl && fl->cond) cond = &*fl->cond;
      if (!cond) return;
      Walker inner;
      inner.on_expr = [&](Expression& e, const std::string& ep) {
        auto* b = std::get_if<BinaryExpr>(&e.node);
        if (!b || !IsComparison(b->op)) return;
        for (auto [side, name] : {std::pair{&b->lhs, ".lhs"}, std::pair{&b->rhs, ".rhs"}}) {
          auto* lit = std::get_if<Literal>(&(**side).node);
          if (lit && !lit->is_bool && lit->value <= kWordMax - kLoopBoundDelta) {
            bounds.emplace_back(lit, ep + name);
          }
        }
      };
      inner.Expr(*cond, p + ".cond");
    };
    w.Contract(ast);
    if (bounds.empty()) return false;
    auto& [lit, path] = bounds[UniformIndex(rng_, bounds.size())];
    lit->value += kLoopBoundDelta;
    sites.push_back(path);
    return true;
  }

  struct InsertPoint {
    Block* block;
    size_t index;
    std::string block_path;
    std::vector<std::string> scope;
    bool before_critical;
  };

  void CollectInsertPoints(Block& block, const std::string& path, std::vector<std::string> scope,
                           std::vector<InsertPoint>& out) {
    for (size_t i = 0; i <= block.size(); ++i) {
      bool crit = i < block.size() && IsCritical(At(path, i));
      out.push_back(InsertPoint{&block, i, path, scope, crit});
      if (i == block.size()) break;
      std::visit(
          [&](auto& s) {
            using T = std::decay_t<decltype(s)>;
            std::string sp = At(path, i);
            if constexpr (std::is_same_v<T, VarDecl>) {
              scope.push_back(s.name);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              CollectInsertPoints(s.then_body, sp + ".then", scope, out);
              if (s.else_body) CollectInsertPoints(*s.else_body, sp + ".else", scope, out);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
              CollectInsertPoints(s.body, sp + ".body", scope, out);
            } else if constexpr (std::is_same_v<T, ForStmt>) {
              auto inner = scope;
              if (s.init) {
                if (auto* d = std::get_if<VarDecl>(&*s.init)) inner.push_back(d->name);
              }
              CollectInsertPoints(s.body, sp + ".body", inner, out);
            }
          },
          block[i].node);
    }
  }

  template <typename T>
  T& Pick(std::vector<T>& all, bool (*preferred)(const T&)) {
    std::vector<T*> hot;
    for (auto& x : all) {
      if (preferred(x)) hot.push_back(&x);
    }
    if (!hot.empty() && CoinFlip(rng_)) return *hot[UniformIndex(rng_, hot.size())];
    return all[UniformIndex(rng_, all.size())];
  }

  bool AssertStatement(ContractAst& ast, std::vector<std::string>& sites) {
    std::vector<InsertPoint> points;
    for (size_t f = 0; f < ast.functions.size(); ++f) {
      std::vector<std::string> scope;
      for (const auto& sv : ast.state_vars) scope.push_back(sv.name);
      for (const auto& p : ast.functions[f].params) scope.push_back(p.name);
      CollectInsertPoints(ast.functions[f].body, "functions[" + std::to_string(f) + "].body",
                          scope, points);
    }
    std::erase_if(points, [](const InsertPoint& p) { return p.scope.empty(); });

    std::vector<std::pair<Block*, size_t>> asserts;
    std::vector<std::string> assert_paths;
    Walker w;
    w.on_block = [&](Block& b, const std::string& p) {
      for (size_t i = 0; i < b.size(); ++i) {
        if (std::holds_alternative<AssertStmt>(b[i].node)) {
          asserts.emplace_back(&b, i);
          assert_paths.push_back(At(p, i));
        }
      }
    };
    w.Contract(ast);

    if (points.empty() && asserts.empty()) return false;
    bool insert = asserts.empty() || (!points.empty() && CoinFlip(rng_));
    if (!insert) {
      size_t k = UniformIndex(rng_, asserts.size());
      auto [block, index] = asserts[k];
      block->erase(block->begin() + static_cast<ptrdiff_t>(index));
      sites.push_back(assert_paths[k]);
      return true;
    }
    InsertPoint& at = Pick<InsertPoint>(points, [](const InsertPoint& p) {
      return p.before_critical;
    });
    const auto& scope = at.scope;
    Expression lhs = MakeVar(scope[UniformIndex(rng_, scope.size())]);
    Expression rhs = MakeLiteral(0);
    if (scope.size() > 1) {
      std::string other;
      do {
        other = scope[UniformIndex(rng_, scope.size())];
      } while (other == std::get<VarRef>(lhs.node).name);
      rhs = MakeVar(other);
    }
    BinaryOp op = kComparisonOps[UniformIndex(rng_, kComparisonOps.size())];
    Statement s{AssertStmt{MakeBinary(op, std::move(lhs), std::move(rhs))}};
    at.block->insert(at.block->begin() + static_cast<ptrdiff_t>(at.index), std::move(s));
    sites.push_back(at.block_path);
    return true;
  }

  // Removes value-returning statements anywhere in `block`.
  static void StripReturns(Block& block, const std::string& path,
                           std::vector<std::string>& sites) {
    for (size_t i = 0; i < block.size(); ++i) {
      std::string sp = At(path, i);
      std::visit(
          [&](auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ReturnStmt>) {
              if (s.value) sites.push_back(sp);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              StripReturns(s.then_body, sp + ".then", sites);
              if (s.else_body) StripReturns(*s.else_body, sp + ".else", sites);
            } else if constexpr (std::is_same_v<T, WhileStmt> || std::is_same_v<T, ForStmt>) {
              StripReturns(s.body, sp + ".body", sites);
            }
          },
          block[i].node);
    }
    std::erase_if(block, [](const Statement& s) {
      const auto* r = std::get_if<ReturnStmt>(&s.node);
      return r && r->value;
    });
  }

  bool ReturnStatement(ContractAst& ast, std::vector<std::string>& sites) {
    std::vector<size_t> candidates;
    for (size_t i = 0; i < ast.functions.size(); ++i) {
      if (ast.functions[i].returns) candidates.push_back(i);
    }
    if (candidates.empty()) return false;
    size_t f = candidates[UniformIndex(rng_, candidates.size())];
    FunctionDecl& fn = ast.functions[f];
    std::string path = "functions[" + std::to_string(f) + "]";
    sites.push_back(path);
    StripReturns(fn.body, path + ".body", sites);
    fn.returns.reset();
    return true;
  }

  bool ControlStructure(ContractAst& ast, std::vector<std::string>& sites) {
    struct LoopSite {
      Block* body;
      std::string body_path;
      bool critical;
    };
    std::vector<LoopSite> loops;
    Walker w;
    w.on_loop = [&](Statement& s, const std::string& p) {
      Block* body = nullptr;
      if (auto* wl = std::get_if<WhileStmt>(&s.node)) body = &wl->body;
      if (auto* fl = std::get_if<ForStmt>(&s.node)) body = &fl->body;
      loops.push_back(LoopSite{body, p + ".body", SubtreeCritical(p)});
    };
    w.Contract(ast);
    if (loops.empty()) return false;
    LoopSite& loop = Pick<LoopSite>(loops, [](const LoopSite& l) { return l.critical; });
    size_t index = UniformIndex(rng_, loop.body->size() + 1);
    Statement s = CoinFlip(rng_) ? Statement{BreakStmt{}} : Statement{ContinueStmt{}};
    loop.body->insert(loop.body->begin() + static_cast<ptrdiff_t>(index), std::move(s));
    sites.push_back(loop.body_path);
    return true;
  }

  ContractAst source_;
  Rng& rng_;
  std::set<std::string> critical_;
};

}  // namespace

std::string_view MutatorName(MutatorId id) {
  if (id < 1 || id > kNumMutators) return "unknown";
  return kNames[static_cast<size_t>(id - 1)];
}

MutationOutcome ApplyMutator(const CastTree& cast, MutatorId id, Rng& rng) {
  return Mutation(cast, rng).Run(id);
}

}  // namespace evmdiff
