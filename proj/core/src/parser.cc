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

#include "evmdiff/parser.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "evmdiff/errors.h"
#include "evmdiff/validate.h"

namespace evmdiff {
namespace {

enum class Tok { kIdent, kNumber, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipTrivia();
      SourcePos pos{line_, col_};
      if (at_ >= src_.size()) {
        out.push_back({Tok::kEnd, "<end of input>", pos});
        return out;
      }
      char c = src_[at_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
        size_t start = at_;
        while (at_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[at_])) ||
                src_[at_] == '_' || src_[at_] == '$')) {
          Advance();
        }
        out.push_back({Tok::kIdent, std::string(src_.substr(start, at_ - start)), pos});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = at_;
        while (at_ < src_.size() &&
               std::isalnum(static_cast<unsigned char>(src_[at_]))) {
          Advance();
        }
        out.push_back({Tok::kNumber, std::string(src_.substr(start, at_ - start)), pos});
      } else {
        static constexpr std::string_view kTwo[] = {
            "+=", "-=", "*=", "/=", "%=", "++", "--", "<=", ">=", "==", "!=", "&&", "||"};
        std::string text(1, c);
        for (auto two : kTwo) {
          if (src_.substr(at_, 2) == two) {
            text = std::string(two);
            break;
          }
        }
        static constexpr std::string_view kSingles = "{}();,.=+-*/%<>!^[]";
        if (text.size() == 1 && kSingles.find(c) == std::string_view::npos) {
          throw SyntaxError(pos, "token", text);
        }
        for (size_t i = 0; i < text.size(); ++i) Advance();
        out.push_back({Tok::kPunct, text, pos});
      }
    }
  }

 private:
  void Advance() {
    if (src_[at_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++at_;
  }

  void SkipTrivia() {
    while (at_ < src_.size()) {
      char c = src_[at_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (src_.substr(at_, 2) == "//") {
        while (at_ < src_.size() && src_[at_] != '\n') Advance();
      } else if (src_.substr(at_, 2) == "/*") {
        SourcePos pos{line_, col_};
        Advance();
        Advance();
        while (at_ < src_.size() && src_.substr(at_, 2) != "*/") Advance();
        if (at_ >= src_.size()) throw SyntaxError(pos, "'*/'", "<end of input>");
        Advance();
        Advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  size_t at_ = 0;
  size_t line_ = 1;
  size_t col_ = 1;
};

std::optional<CallKind> MessageCallKind(std::string_view name) {
  for (CallKind k : kAllCallKinds) {
    if (k != CallKind::kNew && CallKindName(k) == name) return k;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ContractAst ParseUnit() {
    while (PeekIs("pragma")) {
      Next();
      while (!PeekIs(";")) {
        if (Peek().kind == Tok::kEnd) Fail("';'");
        Next();
      }
      Next();
    }
    ContractAst ast;
    Expect("contract");
    ast.name = ExpectIdent();
    Expect("{");
    while (!PeekIs("}")) {
      if (PeekIs("function")) {
        ast.functions.push_back(ParseFunction());
      } else if (auto tag = TypeTagFromName(Peek().text);
                 tag && Peek().kind == Tok::kIdent) {
        Next();
        StateVar sv{*tag, ExpectIdent()};
        Expect(";");
        ast.state_vars.push_back(std::move(sv));
      } else {
        Fail("state variable or function");
      }
    }
    Expect("}");
    if (Peek().kind != Tok::kEnd) Fail("end of input");
    return ast;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool PeekIs(std::string_view text, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind != Tok::kEnd && t.text == text;
  }
  const Token& Next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void Fail(const std::string& expected) const {
    throw SyntaxError(Peek().pos, expected, Peek().text);
  }
  void Expect(std::string_view text) {
    if (!PeekIs(text)) Fail("'" + std::string(text) + "'");
    Next();
  }
  bool Accept(std::string_view text) {
    if (!PeekIs(text)) return false;
    Next();
    return true;
  }
  static bool IsKeyword(std::string_view s) {
    static constexpr std::string_view kKeywords[] = {
        "contract", "function", "returns", "return", "if", "else", "while",
        "for", "assert", "break", "continue", "new", "true", "false",
        "pragma", "public", "private", "internal", "external", "constant",
        "view", "pure", "payable"};
    for (auto k : kKeywords) {
      if (s == k) return true;
    }
    return TypeTagFromName(s).has_value();
  }
  std::string ExpectIdent() {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || IsKeyword(t.text)) Fail("identifier");
    return Next().text;
  }
  TypeTag ExpectType() {
    const Token& t = Peek();
    auto tag = t.kind == Tok::kIdent ? TypeTagFromName(t.text) : std::nullopt;
    if (!tag) Fail("type");
    Next();
    return *tag;
  }
  bool PeekIsType() const {
    return Peek().kind == Tok::kIdent && TypeTagFromName(Peek().text).has_value();
  }

  FunctionDecl ParseFunction() {
    FunctionDecl fn;
    Expect("function");
    fn.name = ExpectIdent();
    Expect("(");
    if (!PeekIs(")")) {
      do {
        TypeTag t = ExpectType();
        fn.params.push_back(Param{ExpectIdent(), t});
      } while (Accept(","));
    }
    Expect(")");
    while (true) {
      bool matched = false;
      for (Visibility v : kAllVisibilities) {
        if (PeekIs(VisibilityName(v))) {
          if (fn.visibility) Fail("at most one visibility");
          Next();
          fn.visibility = v;
          matched = true;
        }
      }
      for (Mutability m : kAllMutabilityKeywords) {
        if (PeekIs(MutabilityName(m))) {
          if (fn.mutability != Mutability::kNone) Fail("at most one mutability");
          Next();
          fn.mutability = m;
          matched = true;
        }
      }
      if (!matched) break;
    }
    if (Accept("returns")) {
      Expect("(");
      fn.returns = ExpectType();
      Expect(")");
    }
    fn.body = ParseBlock();
    return fn;
  }

  Block ParseBlock() {
    Expect("{");
    Block block;
    while (!PeekIs("}")) {
      if (Peek().kind == Tok::kEnd) Fail("'}'");
      block.push_back(ParseStatement());
    }
    Expect("}");
    return block;
  }

  // Braced block or a single statement.
  Block ParseBody() {
    if (PeekIs("{")) return ParseBlock();
    Block b;
    b.push_back(ParseStatement());
    return b;
  }

  VarDecl ParseVarDecl() {
    VarDecl d;
    d.type = ExpectType();
    d.name = ExpectIdent();
    if (Accept("=")) d.init = ParseExpr();
    return d;
  }

  static std::optional<AssignOp> AssignOpFor(std::string_view s) {
    static constexpr std::pair<std::string_view, AssignOp> kOps[] = {
        {"=", AssignOp::kSet},  {"+=", AssignOp::kAdd}, {"-=", AssignOp::kSub},
        {"*=", AssignOp::kMul}, {"/=", AssignOp::kDiv}, {"%=", AssignOp::kMod}};
    for (auto [text, op] : kOps) {
      if (s == text) return op;
    }
    return std::nullopt;
  }

  bool PeekIsAssign() const {
    if (PeekIs("++") || PeekIs("--")) return true;
    if (Peek().kind != Tok::kIdent || IsKeyword(Peek().text)) return false;
    const Token& op = Peek(1);
    return op.kind == Tok::kPunct &&
           (AssignOpFor(op.text).has_value() || op.text == "++" || op.text == "--");
  }

  Assign ParseAssign() {
    Assign a;
    if (PeekIs("++") || PeekIs("--")) {
      a.op = Next().text == "++" ? AssignOp::kPreInc : AssignOp::kPreDec;
      a.target = ExpectIdent();
      return a;
    }
    a.target = ExpectIdent();
    if (Accept("++")) {
      a.op = AssignOp::kPostInc;
    } else if (Accept("--")) {
      a.op = AssignOp::kPostDec;
    } else {
      auto op = AssignOpFor(Peek().text);
      if (!op || Peek().kind != Tok::kPunct) Fail("assignment operator");
      Next();
      a.op = *op;
      a.value = ParseExpr();
    }
    return a;
  }

  Statement ParseStatement() {
    if (PeekIsType()) {
      VarDecl d = ParseVarDecl();
      Expect(";");
      return Statement{std::move(d)};
    }
    if (Accept("if")) {
      Expect("(");
      IfStmt s{ParseExpr(), {}, std::nullopt};
      Expect(")");
      s.then_body = ParseBody();
      if (Accept("else")) s.else_body = ParseBody();
      return Statement{std::move(s)};
    }
    if (Accept("while")) {
      Expect("(");
      WhileStmt s{ParseExpr(), {}};
      Expect(")");
      s.body = ParseBody();
      return Statement{std::move(s)};
    }
    if (Accept("for")) {
      Expect("(");
      ForStmt s;
      if (!PeekIs(";")) {
        if (PeekIsType()) {
          s.init = ForInit{ParseVarDecl()};
        } else {
          s.init = ForInit{ParseAssign()};
        }
      }
      Expect(";");
      if (!PeekIs(";")) s.cond = ParseExpr();
      Expect(";");
      if (!PeekIs(")")) s.step = ParseAssign();
      Expect(")");
      s.body = ParseBody();
      return Statement{std::move(s)};
    }
    if (Accept("assert")) {
      Expect("(");
      AssertStmt s{ParseExpr()};
      Expect(")");
      Expect(";");
      return Statement{std::move(s)};
    }
    if (Accept("return")) {
      ReturnStmt s;
      if (!PeekIs(";")) s.value = ParseExpr();
      Expect(";");
      return Statement{std::move(s)};
    }
    if (Accept("break")) {
      Expect(";");
      return Statement{BreakStmt{}};
    }
    if (Accept("continue")) {
      Expect(";");
      return Statement{ContinueStmt{}};
    }
    if (PeekIsAssign()) {
      Assign a = ParseAssign();
      Expect(";");
      return Statement{std::move(a)};
    }
    SourcePos at = Peek().pos;
    std::string found = Peek().text;
    Expression e = ParseExpr();
    auto* call = std::get_if<CriticalCall>(&e.node);
    if (!call) throw SyntaxError(at, "statement", found);
    Expect(";");
    return Statement{ExprStmt{std::move(*call)}};
  }

  // Precedence climbing: || < && < equality < relational < additive <
  // multiplicative < unary.
  Expression ParseExpr() { return ParseBinary(0); }

  static int Precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=") return 3;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
    if (op == "+" || op == "-") return 5;
    if (op == "*" || op == "/" || op == "%") return 6;
    return -1;
  }

  static BinaryOp BinaryFor(std::string_view op) {
    static constexpr BinaryOp kAll[] = {
        BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul, BinaryOp::kDiv,
        BinaryOp::kMod, BinaryOp::kLt,  BinaryOp::kLe,  BinaryOp::kGt,
        BinaryOp::kGe,  BinaryOp::kEq,  BinaryOp::kNe,  BinaryOp::kAnd,
        BinaryOp::kOr};
    for (BinaryOp b : kAll) {
      if (BinaryOpSymbol(b) == op) return b;
    }
    return BinaryOp::kAdd;
  }

  Expression ParseBinary(int min_prec) {
    Expression lhs = ParseUnary();
    while (true) {
      const Token& t = Peek();
      int prec = t.kind == Tok::kPunct ? Precedence(t.text) : -1;
      if (prec < 0 || prec < min_prec) break;
      BinaryOp op = BinaryFor(Next().text);
      Expression rhs = ParseBinary(prec + 1);
      lhs = MakeBinary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expression ParseUnary() {
    if (Accept("-")) return MakeUnary(UnaryOp::kNeg, ParseUnary());
    if (Accept("!")) return MakeUnary(UnaryOp::kNot, ParseUnary());
    return ParsePostfix(ParsePrimary());
  }

  std::vector<Expression> ParseArgs() {
    std::vector<Expression> args;
    Expect("(");
    if (!PeekIs(")")) {
      do {
        args.push_back(ParseExpr());
      } while (Accept(","));
    }
    Expect(")");
    return args;
  }

  Expression ParsePostfix(Expression e) {
    while (PeekIs(".")) {
      Next();
      const Token& member = Peek();
      auto kind = member.kind == Tok::kIdent ? MessageCallKind(member.text) : std::nullopt;
      if (!kind) Fail("call, delegatecall, callcode, send or transfer");
      Next();
      CriticalCall call{*kind, "", {}};
      call.args.push_back(std::move(e));
      for (auto& a : ParseArgs()) call.args.push_back(std::move(a));
      e = Expression{std::move(call)};
    }
    return e;
  }

  Expression ParsePrimary() {
    const Token& t = Peek();
    if (t.kind == Tok::kNumber) {
      auto value = ParseWordLiteral(t.text);
      if (!value) {
        bool well_formed = true;
        std::string_view digits = t.text;
        bool hex = digits.size() > 2 && digits[0] == '0' &&
                   (digits[1] == 'x' || digits[1] == 'X');
        for (char c : hex ? digits.substr(2) : digits) {
          if (hex ? !std::isxdigit(static_cast<unsigned char>(c))
                  : !std::isdigit(static_cast<unsigned char>(c))) {
            well_formed = false;
          }
        }
        if (!well_formed) Fail("number");
        throw TypeError(t.text, "literal exceeds the uint256 range");
      }
      Next();
      return MakeLiteral(*value);
    }
    if (Accept("true")) return MakeBool(true);
    if (Accept("false")) return MakeBool(false);
    if (Accept("(")) {
      Expression e = ParseExpr();
      Expect(")");
      return e;
    }
    if (Accept("new")) {
      CriticalCall call{CallKind::kNew, ExpectIdent(), {}};
      call.args = ParseArgs();
      return Expression{std::move(call)};
    }
    if (t.kind == Tok::kIdent && !IsKeyword(t.text)) {
      return MakeVar(Next().text);
    }
    Fail("expression");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

ContractAst ParseUnchecked(std::string_view source) {
  Parser p(Lexer(source).Run());
  return p.ParseUnit();
}

ContractAst Parse(std::string_view source) {
  ContractAst ast = ParseUnchecked(source);
  auto violations = Validate(ast);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    throw TypeError(v.detail.empty() ? v.path : v.detail, v.rule + " at " + v.path);
  }
  return ast;
}

ContractAst ParseFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

}  // namespace evmdiff
