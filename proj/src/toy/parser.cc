// Copyright 2026 The mutfl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mutfl/toy/parser.h"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "mutfl/error.h"
#include "mutfl/toy/lexer.h"

namespace mutfl::toy {

namespace {

std::string Where(SourcePos pos) {
  return "line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column) + ": ";
}

struct OpLevel {
  std::vector<std::pair<std::string_view, BinaryOp>> ops;
};

// Loosest binding first.
const std::vector<OpLevel>& Levels() {
  static const std::vector<OpLevel> levels = {
      {{{"||", BinaryOp::kOr}}},
      {{{"&&", BinaryOp::kAnd}}},
      {{{"|", BinaryOp::kBitOr}}},
      {{{"^", BinaryOp::kBitXor}}},
      {{{"&", BinaryOp::kBitAnd}}},
      {{{"==", BinaryOp::kEq}, {"!=", BinaryOp::kNe}}},
      {{{"<", BinaryOp::kLt},
        {"<=", BinaryOp::kLe},
        {">", BinaryOp::kGt},
        {">=", BinaryOp::kGe}}},
      {{{"<<", BinaryOp::kShl}, {">>", BinaryOp::kShr}}},
      {{{"+", BinaryOp::kAdd}, {"-", BinaryOp::kSub}}},
      {{{"*", BinaryOp::kMul}, {"/", BinaryOp::kDiv}, {"%", BinaryOp::kMod}}},
  };
  return levels;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(Tokenize(source)) {}

  Program ParseProgram() {
    Program program;
    program.root.kind = NodeKind::kProgram;
    while (!AtEnd()) program.root.children.push_back(ParseFunction());
    ResolveCalls(program, program.root);
    return program;
  }

  std::vector<TestCase> ParseTestFile(const Program& program) {
    std::vector<TestCase> tests;
    std::set<std::string> names;
    while (!AtEnd()) {
      TestCase test;
      test.pos = Peek().pos;
      ExpectKeyword("test");
      test.name = ExpectIdent().text;
      if (!names.insert(test.name).second) {
        throw Error(ErrorCode::kSyntaxError,
                    Where(test.pos) + "duplicate test '" + test.name + "'");
      }
      Expect("{");
      in_test_ = true;
      while (!IsPunct("}")) {
        Node assertion;
        assertion.kind = NodeKind::kAssert;
        assertion.pos = Peek().pos;
        ExpectKeyword("assert");
        assertion.children.push_back(ParseExpr());
        Expect(";");
        test.assertions.push_back(std::move(assertion));
      }
      in_test_ = false;
      if (test.assertions.empty()) {
        throw Error(ErrorCode::kSyntaxError,
                    Where(test.pos) + "test '" + test.name + "' has no assertions");
      }
      Expect("}");
      tests.push_back(std::move(test));
    }
    for (auto& test : tests) {
      for (auto& a : test.assertions) ResolveCalls(program, a);
    }
    return tests;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }
  const Token& Take() {
    const Token& t = Peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool IsPunct(std::string_view text, std::size_t ahead = 0) const {
    return Peek(ahead).kind == TokenKind::kPunct && Peek(ahead).text == text;
  }
  bool IsKeyword(std::string_view text) const {
    return Peek().kind == TokenKind::kKeyword && Peek().text == text;
  }

  [[noreturn]] void Unexpected(std::string_view wanted) const {
    const Token& t = Peek();
    const std::string found = t.kind == TokenKind::kEnd ? "end of input"
                                                        : "'" + t.text + "'";
    throw Error(ErrorCode::kSyntaxError,
                Where(t.pos) + "expected " + std::string(wanted) + ", found " +
                    found);
  }

  const Token& Expect(std::string_view punct) {
    if (!IsPunct(punct)) Unexpected("'" + std::string(punct) + "'");
    return Take();
  }
  const Token& ExpectKeyword(std::string_view kw) {
    if (!IsKeyword(kw)) Unexpected("'" + std::string(kw) + "'");
    return Take();
  }
  const Token& ExpectIdent() {
    if (Peek().kind != TokenKind::kIdent) Unexpected("identifier");
    return Take();
  }

  int Declare(const std::string& name) {
    const int slot = next_slot_++;
    scopes_.back()[name] = slot;
    return slot;
  }

  std::optional<int> Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    return std::nullopt;
  }

  Node ParseFunction() {
    Node fn;
    fn.kind = NodeKind::kFunction;
    fn.pos = Peek().pos;
    ExpectKeyword("fn");
    fn.name = ExpectIdent().text;
    scopes_.assign(1, {});
    next_slot_ = 0;
    Expect("(");
    if (!IsPunct(")")) {
      while (true) {
        const Token& p = ExpectIdent();
        if (scopes_.back().contains(p.text)) {
          throw Error(ErrorCode::kSyntaxError,
                      Where(p.pos) + "duplicate parameter '" + p.text + "'");
        }
        fn.params.push_back(p.text);
        Declare(p.text);
        if (!IsPunct(",")) break;
        Take();
      }
    }
    Expect(")");
    fn.children.push_back(ParseBlock());
    fn.frame_size = next_slot_;
    scopes_.clear();
    return fn;
  }

  Node ParseBlock() {
    Node block;
    block.kind = NodeKind::kBlock;
    block.pos = Peek().pos;
    Expect("{");
    scopes_.emplace_back();
    while (!IsPunct("}")) {
      if (AtEnd()) Unexpected("'}'");
      block.children.push_back(ParseStatement());
    }
    scopes_.pop_back();
    Take();
    return block;
  }

  Node ParseStatement() {
    Node stmt;
    stmt.pos = Peek().pos;
    if (Peek().text == ";") {
      Take();
      stmt.kind = NodeKind::kNop;
      return stmt;
    }
    if (IsKeyword("let")) {
      Take();
      stmt.kind = NodeKind::kLet;
      stmt.name = ExpectIdent().text;
      Expect("=");
      stmt.children.push_back(ParseExpr());
      Expect(";");
      stmt.index = Declare(stmt.name);
      return stmt;
    }
    if (IsKeyword("if")) return ParseIf();
    if (IsKeyword("while")) {
      Take();
      stmt.kind = NodeKind::kWhile;
      stmt.children.push_back(ParseExpr());
      stmt.children.push_back(ParseBlock());
      return stmt;
    }
    if (IsKeyword("return")) {
      Take();
      stmt.kind = NodeKind::kReturn;
      if (!IsPunct(";")) stmt.children.push_back(ParseExpr());
      Expect(";");
      return stmt;
    }
    if (Peek().kind == TokenKind::kIdent && IsPunct("=", 1)) {
      const Token& target = Take();
      Take();
      auto slot = Lookup(target.text);
      if (!slot) {
        throw Error(ErrorCode::kUnresolvedName,
                    Where(target.pos) + "assignment to undeclared variable '" +
                        target.text + "'");
      }
      stmt.kind = NodeKind::kAssign;
      stmt.name = target.text;
      stmt.index = *slot;
      stmt.children.push_back(ParseExpr());
      Expect(";");
      return stmt;
    }
    stmt.kind = NodeKind::kExprStmt;
    stmt.children.push_back(ParseExpr());
    Expect(";");
    return stmt;
  }

  Node ParseIf() {
    Node stmt;
    stmt.kind = NodeKind::kIf;
    stmt.pos = Peek().pos;
    ExpectKeyword("if");
    stmt.children.push_back(ParseExpr());
    stmt.children.push_back(ParseBlock());
    if (IsKeyword("else")) {
      Take();
      if (IsKeyword("if")) {
        Node block;
        block.kind = NodeKind::kBlock;
        block.pos = Peek().pos;
        scopes_.emplace_back();
        block.children.push_back(ParseIf());
        scopes_.pop_back();
        stmt.children.push_back(std::move(block));
      } else {
        stmt.children.push_back(ParseBlock());
      }
    }
    return stmt;
  }

  Node ParseExpr() { return ParseLevel(0); }

  Node ParseLevel(std::size_t level) {
    const auto& levels = Levels();
    if (level == levels.size()) return ParseUnary();
    Node lhs = ParseLevel(level + 1);
    while (true) {
      const OpLevel& ops = levels[level];
      std::optional<BinaryOp> op;
      for (const auto& [text, bop] : ops.ops) {
        if (IsPunct(text)) op = bop;
      }
      if (!op) return lhs;
      Node node;
      node.kind = NodeKind::kBinary;
      node.binary_op = *op;
      node.pos = Take().pos;
      node.children.push_back(std::move(lhs));
      node.children.push_back(ParseLevel(level + 1));
      lhs = std::move(node);
    }
  }

  Node ParseUnary() {
    std::optional<UnaryOp> op;
    if (IsPunct("-")) op = UnaryOp::kNeg;
    if (IsPunct("~")) op = UnaryOp::kBitNot;
    if (IsPunct("!")) op = UnaryOp::kNot;
    if (op) {
      Node node;
      node.kind = NodeKind::kUnary;
      node.unary_op = *op;
      node.pos = Take().pos;
      node.children.push_back(ParseUnary());
      return node;
    }
    return ParsePrimary();
  }

  Node ParsePrimary() {
    Node node;
    node.pos = Peek().pos;
    const Token& t = Peek();
    if (t.kind == TokenKind::kInt) {
      node.kind = NodeKind::kIntLit;
      node.int_value = Take().int_value;
      return node;
    }
    if (IsKeyword("true") || IsKeyword("false")) {
      node.kind = NodeKind::kBoolLit;
      node.bool_value = Take().text == "true";
      return node;
    }
    if (IsPunct("(")) {
      Take();
      Node inner = ParseExpr();
      Expect(")");
      return inner;
    }
    if (t.kind == TokenKind::kIdent) {
      const Token& ident = Take();
      if (IsPunct("(")) {
        Take();
        node.kind = NodeKind::kCall;
        node.name = ident.text;
        if (!IsPunct(")")) {
          while (true) {
            node.children.push_back(ParseExpr());
            if (!IsPunct(",")) break;
            Take();
          }
        }
        Expect(")");
        return node;
      }
      auto slot = in_test_ ? std::nullopt : Lookup(ident.text);
      if (!slot) {
        throw Error(ErrorCode::kUnresolvedName,
                    Where(ident.pos) + "unknown variable '" + ident.text + "'");
      }
      node.kind = NodeKind::kVar;
      node.name = ident.text;
      node.index = *slot;
      return node;
    }
    Unexpected("expression");
  }

  static void ResolveCalls(const Program& program, Node& root) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < program.functions().size(); ++i) {
      const Node& fn = program.functions()[i];
      if (!index.emplace(fn.name, static_cast<int>(i)).second) {
        throw Error(ErrorCode::kSyntaxError,
                    Where(fn.pos) + "duplicate function '" + fn.name + "'");
      }
    }
    Resolve(program, index, root);
  }

  static void Resolve(const Program& program,
                      const std::unordered_map<std::string, int>& index,
                      Node& node) {
    if (node.kind == NodeKind::kCall) {
      auto it = index.find(node.name);
      if (it == index.end()) {
        throw Error(ErrorCode::kUnresolvedName,
                    Where(node.pos) + "call to undefined function '" +
                        node.name + "'");
      }
      const Node& fn = program.functions()[static_cast<std::size_t>(it->second)];
      if (fn.params.size() != node.children.size()) {
        throw Error(ErrorCode::kUnresolvedName,
                    Where(node.pos) + "function '" + node.name + "' takes " +
                        std::to_string(fn.params.size()) + " arguments, " +
                        std::to_string(node.children.size()) + " given");
      }
      node.index = it->second;
    }
    for (Node& child : node.children) Resolve(program, index, child);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::map<std::string, int>> scopes_;
  int next_slot_ = 0;
  bool in_test_ = false;
};

}  // namespace

Program Parse(std::string_view source) {
  return Parser(source).ParseProgram();
}

std::vector<TestCase> ParseTests(std::string_view source,
                                 const Program& program) {
  return Parser(source).ParseTestFile(program);
}

}  // namespace mutfl::toy
