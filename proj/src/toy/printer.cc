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

#include "mutfl/toy/printer.h"

namespace mutfl::toy {

namespace {

constexpr int kUnaryPrecedence = 11;
constexpr int kPrimaryPrecedence = 12;

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kBitOr: return 3;
    case BinaryOp::kBitXor: return 4;
    case BinaryOp::kBitAnd: return 5;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 6;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 7;
    case BinaryOp::kShl:
    case BinaryOp::kShr: return 8;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 9;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 10;
  }
  return 0;
}

int Precedence(const Node& expr) {
  switch (expr.kind) {
    case NodeKind::kBinary:
      return Precedence(expr.binary_op);
    case NodeKind::kUnary:
      return kUnaryPrecedence;
    case NodeKind::kIntLit:
      // A negative literal prints with a leading '-', so it binds like a
      // unary expression.
      return expr.int_value < 0 ? kUnaryPrecedence : kPrimaryPrecedence;
    default:
      return kPrimaryPrecedence;
  }
}

std::string Wrap(const Node& child, int min_precedence) {
  std::string text = PrintExpr(child);
  if (Precedence(child) < min_precedence) return "(" + text + ")";
  return text;
}

void Indent(std::string& out, int depth) { out.append(depth * 2, ' '); }

void PrintBlock(const Node& block, int depth, std::string& out);

void PrintStatement(const Node& stmt, int depth, std::string& out) {
  Indent(out, depth);
  switch (stmt.kind) {
    case NodeKind::kIf:
      out += "if " + PrintExpr(stmt.children[0]) + " ";
      PrintBlock(stmt.children[1], depth, out);
      if (stmt.children.size() > 2) {
        out += " else ";
        PrintBlock(stmt.children[2], depth, out);
      }
      out += "\n";
      return;
    case NodeKind::kWhile:
      out += "while " + PrintExpr(stmt.children[0]) + " ";
      PrintBlock(stmt.children[1], depth, out);
      out += "\n";
      return;
    case NodeKind::kBlock:
      PrintBlock(stmt, depth, out);
      out += "\n";
      return;
    case NodeKind::kNop:
      out += ";  // <NO-OP>\n";
      return;
    default:
      out += PrintStatementSummary(stmt) + "\n";
  }
}

void PrintBlock(const Node& block, int depth, std::string& out) {
  out += "{\n";
  for (const Node& stmt : block.children) PrintStatement(stmt, depth + 1, out);
  Indent(out, depth);
  out += "}";
}

}  // namespace

std::string PrintExpr(const Node& expr) {
  switch (expr.kind) {
    case NodeKind::kIntLit:
      return std::to_string(expr.int_value);
    case NodeKind::kBoolLit:
      return expr.bool_value ? "true" : "false";
    case NodeKind::kVar:
      return expr.name;
    case NodeKind::kCall: {
      std::string out = expr.name + "(";
      for (std::size_t i = 0; i < expr.children.size(); ++i) {
        if (i > 0) out += ", ";
        out += PrintExpr(expr.children[i]);
      }
      return out + ")";
    }
    case NodeKind::kUnary: {
      std::string operand = Wrap(expr.children[0], kUnaryPrecedence);
      // Avoid "--x" style runs that read as a different token.
      if (!operand.empty() && operand[0] == UnaryOpText(expr.unary_op)[0]) {
        operand = "(" + operand + ")";
      }
      return std::string(UnaryOpText(expr.unary_op)) + operand;
    }
    case NodeKind::kBinary: {
      const int p = Precedence(expr.binary_op);
      // Left-associative: the right operand needs parentheses at equal
      // precedence.
      return Wrap(expr.children[0], p) + " " +
             std::string(BinaryOpText(expr.binary_op)) + " " +
             Wrap(expr.children[1], p + 1);
    }
    default:
      return "<?>";
  }
}

std::string PrintStatementSummary(const Node& stmt) {
  switch (stmt.kind) {
    case NodeKind::kLet:
      return "let " + stmt.name + " = " + PrintExpr(stmt.children[0]) + ";";
    case NodeKind::kAssign:
      return stmt.name + " = " + PrintExpr(stmt.children[0]) + ";";
    case NodeKind::kReturn:
      return stmt.children.empty() ? "return;"
                                   : "return " + PrintExpr(stmt.children[0]) + ";";
    case NodeKind::kExprStmt:
      return PrintExpr(stmt.children[0]) + ";";
    case NodeKind::kAssert:
      return "assert " + PrintExpr(stmt.children[0]) + ";";
    case NodeKind::kIf:
      return "if " + PrintExpr(stmt.children[0]) + " {...}" +
             (stmt.children.size() > 2 ? " else {...}" : "");
    case NodeKind::kWhile:
      return "while " + PrintExpr(stmt.children[0]) + " {...}";
    case NodeKind::kBlock:
      return "{...}";
    case NodeKind::kNop:
      return "<NO-OP>";
    default:
      return PrintExpr(stmt);
  }
}

std::string PrintProgram(const Program& program) {
  std::string out;
  for (const Node& fn : program.functions()) {
    out += "fn " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i > 0) out += ", ";
      out += fn.params[i];
    }
    out += ") ";
    PrintBlock(fn.children[0], 0, out);
    out += "\n\n";
  }
  return out;
}

std::string PrintTests(const std::vector<TestCase>& tests) {
  std::string out;
  for (const TestCase& t : tests) {
    out += "test " + t.name + " {\n";
    for (const Node& a : t.assertions) out += "  " + PrintStatementSummary(a) + "\n";
    out += "}\n\n";
  }
  return out;
}

}  // namespace mutfl::toy
