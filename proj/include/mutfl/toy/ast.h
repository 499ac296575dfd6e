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

#ifndef MUTFL_TOY_AST_H_
#define MUTFL_TOY_AST_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mutfl::toy {

enum class NodeKind {
  kProgram,   // children: functions
  kFunction,  // children: [body block]
  kBlock,     // children: statements
  kLet,       // children: [value]; index = slot
  kAssign,    // children: [value]; index = slot
  kIf,        // children: [cond, then block] or [cond, then, else block]
  kWhile,     // children: [cond, body block]
  kReturn,    // children: [] or [value]
  kExprStmt,  // children: [expr]
  kNop,
  kAssert,    // children: [cond]
  kIntLit,
  kBoolLit,
  kVar,       // index = slot
  kCall,      // children: args; index = callee function
  kBinary,    // children: [lhs, rhs]
  kUnary,     // children: [operand]
};

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kLt, kLe, kGt, kGe, kEq, kNe,
  kBitAnd, kBitOr, kBitXor,
  kShl, kShr,
  kAnd, kOr,
};

enum class UnaryOp { kNeg, kBitNot, kNot };

std::string_view BinaryOpText(BinaryOp op);
std::string_view UnaryOpText(UnaryOp op);

struct SourcePos {
  int line = 0;
  int column = 0;
};

// One node type for the whole tree so mutants can be addressed by a route of
// child indices from the program root.
struct Node {
  NodeKind kind = NodeKind::kNop;
  BinaryOp binary_op = BinaryOp::kAdd;
  UnaryOp unary_op = UnaryOp::kNeg;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;  // function, variable or callee name
  int index = -1;    // variable slot or callee index
  // Functions only.
  std::vector<std::string> params;
  int frame_size = 0;
  std::vector<Node> children;
  SourcePos pos;

  bool IsExpression() const { return kind >= NodeKind::kIntLit; }
};

// Structural equality, ignoring source positions.
bool SameTree(const Node& a, const Node& b);

struct Program {
  Node root;  // kProgram

  const std::vector<Node>& functions() const { return root.children; }
};

struct TestCase {
  std::string name;
  std::vector<Node> assertions;  // kAssert nodes
  SourcePos pos;
};

using NodePath = std::vector<int>;

const Node& NodeAt(const Node& root, const NodePath& path);
Node& NodeAt(Node& root, const NodePath& path);

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_AST_H_
