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

#include "mutfl/toy/ast.h"

#include "mutfl/error.h"

namespace mutfl::toy {

std::string_view BinaryOpText(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kBitAnd: return "&";
    case BinaryOp::kBitOr: return "|";
    case BinaryOp::kBitXor: return "^";
    case BinaryOp::kShl: return "<<";
    case BinaryOp::kShr: return ">>";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view UnaryOpText(UnaryOp op) {
  switch (op) {
    case UnaryOp::kNeg: return "-";
    case UnaryOp::kBitNot: return "~";
    case UnaryOp::kNot: return "!";
  }
  return "?";
}

bool SameTree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.name != b.name || a.index != b.index ||
      a.children.size() != b.children.size()) {
    return false;
  }
  switch (a.kind) {
    case NodeKind::kBinary:
      if (a.binary_op != b.binary_op) return false;
      break;
    case NodeKind::kUnary:
      if (a.unary_op != b.unary_op) return false;
      break;
    case NodeKind::kIntLit:
      if (a.int_value != b.int_value) return false;
      break;
    case NodeKind::kBoolLit:
      if (a.bool_value != b.bool_value) return false;
      break;
    case NodeKind::kFunction:
      if (a.params != b.params || a.frame_size != b.frame_size) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!SameTree(a.children[i], b.children[i])) return false;
  }
  return true;
}

const Node& NodeAt(const Node& root, const NodePath& path) {
  const Node* node = &root;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= node->children.size()) {
      throw Error(ErrorCode::kInternal, "node path out of range");
    }
    node = &node->children[static_cast<std::size_t>(i)];
  }
  return *node;
}

Node& NodeAt(Node& root, const NodePath& path) {
  return const_cast<Node&>(NodeAt(static_cast<const Node&>(root), path));
}

}  // namespace mutfl::toy
