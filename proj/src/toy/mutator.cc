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

#include "mutfl/toy/mutator.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "mutfl/error.h"
#include "mutfl/toy/printer.h"

namespace mutfl::toy {

namespace {

constexpr std::array<BinaryOp, 5> kArithmetic = {
    BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul, BinaryOp::kDiv,
    BinaryOp::kMod};
constexpr std::array<BinaryOp, 6> kRelational = {
    BinaryOp::kLt, BinaryOp::kLe, BinaryOp::kGt,
    BinaryOp::kGe, BinaryOp::kEq, BinaryOp::kNe};
constexpr std::array<BinaryOp, 3> kLogical = {
    BinaryOp::kBitAnd, BinaryOp::kBitOr, BinaryOp::kBitXor};
constexpr std::array<BinaryOp, 2> kShift = {BinaryOp::kShl, BinaryOp::kShr};
constexpr std::array<MutationOperator, 8> kAllOperators = {
    MutationOperator::kAor, MutationOperator::kRor, MutationOperator::kLor,
    MutationOperator::kSor, MutationOperator::kCor, MutationOperator::kOru,
    MutationOperator::kLvr, MutationOperator::kStd};

template <std::size_t N>
bool Contains(const std::array<BinaryOp, N>& set, BinaryOp op) {
  return std::find(set.begin(), set.end(), op) != set.end();
}

Node IntLiteral(std::int64_t v, SourcePos pos) {
  Node n;
  n.kind = NodeKind::kIntLit;
  n.int_value = v;
  n.pos = pos;
  return n;
}

Node BoolLiteral(bool v, SourcePos pos) {
  Node n;
  n.kind = NodeKind::kBoolLit;
  n.bool_value = v;
  n.pos = pos;
  return n;
}

class Generator {
 public:
  Generator(const std::set<MutationOperator>& ops,
            std::vector<MutantInstance>& out)
      : ops_(ops), out_(out) {}

  void Visit(const Node& node, NodePath& path, const std::string& function,
             bool in_block) {
    for (MutationOperator op : kAllOperators) {
      if (ops_.contains(op)) Fire(op, node, path, function, in_block);
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const Node& child = node.children[i];
      const std::string& fn =
          child.kind == NodeKind::kFunction ? child.name : function;
      path.push_back(static_cast<int>(i));
      Visit(child, path, fn, node.kind == NodeKind::kBlock);
      path.pop_back();
    }
  }

 private:
  void Emit(MutationOperator op, const Node& original, Node replacement,
            const NodePath& path, const std::string& function,
            bool statement) {
    MutantInstance m;
    m.op = op;
    m.path = path;
    m.function = function;
    m.original = statement ? PrintStatementSummary(original) : PrintExpr(original);
    m.replacement =
        statement ? PrintStatementSummary(replacement) : PrintExpr(replacement);
    m.replacement_node = std::move(replacement);
    out_.push_back(std::move(m));
  }

  template <std::size_t N>
  void ReplaceBinary(MutationOperator op, const std::array<BinaryOp, N>& set,
                     const Node& node, const NodePath& path,
                     const std::string& function) {
    if (node.kind != NodeKind::kBinary || !Contains(set, node.binary_op)) return;
    for (BinaryOp other : set) {
      if (other == node.binary_op) continue;
      Node replacement = node;
      replacement.binary_op = other;
      Emit(op, node, std::move(replacement), path, function, false);
    }
  }

  void Fire(MutationOperator op, const Node& node, const NodePath& path,
            const std::string& function, bool in_block) {
    switch (op) {
      case MutationOperator::kAor:
        ReplaceBinary(op, kArithmetic, node, path, function);
        return;
      case MutationOperator::kRor:
        ReplaceBinary(op, kRelational, node, path, function);
        return;
      case MutationOperator::kLor:
        ReplaceBinary(op, kLogical, node, path, function);
        return;
      case MutationOperator::kSor:
        ReplaceBinary(op, kShift, node, path, function);
        return;
      case MutationOperator::kCor: {
        if (node.kind != NodeKind::kBinary ||
            (node.binary_op != BinaryOp::kAnd && node.binary_op != BinaryOp::kOr)) {
          return;
        }
        Node swapped = node;
        swapped.binary_op =
            node.binary_op == BinaryOp::kAnd ? BinaryOp::kOr : BinaryOp::kAnd;
        Emit(op, node, std::move(swapped), path, function, false);
        Emit(op, node, node.children[0], path, function, false);
        Emit(op, node, node.children[1], path, function, false);
        Emit(op, node, BoolLiteral(true, node.pos), path, function, false);
        Emit(op, node, BoolLiteral(false, node.pos), path, function, false);
        return;
      }
      case MutationOperator::kOru: {
        if (node.kind != NodeKind::kUnary || node.unary_op == UnaryOp::kNot) {
          return;
        }
        Node other = node;
        other.unary_op =
            node.unary_op == UnaryOp::kNeg ? UnaryOp::kBitNot : UnaryOp::kNeg;
        Emit(op, node, std::move(other), path, function, false);
        Emit(op, node, node.children[0], path, function, false);
        return;
      }
      case MutationOperator::kLvr: {
        if (node.kind == NodeKind::kBoolLit) {
          Emit(op, node, BoolLiteral(!node.bool_value, node.pos), path,
               function, false);
          return;
        }
        if (node.kind != NodeKind::kIntLit) return;
        const std::int64_t v = node.int_value;
        std::vector<std::int64_t> values;
        for (std::int64_t candidate : {std::int64_t{0}, std::int64_t{1},
                                       std::int64_t{-1}}) {
          if (candidate != v) values.push_back(candidate);
        }
        if (v != 0 && std::find(values.begin(), values.end(), -v) == values.end()) {
          values.push_back(static_cast<std::int64_t>(
              0 - static_cast<std::uint64_t>(v)));
        }
        for (std::int64_t value : values) {
          Emit(op, node, IntLiteral(value, node.pos), path, function, false);
        }
        return;
      }
      case MutationOperator::kStd: {
        if (!in_block || node.IsExpression() || node.kind == NodeKind::kReturn ||
            node.kind == NodeKind::kNop) {
          return;
        }
        Node nop;
        nop.kind = NodeKind::kNop;
        nop.pos = node.pos;
        Emit(op, node, std::move(nop), path, function, true);
        return;
      }
    }
  }

  const std::set<MutationOperator>& ops_;
  std::vector<MutantInstance>& out_;
};

}  // namespace

std::string_view OperatorTag(MutationOperator op) {
  switch (op) {
    case MutationOperator::kAor: return "AOR";
    case MutationOperator::kRor: return "ROR";
    case MutationOperator::kLor: return "LOR";
    case MutationOperator::kSor: return "SOR";
    case MutationOperator::kCor: return "COR";
    case MutationOperator::kOru: return "ORU";
    case MutationOperator::kLvr: return "LVR";
    case MutationOperator::kStd: return "STD";
  }
  return "?";
}

MutationOperator ParseOperatorTag(std::string_view tag) {
  std::string upper(tag);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  for (MutationOperator op : kAllOperators) {
    if (OperatorTag(op) == upper) return op;
  }
  throw Error(ErrorCode::kInvalidConfig,
              "unknown mutation operator '" + std::string(tag) + "'");
}

std::set<MutationOperator> AllOperators() {
  return {kAllOperators.begin(), kAllOperators.end()};
}

std::set<MutationOperator> ParseOperatorList(std::string_view list) {
  if (list.empty() || list == "all" || list == "ALL") return AllOperators();
  std::set<MutationOperator> ops;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    ops.insert(ParseOperatorTag(item));
    start = end + 1;
  }
  return ops;
}

std::string MutantInstance::Description() const {
  return original + " ↦ " + replacement;
}

std::vector<MutantInstance> GenerateMutants(
    const Program& program, const std::set<MutationOperator>& ops) {
  std::vector<MutantInstance> out;
  NodePath path;
  Generator(ops, out).Visit(program.root, path, std::string(), false);
  return out;
}

Program ApplyMutant(const Program& program, const MutantInstance& mutant) {
  Program copy = program;
  NodeAt(copy.root, mutant.path) = mutant.replacement_node;
  return copy;
}

}  // namespace mutfl::toy
