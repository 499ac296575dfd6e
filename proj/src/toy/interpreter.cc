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

#include "mutfl/toy/interpreter.h"

#include <limits>
#include <vector>

namespace mutfl::toy {

namespace {

struct Value {
  bool is_bool = false;
  std::int64_t i = 0;
  bool b = false;

  static Value Int(std::int64_t v) { return {false, v, false}; }
  static Value Bool(bool v) { return {true, 0, v}; }
};

// Thrown to unwind a run; carries the outcome.
struct Abort {
  RunOutcome outcome;
};

enum class Flow { kNormal, kReturn };

std::int64_t Wrap(std::uint64_t v) { return static_cast<std::int64_t>(v); }
std::uint64_t U(std::int64_t v) { return static_cast<std::uint64_t>(v); }

class Machine {
 public:
  Machine(const Program& program, std::uint64_t step_limit)
      : program_(program), step_limit_(step_limit) {}

  RunOutcome Run(const TestCase& test) {
    try {
      std::vector<Value> no_frame;
      for (const Node& assertion : test.assertions) {
        Step();
        const Value v = Eval(assertion.children[0], no_frame);
        if (!v.is_bool) throw Abort{RunOutcome::kError};
        if (!v.b) return RunOutcome::kFail;
      }
      return RunOutcome::kPass;
    } catch (const Abort& abort) {
      return abort.outcome;
    }
  }

 private:
  void Step() {
    if (++steps_ > step_limit_) throw Abort{RunOutcome::kTimeout};
  }

  [[noreturn]] static void Error() { throw Abort{RunOutcome::kError}; }

  static bool AsBool(const Value& v) {
    if (!v.is_bool) Error();
    return v.b;
  }
  static std::int64_t AsInt(const Value& v) {
    if (v.is_bool) Error();
    return v.i;
  }

  Flow Exec(const Node& stmt, std::vector<Value>& frame, Value& result) {
    Step();
    switch (stmt.kind) {
      case NodeKind::kBlock:
        for (const Node& s : stmt.children) {
          if (Exec(s, frame, result) == Flow::kReturn) return Flow::kReturn;
        }
        return Flow::kNormal;
      case NodeKind::kLet:
      case NodeKind::kAssign:
        frame[static_cast<std::size_t>(stmt.index)] =
            Eval(stmt.children[0], frame);
        return Flow::kNormal;
      case NodeKind::kIf:
        if (AsBool(Eval(stmt.children[0], frame))) {
          return Exec(stmt.children[1], frame, result);
        }
        if (stmt.children.size() > 2) {
          return Exec(stmt.children[2], frame, result);
        }
        return Flow::kNormal;
      case NodeKind::kWhile:
        while (AsBool(Eval(stmt.children[0], frame))) {
          if (Exec(stmt.children[1], frame, result) == Flow::kReturn) {
            return Flow::kReturn;
          }
        }
        return Flow::kNormal;
      case NodeKind::kReturn:
        result = stmt.children.empty() ? Value::Int(0)
                                       : Eval(stmt.children[0], frame);
        return Flow::kReturn;
      case NodeKind::kExprStmt:
        Eval(stmt.children[0], frame);
        return Flow::kNormal;
      case NodeKind::kNop:
        return Flow::kNormal;
      default:
        Error();
    }
    return Flow::kNormal;
  }

  Value Call(const Node& call, std::vector<Value>& caller_frame) {
    const Node& fn = program_.functions()[static_cast<std::size_t>(call.index)];
    std::vector<Value> frame(static_cast<std::size_t>(fn.frame_size),
                             Value::Int(0));
    for (std::size_t i = 0; i < call.children.size(); ++i) {
      frame[i] = Eval(call.children[i], caller_frame);
    }
    if (++depth_ > kMaxCallDepth) Error();
    Value result = Value::Int(0);
    Exec(fn.children[0], frame, result);
    --depth_;
    return result;
  }

  Value Eval(const Node& expr, std::vector<Value>& frame) {
    Step();
    switch (expr.kind) {
      case NodeKind::kIntLit:
        return Value::Int(expr.int_value);
      case NodeKind::kBoolLit:
        return Value::Bool(expr.bool_value);
      case NodeKind::kVar:
        return frame[static_cast<std::size_t>(expr.index)];
      case NodeKind::kCall:
        return Call(expr, frame);
      case NodeKind::kUnary: {
        const Value v = Eval(expr.children[0], frame);
        switch (expr.unary_op) {
          case UnaryOp::kNeg:
            return Value::Int(Wrap(0 - U(AsInt(v))));
          case UnaryOp::kBitNot:
            return Value::Int(~AsInt(v));
          case UnaryOp::kNot:
            return Value::Bool(!AsBool(v));
        }
        break;
      }
      case NodeKind::kBinary:
        return EvalBinary(expr, frame);
      default:
        break;
    }
    Error();
    return {};
  }

  Value EvalBinary(const Node& expr, std::vector<Value>& frame) {
    if (expr.binary_op == BinaryOp::kAnd) {
      if (!AsBool(Eval(expr.children[0], frame))) return Value::Bool(false);
      return Value::Bool(AsBool(Eval(expr.children[1], frame)));
    }
    if (expr.binary_op == BinaryOp::kOr) {
      if (AsBool(Eval(expr.children[0], frame))) return Value::Bool(true);
      return Value::Bool(AsBool(Eval(expr.children[1], frame)));
    }
    const Value l = Eval(expr.children[0], frame);
    const Value r = Eval(expr.children[1], frame);
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    switch (expr.binary_op) {
      case BinaryOp::kAdd:
        return Value::Int(Wrap(U(AsInt(l)) + U(AsInt(r))));
      case BinaryOp::kSub:
        return Value::Int(Wrap(U(AsInt(l)) - U(AsInt(r))));
      case BinaryOp::kMul:
        return Value::Int(Wrap(U(AsInt(l)) * U(AsInt(r))));
      case BinaryOp::kDiv: {
        const std::int64_t a = AsInt(l), b = AsInt(r);
        if (b == 0) Error();
        if (a == kMin && b == -1) return Value::Int(kMin);
        return Value::Int(a / b);
      }
      case BinaryOp::kMod: {
        const std::int64_t a = AsInt(l), b = AsInt(r);
        if (b == 0) Error();
        if (a == kMin && b == -1) return Value::Int(0);
        return Value::Int(a % b);
      }
      case BinaryOp::kLt:
        return Value::Bool(AsInt(l) < AsInt(r));
      case BinaryOp::kLe:
        return Value::Bool(AsInt(l) <= AsInt(r));
      case BinaryOp::kGt:
        return Value::Bool(AsInt(l) > AsInt(r));
      case BinaryOp::kGe:
        return Value::Bool(AsInt(l) >= AsInt(r));
      case BinaryOp::kEq:
      case BinaryOp::kNe: {
        if (l.is_bool != r.is_bool) Error();
        const bool eq = l.is_bool ? l.b == r.b : l.i == r.i;
        return Value::Bool(expr.binary_op == BinaryOp::kEq ? eq : !eq);
      }
      case BinaryOp::kBitAnd:
      case BinaryOp::kBitOr:
      case BinaryOp::kBitXor: {
        if (l.is_bool != r.is_bool) Error();
        if (l.is_bool) {
          if (expr.binary_op == BinaryOp::kBitAnd) return Value::Bool(l.b && r.b);
          if (expr.binary_op == BinaryOp::kBitOr) return Value::Bool(l.b || r.b);
          return Value::Bool(l.b != r.b);
        }
        if (expr.binary_op == BinaryOp::kBitAnd) return Value::Int(l.i & r.i);
        if (expr.binary_op == BinaryOp::kBitOr) return Value::Int(l.i | r.i);
        return Value::Int(l.i ^ r.i);
      }
      case BinaryOp::kShl:
      case BinaryOp::kShr: {
        const std::int64_t a = AsInt(l), s = AsInt(r);
        if (s < 0 || s > 63) Error();
        if (expr.binary_op == BinaryOp::kShl) return Value::Int(Wrap(U(a) << s));
        return Value::Int(a >> s);
      }
      default:
        break;
    }
    Error();
    return {};
  }

  const Program& program_;
  const std::uint64_t step_limit_;
  std::uint64_t steps_ = 0;
  int depth_ = 0;
};

}  // namespace

std::string_view RunOutcomeName(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::kPass: return "PASS";
    case RunOutcome::kFail: return "FAIL";
    case RunOutcome::kError: return "ERROR";
    case RunOutcome::kTimeout: return "TIMEOUT";
  }
  return "?";
}

RunOutcome RunTest(const Program& program, const TestCase& test,
                   std::uint64_t step_limit) {
  return Machine(program, step_limit).Run(test);
}

}  // namespace mutfl::toy
