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

#include <gtest/gtest.h>

#include "mutfl/toy/parser.h"

namespace mutfl::toy {
namespace {

RunOutcome RunOne(std::string_view program, std::string_view assertion,
                  std::uint64_t limit = kDefaultStepLimit) {
  const Program p = Parse(program);
  const auto tests = ParseTests("test t { " + std::string(assertion) + " }", p);
  return RunTest(p, tests[0], limit);
}

constexpr const char* kAdd = "fn add(a,b){ return a + b; }";

TEST(InterpreterTest, PassAndFail) {
  EXPECT_EQ(RunOne(kAdd, "assert add(2,3) == 5;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne("fn add(a,b){ return a - b; }", "assert add(2,3) == 5;"),
            RunOutcome::kFail);
  EXPECT_EQ(RunOne(kAdd, "assert add(1,1) == 2; assert add(1,1) == 3; assert 1 / 0 == 0;"),
            RunOutcome::kFail);
}

TEST(InterpreterTest, Errors) {
  EXPECT_EQ(RunOne(kAdd, "assert 1 / 0 == 0;"), RunOutcome::kError);
  EXPECT_EQ(RunOne(kAdd, "assert 5 % 0 == 0;"), RunOutcome::kError);
  EXPECT_EQ(RunOne(kAdd, "assert 1 << 64 == 0;"), RunOutcome::kError);
  EXPECT_EQ(RunOne(kAdd, "assert 1 >> -1 == 0;"), RunOutcome::kError);
  EXPECT_EQ(RunOne(kAdd, "assert add(true, 1) == 2;"), RunOutcome::kError);
  EXPECT_EQ(RunOne(kAdd, "assert add(1, 2);"), RunOutcome::kError);
  EXPECT_EQ(RunOne(kAdd, "assert true == 1;"), RunOutcome::kError);
  EXPECT_EQ(RunOne("fn f(n) { return f(n + 1); }", "assert f(0) == 0;"),
            RunOutcome::kError);
}

TEST(InterpreterTest, WhileTrueTimesOut) {
  const char* loop = "fn spin(n) { while n > 0 { n = n + 1; } return n; }";
  EXPECT_EQ(RunOne(loop, "assert spin(1) == 0;"), RunOutcome::kTimeout);
  EXPECT_EQ(RunOne(loop, "assert spin(0) == 0;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne("fn f() { while true { } return 0; }", "assert f() == 0;", 50),
            RunOutcome::kTimeout);
}

TEST(InterpreterTest, StepBudgetIsExact) {
  // assert, ==, call, body block, return, literal 1, literal 1.
  const char* one = "fn f() { return 1; }";
  EXPECT_EQ(RunOne(one, "assert f() == 1;", 7), RunOutcome::kPass);
  EXPECT_EQ(RunOne(one, "assert f() == 1;", 6), RunOutcome::kTimeout);
}

TEST(InterpreterTest, WrappingArithmetic) {
  const char* big = "fn big() { return 9223372036854775807; }";
  EXPECT_EQ(RunOne(big, "assert big() + 1 < 0;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(big, "assert (big() + 1) / -1 == big() + 1;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(big, "assert (big() + 1) % -1 == 0;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(big, "assert big() * 2 == -2;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(big, "assert -7 / 2 == -3 && -7 % 2 == -1;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(big, "assert (-8 >> 1) == -4 && ~0 == -1;"), RunOutcome::kPass);
}

TEST(InterpreterTest, ScopingDefaultsAndShortCircuit) {
  const char* prog =
      "fn f(a) { let x = 1; if a > 0 { let x = 10; a = x; } return a + x; }"
      "fn noret() { let x = 3; }"
      "fn g() { return false && 1 / 0 == 0; }";
  EXPECT_EQ(RunOne(prog, "assert f(1) == 11;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(prog, "assert f(-1) == 0;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(prog, "assert noret() == 0;"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(prog, "assert !g();"), RunOutcome::kPass);
  EXPECT_EQ(RunOne(prog, "assert (true ^ false) & (1 | 2) == 3;"), RunOutcome::kPass);
}

TEST(InterpreterTest, Deterministic) {
  const char* loop = "fn f(n) { let s = 0; while n > 0 { s = s + n; n = n - 1; } return s; }";
  for (std::uint64_t limit : {10u, 100u, 1000u}) {
    const auto a = RunOne(loop, "assert f(30) == 465;", limit);
    EXPECT_EQ(a, RunOne(loop, "assert f(30) == 465;", limit));
  }
  EXPECT_EQ(RunOne(loop, "assert f(30) == 465;"), RunOutcome::kPass);
}

}  // namespace
}  // namespace mutfl::toy
