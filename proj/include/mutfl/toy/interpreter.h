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

#ifndef MUTFL_TOY_INTERPRETER_H_
#define MUTFL_TOY_INTERPRETER_H_

#include <cstdint>
#include <string_view>

#include "mutfl/toy/ast.h"

namespace mutfl::toy {

enum class RunOutcome {
  kPass,
  kFail,     // an assertion evaluated to false
  kError,    // division by zero, bad shift, type mismatch, call depth
  kTimeout,  // step budget exhausted
};

std::string_view RunOutcomeName(RunOutcome outcome);

inline constexpr std::uint64_t kDefaultStepLimit = 100000;
inline constexpr int kMaxCallDepth = 256;

// Runs the test's assertions in order against `program`. Every executed
// statement and every evaluated expression node costs one step; the run
// stops with kTimeout once more than `step_limit` steps are needed.
// Integers are 64-bit with wrapping arithmetic.
RunOutcome RunTest(const Program& program, const TestCase& test,
                   std::uint64_t step_limit = kDefaultStepLimit);

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_INTERPRETER_H_
