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

#ifndef MUTFL_TOY_KILL_BUILDER_H_
#define MUTFL_TOY_KILL_BUILDER_H_

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "mutfl/kill_matrix.h"
#include "mutfl/toy/ast.h"
#include "mutfl/toy/interpreter.h"
#include "mutfl/toy/mutator.h"

namespace mutfl::toy {

// Runs every test against every mutant. Cell (m, t) is 1 iff the test does
// not PASS on mutant m. Mutant ids are "m1", "m2", ... in list order and each
// mutant is attributed to its enclosing function.
//
// Throws kPreconditionFailed naming the first test that does not pass on the
// unmutated program.
//
// Mutants run in parallel across `jobs` OpenMP threads (0 = runtime default).
// Rows are written by mutant index, so the result does not depend on `jobs`.
KillMatrix BuildKillMatrix(const Program& program,
                           const std::vector<TestCase>& tests,
                           const std::vector<MutantInstance>& mutants,
                           std::uint64_t step_limit = kDefaultStepLimit,
                           int jobs = 0);

// Single-threaded reference for BuildKillMatrix.
KillMatrix BuildKillMatrixSerial(const Program& program,
                                 const std::vector<TestCase>& tests,
                                 const std::vector<MutantInstance>& mutants,
                                 std::uint64_t step_limit = kDefaultStepLimit);

struct AnalysisOptions {
  std::set<MutationOperator> ops = AllOperators();
  std::uint64_t step_limit = kDefaultStepLimit;
  int jobs = 0;
};

// Parse, generate mutants, and build the matrix in one go.
KillMatrix Analyze(std::string_view program_source, std::string_view test_source,
                   const AnalysisOptions& options = {});

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_KILL_BUILDER_H_
