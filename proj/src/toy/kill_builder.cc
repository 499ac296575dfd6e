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

#include "mutfl/toy/kill_builder.h"

#include <omp.h>

#include "mutfl/error.h"
#include "mutfl/toy/parser.h"

namespace mutfl::toy {

namespace {

void CheckBaseline(const Program& program, const std::vector<TestCase>& tests,
                   std::uint64_t step_limit) {
  if (step_limit < 1) {
    throw Error(ErrorCode::kInvalidConfig, "step limit must be positive");
  }
  for (const TestCase& test : tests) {
    const RunOutcome outcome = RunTest(program, test, step_limit);
    if (outcome != RunOutcome::kPass) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "test '" + test.name + "' does not pass on the original program (" +
                      std::string(RunOutcomeName(outcome)) + ")");
    }
  }
}

void FillRow(const Program& program, const std::vector<TestCase>& tests,
             const MutantInstance& mutant, std::uint64_t step_limit,
             std::uint8_t* row) {
  const Program mutated = ApplyMutant(program, mutant);
  for (std::size_t t = 0; t < tests.size(); ++t) {
    row[t] = RunTest(mutated, tests[t], step_limit) != RunOutcome::kPass;
  }
}

KillMatrix Assemble(const std::vector<TestCase>& tests,
                    const std::vector<MutantInstance>& mutants,
                    std::vector<std::uint8_t> kills) {
  std::vector<TestId> test_ids;
  test_ids.reserve(tests.size());
  for (const TestCase& t : tests) test_ids.push_back(t.name);
  std::vector<MutantRecord> records;
  records.reserve(mutants.size());
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    records.push_back({"m" + std::to_string(i + 1), mutants[i].function,
                       std::string(OperatorTag(mutants[i].op)),
                       mutants[i].Description()});
  }
  return KillMatrix(std::move(test_ids), std::move(records), std::move(kills));
}

}  // namespace

KillMatrix BuildKillMatrixSerial(const Program& program,
                                 const std::vector<TestCase>& tests,
                                 const std::vector<MutantInstance>& mutants,
                                 std::uint64_t step_limit) {
  CheckBaseline(program, tests, step_limit);
  std::vector<std::uint8_t> kills(mutants.size() * tests.size(), 0);
  for (std::size_t m = 0; m < mutants.size(); ++m) {
    FillRow(program, tests, mutants[m], step_limit,
            kills.data() + m * tests.size());
  }
  return Assemble(tests, mutants, std::move(kills));
}

KillMatrix BuildKillMatrix(const Program& program,
                           const std::vector<TestCase>& tests,
                           const std::vector<MutantInstance>& mutants,
                           std::uint64_t step_limit, int jobs) {
  CheckBaseline(program, tests, step_limit);
  std::vector<std::uint8_t> kills(mutants.size() * tests.size(), 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(mutants.size());
  // FillRow only throws on a broken mutant path, which is an invariant
  // violation; record it and rethrow outside the parallel region.
  bool broken = false;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t m = 0; m < n; ++m) {
    try {
      FillRow(program, tests, mutants[static_cast<std::size_t>(m)], step_limit,
              kills.data() + static_cast<std::size_t>(m) * tests.size());
    } catch (...) {
#pragma omp atomic write
      broken = true;
    }
  }
  if (broken) throw Error(ErrorCode::kInternal, "mutant could not be applied");
  return Assemble(tests, mutants, std::move(kills));
}

KillMatrix Analyze(std::string_view program_source, std::string_view test_source,
                   const AnalysisOptions& options) {
  const Program program = Parse(program_source);
  const std::vector<TestCase> tests = ParseTests(test_source, program);
  const auto mutants = GenerateMutants(program, options.ops);
  return BuildKillMatrix(program, tests, mutants, options.step_limit,
                         options.jobs);
}

}  // namespace mutfl::toy
