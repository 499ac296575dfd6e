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

#ifndef MUTFL_KILL_MATRIX_H_
#define MUTFL_KILL_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mutfl {

using TestId = std::string;
using MethodId = std::string;

// Operator tags a mutant may carry. "imported" marks mutants that came from an
// external tool rather than the built-in engine.
bool IsKnownOperatorTag(std::string_view tag);

struct MutantRecord {
  std::string id;
  MethodId method;
  std::string op;
  std::string description;

  friend bool operator==(const MutantRecord&, const MutantRecord&) = default;
};

// Failing tests and, optionally, passing tests observed on a faulty version.
struct FailureObservation {
  std::set<TestId> failing;
  std::optional<std::set<TestId>> passing;

  // Throws kInvalidObservation if `failing` is empty or overlaps `passing`.
  void Validate() const;
};

// Mutants x tests boolean grid. A cell is 1 iff the test kills the mutant,
// i.e. the test fails when run against that mutant.
//
// The method universe is an ordered list of every method known to the
// matrix. It always contains each mutant's method and may contain methods
// that carry no mutants (for example after sampling removed all of them).
// Immutable once constructed.
class KillMatrix {
 public:
  KillMatrix() = default;

  // `kills` is row-major, |mutants| x |tests|, cells 0 or 1. When `methods`
  // is empty the universe is derived from the mutants in first-appearance
  // order; otherwise it must list every mutant method exactly once.
  // Throws kFormatError on any violated invariant.
  KillMatrix(std::vector<TestId> tests, std::vector<MutantRecord> mutants,
             std::vector<std::uint8_t> kills,
             std::vector<MethodId> methods = {});

  const std::vector<TestId>& tests() const { return tests_; }
  const std::vector<MutantRecord>& mutants() const { return mutants_; }
  const std::vector<MethodId>& methods() const { return methods_; }

  std::size_t num_tests() const { return tests_.size(); }
  std::size_t num_mutants() const { return mutants_.size(); }
  std::size_t num_methods() const { return methods_.size(); }

  bool killed(std::size_t mutant, std::size_t test) const {
    return kills_[mutant * tests_.size() + test] != 0;
  }
  std::span<const std::uint8_t> row(std::size_t mutant) const {
    return {kills_.data() + mutant * tests_.size(), tests_.size()};
  }
  const std::vector<std::uint8_t>& cells() const { return kills_; }

  // Index into methods() of the method owning `mutant`.
  std::size_t method_of(std::size_t mutant) const {
    return mutant_method_[mutant];
  }

  std::optional<std::size_t> FindTest(std::string_view name) const;
  std::optional<std::size_t> FindMutant(std::string_view id) const;
  std::optional<std::size_t> FindMethod(std::string_view name) const;

  friend bool operator==(const KillMatrix& a, const KillMatrix& b) {
    return a.tests_ == b.tests_ && a.mutants_ == b.mutants_ &&
           a.kills_ == b.kills_ && a.methods_ == b.methods_;
  }

 private:
  std::vector<TestId> tests_;
  std::vector<MutantRecord> mutants_;
  std::vector<std::uint8_t> kills_;
  std::vector<MethodId> methods_;
  std::vector<std::size_t> mutant_method_;
  std::unordered_map<std::string, std::size_t> test_index_;
  std::unordered_map<std::string, std::size_t> mutant_index_;
  std::unordered_map<std::string, std::size_t> method_index_;
};

// Tests that kill the mutant with the given id. Throws kNotFound.
std::set<TestId> KillSet(const KillMatrix& matrix, std::string_view mutant_id);

// Mutants located on `method`, in matrix order. Unknown methods yield an
// empty list.
std::vector<MutantRecord> MutantsOf(const KillMatrix& matrix,
                                    std::string_view method);

// Fraction of the method's mutants killed by `test`.
// Throws kEmptyStratum when the method has no mutants and kNotFound when the
// test is not a column.
double FailGivenMutated(const KillMatrix& matrix, std::string_view method,
                        std::string_view test);

// Same mutants and method universe, columns reduced and reordered to `tests`.
// Throws kNotFound for an unknown test and kInvalidConfig for a repeated one.
KillMatrix Restrict(const KillMatrix& matrix, const std::vector<TestId>& tests);

// Keeps the listed mutant rows (indices into matrix.mutants(), any order;
// output keeps matrix order). Columns and method universe are unchanged.
KillMatrix SelectMutants(const KillMatrix& matrix,
                         std::vector<std::size_t> mutant_indices);

// Drops one mutant row, keeping the method universe.
KillMatrix WithoutMutant(const KillMatrix& matrix, std::size_t mutant_index);

}  // namespace mutfl

#endif  // MUTFL_KILL_MATRIX_H_
