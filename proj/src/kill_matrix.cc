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

#include "mutfl/kill_matrix.h"

#include <algorithm>
#include <array>
#include <utility>

#include "mutfl/error.h"

namespace mutfl {

namespace {

constexpr std::array<std::string_view, 9> kOperatorTags = {
    "AOR", "ROR", "LOR", "SOR", "COR", "ORU", "LVR", "STD", "imported"};

}  // namespace

bool IsKnownOperatorTag(std::string_view tag) {
  return std::find(kOperatorTags.begin(), kOperatorTags.end(), tag) !=
         kOperatorTags.end();
}

void FailureObservation::Validate() const {
  if (failing.empty()) {
    throw Error(ErrorCode::kInvalidObservation, "failing test set is empty");
  }
  if (passing) {
    for (const auto& t : *passing) {
      if (failing.contains(t)) {
        throw Error(ErrorCode::kInvalidObservation,
                    "test '" + t + "' is both failing and passing");
      }
    }
  }
}

KillMatrix::KillMatrix(std::vector<TestId> tests,
                       std::vector<MutantRecord> mutants,
                       std::vector<std::uint8_t> kills,
                       std::vector<MethodId> methods)
    : tests_(std::move(tests)),
      mutants_(std::move(mutants)),
      kills_(std::move(kills)),
      methods_(std::move(methods)) {
  if (kills_.size() != tests_.size() * mutants_.size()) {
    throw Error(ErrorCode::kFormatError,
                "kill grid has " + std::to_string(kills_.size()) +
                    " cells, expected " +
                    std::to_string(tests_.size() * mutants_.size()));
  }
  for (std::uint8_t cell : kills_) {
    if (cell > 1) throw Error(ErrorCode::kFormatError, "kill cell not 0/1");
  }
  for (std::size_t i = 0; i < tests_.size(); ++i) {
    if (tests_[i].empty()) {
      throw Error(ErrorCode::kFormatError, "empty test name");
    }
    if (!test_index_.emplace(tests_[i], i).second) {
      throw Error(ErrorCode::kFormatError, "duplicate test '" + tests_[i] + "'");
    }
  }
  const bool derive_methods = methods_.empty();
  for (std::size_t i = 0; i < methods_.size(); ++i) {
    if (methods_[i].empty()) {
      throw Error(ErrorCode::kFormatError, "empty method name");
    }
    if (!method_index_.emplace(methods_[i], i).second) {
      throw Error(ErrorCode::kFormatError,
                  "duplicate method '" + methods_[i] + "'");
    }
  }
  mutant_method_.reserve(mutants_.size());
  for (std::size_t i = 0; i < mutants_.size(); ++i) {
    const MutantRecord& m = mutants_[i];
    if (m.id.empty()) throw Error(ErrorCode::kFormatError, "empty mutant id");
    if (m.method.empty()) {
      throw Error(ErrorCode::kFormatError, "mutant '" + m.id + "' has no method");
    }
    if (!mutant_index_.emplace(m.id, i).second) {
      throw Error(ErrorCode::kFormatError, "duplicate mutant '" + m.id + "'");
    }
    auto it = method_index_.find(m.method);
    if (it == method_index_.end()) {
      if (!derive_methods) {
        throw Error(ErrorCode::kFormatError,
                    "mutant '" + m.id + "' names unknown method '" + m.method +
                        "'");
      }
      it = method_index_.emplace(m.method, methods_.size()).first;
      methods_.push_back(m.method);
    }
    mutant_method_.push_back(it->second);
  }
}

std::optional<std::size_t> KillMatrix::FindTest(std::string_view name) const {
  auto it = test_index_.find(std::string(name));
  if (it == test_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> KillMatrix::FindMutant(std::string_view id) const {
  auto it = mutant_index_.find(std::string(id));
  if (it == mutant_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> KillMatrix::FindMethod(std::string_view name) const {
  auto it = method_index_.find(std::string(name));
  if (it == method_index_.end()) return std::nullopt;
  return it->second;
}

std::set<TestId> KillSet(const KillMatrix& matrix, std::string_view mutant_id) {
  auto row = matrix.FindMutant(mutant_id);
  if (!row) {
    throw Error(ErrorCode::kNotFound,
                "unknown mutant '" + std::string(mutant_id) + "'");
  }
  std::set<TestId> result;
  for (std::size_t t = 0; t < matrix.num_tests(); ++t) {
    if (matrix.killed(*row, t)) result.insert(matrix.tests()[t]);
  }
  return result;
}

std::vector<MutantRecord> MutantsOf(const KillMatrix& matrix,
                                    std::string_view method) {
  std::vector<MutantRecord> result;
  for (const auto& m : matrix.mutants()) {
    if (m.method == method) result.push_back(m);
  }
  return result;
}

double FailGivenMutated(const KillMatrix& matrix, std::string_view method,
                        std::string_view test) {
  auto col = matrix.FindTest(test);
  if (!col) {
    throw Error(ErrorCode::kNotFound, "unknown test '" + std::string(test) + "'");
  }
  std::size_t total = 0;
  std::size_t killers = 0;
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    if (matrix.mutants()[m].method != method) continue;
    ++total;
    if (matrix.killed(m, *col)) ++killers;
  }
  if (total == 0) {
    throw Error(ErrorCode::kEmptyStratum,
                "method '" + std::string(method) + "' has no mutants");
  }
  return static_cast<double>(killers) / static_cast<double>(total);
}

KillMatrix Restrict(const KillMatrix& matrix, const std::vector<TestId>& tests) {
  std::vector<std::size_t> columns;
  columns.reserve(tests.size());
  std::set<std::string_view> seen;
  for (const auto& t : tests) {
    auto col = matrix.FindTest(t);
    if (!col) throw Error(ErrorCode::kNotFound, "unknown test '" + t + "'");
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::kInvalidConfig, "test '" + t + "' listed twice");
    }
    columns.push_back(*col);
  }
  std::vector<std::uint8_t> kills;
  kills.reserve(matrix.num_mutants() * columns.size());
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    for (std::size_t c : columns) kills.push_back(matrix.killed(m, c) ? 1 : 0);
  }
  return KillMatrix(tests, matrix.mutants(), std::move(kills), matrix.methods());
}

KillMatrix SelectMutants(const KillMatrix& matrix,
                         std::vector<std::size_t> mutant_indices) {
  std::sort(mutant_indices.begin(), mutant_indices.end());
  mutant_indices.erase(
      std::unique(mutant_indices.begin(), mutant_indices.end()),
      mutant_indices.end());
  std::vector<MutantRecord> mutants;
  std::vector<std::uint8_t> kills;
  mutants.reserve(mutant_indices.size());
  kills.reserve(mutant_indices.size() * matrix.num_tests());
  for (std::size_t i : mutant_indices) {
    if (i >= matrix.num_mutants()) {
      throw Error(ErrorCode::kNotFound,
                  "mutant index " + std::to_string(i) + " out of range");
    }
    mutants.push_back(matrix.mutants()[i]);
    auto r = matrix.row(i);
    kills.insert(kills.end(), r.begin(), r.end());
  }
  return KillMatrix(matrix.tests(), std::move(mutants), std::move(kills),
                    matrix.methods());
}

KillMatrix WithoutMutant(const KillMatrix& matrix, std::size_t mutant_index) {
  std::vector<std::size_t> keep;
  keep.reserve(matrix.num_mutants());
  for (std::size_t i = 0; i < matrix.num_mutants(); ++i) {
    if (i != mutant_index) keep.push_back(i);
  }
  return SelectMutants(matrix, std::move(keep));
}

}  // namespace mutfl
