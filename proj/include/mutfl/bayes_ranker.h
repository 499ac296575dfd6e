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

#ifndef MUTFL_BAYES_RANKER_H_
#define MUTFL_BAYES_RANKER_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mutfl/kill_matrix.h"

namespace mutfl {

enum class ModelFamily { kExactMatch, kPartialMatchProduct, kPartialMatchSum };

// kFailing uses only the failing tests of an observation; kFailingPassing
// uses the failing and passing tests together.
enum class Scope { kFailing, kFailingPassing };

struct ModelSpec {
  ModelFamily family = ModelFamily::kPartialMatchSum;
  Scope scope = Scope::kFailing;
};

// Display name such as "PM+(F)" or "EM(F+P)".
std::string ModelName(const ModelSpec& spec);
// Accepts "em", "pm*", "pmstar", "pm+", "pmplus" (case-insensitive).
ModelFamily ParseModelFamily(std::string_view text);
// Accepts "f", "fp", "f+p" (case-insensitive).
Scope ParseScope(std::string_view text);

struct RankerConfig {
  double epsilon = 0.001;

  void Validate() const;
};

using ScoreMap = std::map<MethodId, double>;

struct RankedMethod {
  MethodId method;
  double score = 0.0;
  int rank = 0;

  friend bool operator==(const RankedMethod&, const RankedMethod&) = default;
};

using Ranking = std::vector<RankedMethod>;

// Per-method match counts over the observed columns. A mutant matches a column
// when its kill cell equals the observed outcome there (1 for a failing test,
// 0 for a passing one).
struct MatchTable {
  std::size_t num_methods = 0;
  std::size_t num_columns = 0;
  // num_methods x num_columns, row-major.
  std::vector<std::uint64_t> per_column;
  // Mutants of each method that match on every column.
  std::vector<std::uint64_t> exact;

  std::uint64_t at(std::size_t method, std::size_t column) const {
    return per_column[method * num_columns + column];
  }
  friend bool operator==(const MatchTable&, const MatchTable&) = default;
};

struct ObservedColumns {
  std::vector<std::size_t> columns;
  std::vector<std::uint8_t> expected;
};

// Validates `obs` for `scope` and maps it to matrix columns. kFailing keeps
// only the failing tests; kFailingPassing keeps failing and passing tests.
// Columns come out in matrix order.
ObservedColumns ObserveColumns(const KillMatrix& matrix,
                               const FailureObservation& obs, Scope scope);

// Counting kernel. The parallel version splits mutants across OpenMP threads
// with private tallies; the serial version is the reference it is tested
// against.
MatchTable CountMatches(const KillMatrix& matrix, const ObservedColumns& cols);
MatchTable CountMatchesSerial(const KillMatrix& matrix,
                              const ObservedColumns& cols);

// Exact-match scores: the number of a method's mutants whose kill set equals
// the failing set. Under kFailing only the failing columns are consulted, so
// a mutant qualifies when every failing test kills it.
ScoreMap ScoreExactMatch(const KillMatrix& matrix, const FailureObservation& obs,
                         Scope scope);

// Product over observed tests of (matching mutants + epsilon).
ScoreMap ScorePartialMatchProduct(const KillMatrix& matrix,
                                  const FailureObservation& obs, Scope scope,
                                  const RankerConfig& config);

// Sum over observed tests of matching mutants.
ScoreMap ScorePartialMatchSum(const KillMatrix& matrix,
                              const FailureObservation& obs, Scope scope);

ScoreMap Score(const KillMatrix& matrix, const FailureObservation& obs,
               const ModelSpec& spec, const RankerConfig& config);

// Descending by score; ties share the worst position of their group and are
// listed in lexicographic method order.
Ranking Rank(const ScoreMap& scores);

Ranking Localize(const KillMatrix& matrix, const FailureObservation& obs,
                 const ModelSpec& spec, const RankerConfig& config);

}  // namespace mutfl

#endif  // MUTFL_BAYES_RANKER_H_
