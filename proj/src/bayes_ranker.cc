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

#include "mutfl/bayes_ranker.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <omp.h>

#include "mutfl/error.h"

namespace mutfl {

namespace {

// Below this many cells the thread start-up cost outweighs the work.
constexpr std::size_t kParallelCellThreshold = 1 << 16;

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

void Tally(const KillMatrix& matrix, const ObservedColumns& cols,
           std::size_t mutant, std::uint64_t* per_column,
           std::uint64_t* exact) {
  const std::size_t n = cols.columns.size();
  const std::size_t method = matrix.method_of(mutant);
  auto row = matrix.row(mutant);
  bool all = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (row[cols.columns[c]] == cols.expected[c]) {
      ++per_column[method * n + c];
    } else {
      all = false;
    }
  }
  if (all) ++exact[method];
}

ScoreMap ZeroScores(const KillMatrix& matrix) {
  ScoreMap scores;
  for (const auto& method : matrix.methods()) scores.emplace(method, 0.0);
  return scores;
}

}  // namespace

std::string ModelName(const ModelSpec& spec) {
  std::string name;
  switch (spec.family) {
    case ModelFamily::kExactMatch:
      name = "EM";
      break;
    case ModelFamily::kPartialMatchProduct:
      name = "PM*";
      break;
    case ModelFamily::kPartialMatchSum:
      name = "PM+";
      break;
  }
  return name + (spec.scope == Scope::kFailing ? "(F)" : "(F+P)");
}

ModelFamily ParseModelFamily(std::string_view text) {
  const std::string s = Lower(text);
  if (s == "em") return ModelFamily::kExactMatch;
  if (s == "pm*" || s == "pmstar") return ModelFamily::kPartialMatchProduct;
  if (s == "pm+" || s == "pmplus") return ModelFamily::kPartialMatchSum;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown model family '" + std::string(text) + "'");
}

Scope ParseScope(std::string_view text) {
  const std::string s = Lower(text);
  if (s == "f") return Scope::kFailing;
  if (s == "fp" || s == "f+p") return Scope::kFailingPassing;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown scope '" + std::string(text) + "'");
}

void RankerConfig::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidConfig, "epsilon must be positive");
  }
}

ObservedColumns ObserveColumns(const KillMatrix& matrix,
                               const FailureObservation& obs, Scope scope) {
  obs.Validate();
  if (scope == Scope::kFailingPassing && !obs.passing) {
    throw Error(ErrorCode::kInvalidObservation,
                "F+P scope requires a passing test set");
  }
  std::vector<std::pair<std::size_t, std::uint8_t>> picked;
  for (const auto& t : obs.failing) {
    auto col = matrix.FindTest(t);
    if (!col) throw Error(ErrorCode::kNotFound, "unknown test '" + t + "'");
    picked.emplace_back(*col, 1);
  }
  if (scope == Scope::kFailingPassing) {
    for (const auto& t : *obs.passing) {
      auto col = matrix.FindTest(t);
      if (!col) throw Error(ErrorCode::kNotFound, "unknown test '" + t + "'");
      picked.emplace_back(*col, 0);
    }
  }
  std::sort(picked.begin(), picked.end());
  ObservedColumns out;
  for (const auto& [col, expected] : picked) {
    out.columns.push_back(col);
    out.expected.push_back(expected);
  }
  return out;
}

MatchTable CountMatchesSerial(const KillMatrix& matrix,
                              const ObservedColumns& cols) {
  MatchTable table;
  table.num_methods = matrix.num_methods();
  table.num_columns = cols.columns.size();
  table.per_column.assign(table.num_methods * table.num_columns, 0);
  table.exact.assign(table.num_methods, 0);
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    Tally(matrix, cols, m, table.per_column.data(), table.exact.data());
  }
  return table;
}

MatchTable CountMatches(const KillMatrix& matrix, const ObservedColumns& cols) {
  const std::size_t cells = matrix.num_mutants() * cols.columns.size();
  if (cells < kParallelCellThreshold || omp_get_max_threads() == 1) {
    return CountMatchesSerial(matrix, cols);
  }
  MatchTable table;
  table.num_methods = matrix.num_methods();
  table.num_columns = cols.columns.size();
  table.per_column.assign(table.num_methods * table.num_columns, 0);
  table.exact.assign(table.num_methods, 0);
  const auto num_mutants = static_cast<std::int64_t>(matrix.num_mutants());
#pragma omp parallel
  {
    std::vector<std::uint64_t> per_column(table.per_column.size(), 0);
    std::vector<std::uint64_t> exact(table.exact.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < num_mutants; ++m) {
      Tally(matrix, cols, static_cast<std::size_t>(m), per_column.data(),
            exact.data());
    }
    // Integer tallies, so the merge order does not affect the result.
#pragma omp critical
    {
      for (std::size_t i = 0; i < per_column.size(); ++i) {
        table.per_column[i] += per_column[i];
      }
      for (std::size_t i = 0; i < exact.size(); ++i) table.exact[i] += exact[i];
    }
  }
  return table;
}

ScoreMap ScoreExactMatch(const KillMatrix& matrix, const FailureObservation& obs,
                         Scope scope) {
  const MatchTable table = CountMatches(matrix, ObserveColumns(matrix, obs, scope));
  ScoreMap scores = ZeroScores(matrix);
  for (std::size_t e = 0; e < table.num_methods; ++e) {
    scores[matrix.methods()[e]] = static_cast<double>(table.exact[e]);
  }
  return scores;
}

ScoreMap ScorePartialMatchProduct(const KillMatrix& matrix,
                                  const FailureObservation& obs, Scope scope,
                                  const RankerConfig& config) {
  config.Validate();
  const MatchTable table = CountMatches(matrix, ObserveColumns(matrix, obs, scope));
  ScoreMap scores = ZeroScores(matrix);
  for (std::size_t e = 0; e < table.num_methods; ++e) {
    double product = 1.0;
    for (std::size_t c = 0; c < table.num_columns; ++c) {
      product *= static_cast<double>(table.at(e, c)) + config.epsilon;
    }
    scores[matrix.methods()[e]] = product;
  }
  return scores;
}

ScoreMap ScorePartialMatchSum(const KillMatrix& matrix,
                              const FailureObservation& obs, Scope scope) {
  const MatchTable table = CountMatches(matrix, ObserveColumns(matrix, obs, scope));
  ScoreMap scores = ZeroScores(matrix);
  for (std::size_t e = 0; e < table.num_methods; ++e) {
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < table.num_columns; ++c) sum += table.at(e, c);
    scores[matrix.methods()[e]] = static_cast<double>(sum);
  }
  return scores;
}

ScoreMap Score(const KillMatrix& matrix, const FailureObservation& obs,
               const ModelSpec& spec, const RankerConfig& config) {
  switch (spec.family) {
    case ModelFamily::kExactMatch:
      return ScoreExactMatch(matrix, obs, spec.scope);
    case ModelFamily::kPartialMatchProduct:
      return ScorePartialMatchProduct(matrix, obs, spec.scope, config);
    case ModelFamily::kPartialMatchSum:
      return ScorePartialMatchSum(matrix, obs, spec.scope);
  }
  throw Error(ErrorCode::kInternal, "unhandled model family");
}

Ranking Rank(const ScoreMap& scores) {
  Ranking ranking;
  ranking.reserve(scores.size());
  for (const auto& [method, score] : scores) {
    ranking.push_back({method, score, 0});
  }
  // ScoreMap iterates in name order and the sort is stable, so ties stay
  // lexicographic.
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedMethod& a, const RankedMethod& b) {
                     return a.score > b.score;
                   });
  std::size_t begin = 0;
  while (begin < ranking.size()) {
    std::size_t end = begin + 1;
    while (end < ranking.size() && ranking[end].score == ranking[begin].score) {
      ++end;
    }
    for (std::size_t i = begin; i < end; ++i) {
      ranking[i].rank = static_cast<int>(end);
    }
    begin = end;
  }
  return ranking;
}

Ranking Localize(const KillMatrix& matrix, const FailureObservation& obs,
                 const ModelSpec& spec, const RankerConfig& config) {
  return Rank(Score(matrix, obs, spec, config));
}

}  // namespace mutfl
