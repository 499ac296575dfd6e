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

#ifndef MUTFL_METRICS_H_
#define MUTFL_METRICS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mutfl/bayes_ranker.h"

namespace mutfl {

struct FaultSpec {
  std::string id;
  std::set<MethodId> faulty_methods;
};

// Highest (numerically smallest) rank among the faulty methods, or nullopt
// when none of them is in the ranking.
std::optional<int> BestRank(const Ranking& ranking, const FaultSpec& fault);

// Number of faults whose best rank is <= n. Unretrieved faults never count.
int AccAtN(std::span<const std::optional<int>> best_ranks, int n);

// Wasted effort: best rank - 1. An unretrieved fault costs the whole ranking.
int Wef(const Ranking& ranking, const FaultSpec& fault);

// (1/|R|) * sum_i i / r_i over the ranks r_1 <= r_2 <= ... of the retrieved
// faulty methods, R being all faulty methods.
double AveragePrecision(const Ranking& ranking, const FaultSpec& fault);
double MeanAveragePrecision(std::span<const double> average_precisions);

struct FaultResult {
  std::string fault_id;
  std::set<MethodId> faulty_methods;
  std::optional<int> best_rank;
  int wef = 0;
  double average_precision = 0.0;

  friend bool operator==(const FaultResult&, const FaultResult&) = default;
};

struct EvalReport {
  std::string model;
  std::size_t num_methods = 0;
  std::size_t skipped = 0;
  std::vector<FaultResult> faults;

  int acc1 = 0;
  int acc3 = 0;
  int acc5 = 0;
  int acc10 = 0;
  double wef_median = 0.0;
  double wef_mean = 0.0;
  double wef_std = 0.0;  // sample standard deviation, 0 for a single fault
  double map = 0.0;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Fills the aggregate fields of `report` from report.faults.
void Summarize(EvalReport& report);

std::string ReportToJson(const EvalReport& report);
// One header row and one data row laid out like a results table:
// model, faults studied, acc@1/3/5/10, wef median/mean/std, MAP.
std::string ReportToTable(const EvalReport& report);

}  // namespace mutfl

#endif  // MUTFL_METRICS_H_
