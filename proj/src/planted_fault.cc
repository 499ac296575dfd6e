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

#include "mutfl/planted_fault.h"

#include <algorithm>
#include <exception>
#include <mutex>

#include <omp.h>

#include "mutfl/error.h"

namespace mutfl {

namespace {

struct Plan {
  KillMatrix model;
  std::vector<std::size_t> planted;  // rows of the full matrix
  std::size_t skipped = 0;
};

Plan Prepare(const KillMatrix& matrix, const RankerConfig& config,
             const PlantedFaultOptions& options) {
  config.Validate();
  if (matrix.num_mutants() < 2) {
    throw Error(ErrorCode::kNothingToEvaluate,
                "planted-fault evaluation needs at least two mutants");
  }
  Plan plan;
  plan.model = options.sample ? Sample(matrix, *options.sample) : matrix;
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    auto row = matrix.row(m);
    if (std::find(row.begin(), row.end(), 1) == row.end()) {
      ++plan.skipped;
    } else {
      plan.planted.push_back(m);
    }
  }
  if (plan.planted.empty()) {
    throw Error(ErrorCode::kNothingToEvaluate, "no mutant is killed by any test");
  }
  return plan;
}

FaultResult EvaluateOne(const KillMatrix& matrix, const KillMatrix& model,
                        std::size_t mutant, const ModelSpec& spec,
                        const RankerConfig& config) {
  const MutantRecord& planted = matrix.mutants()[mutant];
  FailureObservation obs;
  std::set<TestId> passing;
  for (std::size_t t = 0; t < matrix.num_tests(); ++t) {
    (matrix.killed(mutant, t) ? obs.failing : passing).insert(matrix.tests()[t]);
  }
  obs.passing = std::move(passing);

  auto in_model = model.FindMutant(planted.id);
  const Ranking ranking =
      in_model ? Localize(WithoutMutant(model, *in_model), obs, spec, config)
               : Localize(model, obs, spec, config);

  FaultSpec fault{planted.id, {planted.method}};
  FaultResult result;
  result.fault_id = planted.id;
  result.faulty_methods = fault.faulty_methods;
  result.best_rank = BestRank(ranking, fault);
  result.wef = Wef(ranking, fault);
  result.average_precision = AveragePrecision(ranking, fault);
  return result;
}

EvalReport Assemble(const KillMatrix& matrix, const ModelSpec& spec,
                    const Plan& plan, std::vector<FaultResult> results) {
  EvalReport report;
  report.model = ModelName(spec);
  report.num_methods = matrix.num_methods();
  report.skipped = plan.skipped;
  report.faults = std::move(results);
  Summarize(report);
  return report;
}

}  // namespace

EvalReport PlantedFaultEvalSerial(const KillMatrix& matrix,
                                  const ModelSpec& spec,
                                  const RankerConfig& config,
                                  const PlantedFaultOptions& options) {
  const Plan plan = Prepare(matrix, config, options);
  std::vector<FaultResult> results;
  results.reserve(plan.planted.size());
  for (std::size_t m : plan.planted) {
    results.push_back(EvaluateOne(matrix, plan.model, m, spec, config));
  }
  return Assemble(matrix, spec, plan, std::move(results));
}

EvalReport PlantedFaultEval(const KillMatrix& matrix, const ModelSpec& spec,
                            const RankerConfig& config,
                            const PlantedFaultOptions& options) {
  const Plan plan = Prepare(matrix, config, options);
  std::vector<FaultResult> results(plan.planted.size());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(plan.planted.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      results[i] = EvaluateOne(matrix, plan.model, plan.planted[i], spec, config);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return Assemble(matrix, spec, plan, std::move(results));
}

}  // namespace mutfl
