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

#ifndef MUTFL_PLANTED_FAULT_H_
#define MUTFL_PLANTED_FAULT_H_

#include <optional>

#include "mutfl/bayes_ranker.h"
#include "mutfl/metrics.h"
#include "mutfl/sampling.h"

namespace mutfl {

struct PlantedFaultOptions {
  // When set, localisation uses a sampled copy of the matrix while faults are
  // still planted from every mutant of the full matrix.
  std::optional<SamplePlan> sample;
  // OpenMP threads; 0 means the runtime default.
  int jobs = 0;
};

// Hold-one-mutant-out evaluation. Each mutant m with a non-empty kill set is
// treated as a fault in m's method: the observation is (failing = K_m,
// passing = the remaining tests), m's row is removed from the model matrix,
// and the resulting ranking is scored. Mutants nobody kills are skipped and
// counted in EvalReport::skipped.
//
// Throws kNothingToEvaluate for matrices with fewer than two mutants or
// without any killed mutant.
EvalReport PlantedFaultEval(const KillMatrix& matrix, const ModelSpec& spec,
                            const RankerConfig& config,
                            const PlantedFaultOptions& options = {});

// Single-threaded reference for PlantedFaultEval.
EvalReport PlantedFaultEvalSerial(const KillMatrix& matrix,
                                  const ModelSpec& spec,
                                  const RankerConfig& config,
                                  const PlantedFaultOptions& options = {});

}  // namespace mutfl

#endif  // MUTFL_PLANTED_FAULT_H_
