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

#ifndef MUTFL_SAMPLING_H_
#define MUTFL_SAMPLING_H_

#include <cstddef>
#include <cstdint>

#include "mutfl/kill_matrix.h"

namespace mutfl {

struct SamplePlan {
  enum class Kind { kUniform, kStratified };

  Kind kind = Kind::kUniform;
  double rate = 1.0;            // kUniform
  std::size_t n_per_method = 1; // kStratified
  std::uint64_t seed = 0;

  void Validate() const;
};

// Keeps max(1, round-half-up(rate * |mutants|)) mutants chosen uniformly
// without replacement. Kept rows retain their relative order.
KillMatrix SampleUniform(const KillMatrix& matrix, double rate,
                         std::uint64_t seed);

// Keeps min(n_per_method, |mutants of e|) mutants of every method e.
KillMatrix SampleStratified(const KillMatrix& matrix, std::size_t n_per_method,
                            std::uint64_t seed);

KillMatrix Sample(const KillMatrix& matrix, const SamplePlan& plan);

}  // namespace mutfl

#endif  // MUTFL_SAMPLING_H_
