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

#include "mutfl/sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mutfl/error.h"
#include "mutfl/rng.h"

namespace mutfl {

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  // Values below `threshold` would bias the modulo; 2^64 mod bound of them.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

std::vector<std::size_t> SampleIndices(Rng& rng, std::size_t population,
                                       std::size_t count) {
  count = std::min(count, population);
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.UniformBelow(population - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void SamplePlan::Validate() const {
  if (kind == Kind::kUniform) {
    if (!(rate > 0.0 && rate <= 1.0)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "sampling rate must be in (0, 1], got " + std::to_string(rate));
    }
  } else if (n_per_method < 1) {
    throw Error(ErrorCode::kInvalidConfig, "mutants per method must be >= 1");
  }
}

KillMatrix SampleUniform(const KillMatrix& matrix, double rate,
                         std::uint64_t seed) {
  SamplePlan{SamplePlan::Kind::kUniform, rate, 1, seed}.Validate();
  const std::size_t n = matrix.num_mutants();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidConfig, "cannot sample an empty matrix");
  }
  auto k = static_cast<std::size_t>(std::floor(rate * static_cast<double>(n) + 0.5));
  k = std::clamp<std::size_t>(k, 1, n);
  Rng rng(seed);
  return SelectMutants(matrix, SampleIndices(rng, n, k));
}

KillMatrix SampleStratified(const KillMatrix& matrix, std::size_t n_per_method,
                            std::uint64_t seed) {
  SamplePlan{SamplePlan::Kind::kStratified, 1.0, n_per_method, seed}.Validate();
  std::vector<std::vector<std::size_t>> strata(matrix.num_methods());
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    strata[matrix.method_of(m)].push_back(m);
  }
  Rng rng(seed);
  std::vector<std::size_t> keep;
  for (const auto& stratum : strata) {
    for (std::size_t i : SampleIndices(rng, stratum.size(), n_per_method)) {
      keep.push_back(stratum[i]);
    }
  }
  return SelectMutants(matrix, std::move(keep));
}

KillMatrix Sample(const KillMatrix& matrix, const SamplePlan& plan) {
  plan.Validate();
  if (plan.kind == SamplePlan::Kind::kUniform) {
    return SampleUniform(matrix, plan.rate, plan.seed);
  }
  return SampleStratified(matrix, plan.n_per_method, plan.seed);
}

}  // namespace mutfl
