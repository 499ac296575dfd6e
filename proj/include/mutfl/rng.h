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

#ifndef MUTFL_RNG_H_
#define MUTFL_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace mutfl {

// Seedable generator with a platform-independent output sequence.
//
// The engine is std::mt19937_64, whose output is fully specified by the C++
// standard. The standard distributions are implementation-defined, so
// bounded integers use rejection sampling on the raw 64-bit output and reals
// take the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). `bound` must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform in [0, 1).
  double UniformUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * UniformUnit(); }

 private:
  std::mt19937_64 engine_;
};

// `count` distinct indices from [0, population), drawn with a partial
// Fisher-Yates shuffle and returned in ascending order.
std::vector<std::size_t> SampleIndices(Rng& rng, std::size_t population,
                                       std::size_t count);

}  // namespace mutfl

#endif  // MUTFL_RNG_H_
