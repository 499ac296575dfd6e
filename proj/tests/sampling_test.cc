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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mutfl/error.h"
#include "mutfl/rng.h"
#include "test_support.h"

namespace mutfl {
namespace {

using testing::RandomMatrix;
using testing::WorkedExample;

std::vector<std::string> Ids(const KillMatrix& k) {
  std::vector<std::string> out;
  for (const auto& m : k.mutants()) out.push_back(m.id);
  return out;
}

// Kept rows are verbatim copies, in their original relative order.
void ExpectSubsetInOrder(const KillMatrix& sample, const KillMatrix& full) {
  EXPECT_EQ(sample.tests(), full.tests());
  EXPECT_EQ(sample.methods(), full.methods());
  std::size_t last = 0;
  bool first = true;
  for (std::size_t i = 0; i < sample.num_mutants(); ++i) {
    const auto at = full.FindMutant(sample.mutants()[i].id);
    ASSERT_TRUE(at);
    if (!first) EXPECT_GT(*at, last);
    first = false;
    last = *at;
    EXPECT_EQ(sample.mutants()[i], full.mutants()[*at]);
    EXPECT_TRUE(std::ranges::equal(sample.row(i), full.row(*at)));
  }
}

TEST(RngTest, UniformBelowStaysInRangeAndIsSeeded) {
  Rng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.UniformBelow(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, b.UniformBelow(7));
    const double u = a.UniformUnit();
    b.UniformUnit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngTest, SampleIndicesDistinctSorted) {
  Rng rng(1);
  for (std::size_t n : {1u, 5u, 40u}) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto idx = SampleIndices(rng, n, k);
      ASSERT_EQ(idx.size(), k);
      EXPECT_TRUE(std::ranges::is_sorted(idx));
      EXPECT_EQ(std::set<std::size_t>(idx.begin(), idx.end()).size(), k);
      for (auto i : idx) EXPECT_LT(i, n);
    }
  }
}

TEST(RngTest, SampleIndicesRoughlyUniform) {
  Rng rng(3);
  std::vector<int> hits(10, 0);
  for (int i = 0; i < 20000; ++i) {
    for (auto j : SampleIndices(rng, 10, 3)) ++hits[j];
  }
  for (int h : hits) EXPECT_NEAR(h, 6000, 400);
}

TEST(SampleUniformTest, Examples) {
  const KillMatrix k = WorkedExample();
  EXPECT_EQ(SampleUniform(k, 1.0, 0), k);
  const KillMatrix half = SampleUniform(k, 0.5, 0);
  EXPECT_EQ(half.num_mutants(), 4u);
  ExpectSubsetInOrder(half, k);
  EXPECT_EQ(SampleUniform(k, 0.01, 0).num_mutants(), 1u);
  for (double bad : {0.0, -0.5, 1.5}) {
    try {
      SampleUniform(k, bad, 0);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
    }
  }
  EXPECT_THROW(SampleUniform(KillMatrix({"t"}, {}, {}), 0.5, 0), Error);
}

TEST(SampleUniformTest, SeedDeterminismAndVariety) {
  std::mt19937_64 gen(1);
  KillMatrix k = RandomMatrix(gen, {5, 30, 3});
  while (k.num_mutants() != 30) k = RandomMatrix(gen, {5, 30, 3});
  std::set<std::vector<std::string>> distinct;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KillMatrix a = SampleUniform(k, 0.5, seed);
    EXPECT_EQ(a, SampleUniform(k, 0.5, seed));
    EXPECT_EQ(a.num_mutants(), 15u);
    ExpectSubsetInOrder(a, k);
    distinct.insert(Ids(a));
  }
  EXPECT_GE(distinct.size(), 2u);
}

TEST(SampleStratifiedTest, Examples) {
  const KillMatrix k = WorkedExample();
  EXPECT_EQ(SampleStratified(k, 5, 0), k);
  const KillMatrix two = SampleStratified(k, 2, 0);
  EXPECT_EQ(two.num_mutants(), 4u);
  EXPECT_EQ(MutantsOf(two, "getType").size(), 2u);
  EXPECT_EQ(MutantsOf(two, "resolveType").size(), 2u);
  ExpectSubsetInOrder(two, k);
  const KillMatrix single({"t"}, {{"only", "f", "AOR", ""}}, {1});
  EXPECT_EQ(SampleStratified(single, 1, 9), single);
  try {
    SampleStratified(k, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
  }
}

TEST(SampleStratifiedTest, RandomMatrices) {
  std::mt19937_64 gen(2);
  for (int round = 0; round < 100; ++round) {
    const KillMatrix k = RandomMatrix(gen);
    const std::size_t n = 1 + round % 4;
    const KillMatrix s = SampleStratified(k, n, round);
    ExpectSubsetInOrder(s, k);
    EXPECT_EQ(s, SampleStratified(k, n, round));
    for (const auto& e : k.methods()) {
      EXPECT_EQ(MutantsOf(s, e).size(), std::min(n, MutantsOf(k, e).size()));
    }
    EXPECT_EQ(SampleStratified(k, 30, round), k);
  }
}

TEST(SamplePlanTest, Dispatch) {
  const KillMatrix k = WorkedExample();
  EXPECT_EQ(Sample(k, {SamplePlan::Kind::kUniform, 0.5, 1, 3}), SampleUniform(k, 0.5, 3));
  EXPECT_EQ(Sample(k, {SamplePlan::Kind::kStratified, 1.0, 2, 3}),
            SampleStratified(k, 2, 3));
}

}  // namespace
}  // namespace mutfl
