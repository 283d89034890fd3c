// Copyright 2026 The divsub Authors.
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

#include "divsub/core.h"

#include <memory>
#include <stdexcept>
#include <vector>

#include "divsub/problems.h"
#include "divsub/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace divsub {
namespace {

using ::divsub::testing::RandomChain;
using ::divsub::testing::RandomCoverage;
using ::divsub::testing::RandomDigraph;
using ::divsub::testing::RandomSubset;

TEST(GroundSetTest, RejectsEmpty) {
  EXPECT_THROW(GroundSet(0), std::invalid_argument);
  GroundSet v(3);
  EXPECT_TRUE(v.Contains(2));
  EXPECT_FALSE(v.Contains(3));
}

TEST(SolutionTest, SortsAndRejectsDuplicates) {
  Solution s({7, 0, 3});
  EXPECT_EQ(std::vector<Element>(s.members().begin(), s.members().end()),
            (std::vector<Element>{0, 3, 7}));
  EXPECT_EQ(s.ToString(), "{0,3,7}");
  EXPECT_THROW(Solution({1, 1}), std::invalid_argument);
}

TEST(SolutionTest, MutationInvalidatesCaches) {
  Solution s({1, 2});
  s.set_value(5.0);
  s.set_cost(2.0);
  EXPECT_FALSE(s.Insert(1));
  EXPECT_TRUE(s.value().has_value());
  EXPECT_TRUE(s.Insert(4));
  EXPECT_FALSE(s.value().has_value());
  EXPECT_FALSE(s.cost().has_value());

  s.set_value(1.0);
  EXPECT_FALSE(s.Erase(9));
  EXPECT_TRUE(s.value().has_value());
  EXPECT_TRUE(s.Erase(1));
  EXPECT_FALSE(s.value().has_value());

  s.set_value(1.0);
  s.Toggle(0);
  EXPECT_TRUE(s.Contains(0));
  EXPECT_FALSE(s.value().has_value());
  s.Toggle(0);
  EXPECT_FALSE(s.Contains(0));
}

TEST(SolutionTest, EqualityIgnoresCaches) {
  Solution a({1, 2});
  Solution b({2, 1});
  a.set_value(3.0);
  EXPECT_EQ(a, b);
}

TEST(PopulationTest, CountsFollowAddAndRemove) {
  Population pop(4);
  pop.Add(Solution({0, 1}));
  pop.Add(Solution({1, 2}));
  pop.Add(Solution({1}));
  EXPECT_EQ(std::vector<int>(pop.occurrence_counts().begin(),
                             pop.occurrence_counts().end()),
            (std::vector<int>{1, 3, 1, 0}));
  Solution removed = pop.Remove(1);
  EXPECT_EQ(removed, Solution({1, 2}));
  EXPECT_EQ(pop[1], Solution({1}));
  EXPECT_EQ(std::vector<int>(pop.occurrence_counts().begin(),
                             pop.occurrence_counts().end()),
            (std::vector<int>{1, 2, 0, 0}));
  EXPECT_THROW(pop.Remove(5), std::out_of_range);
  EXPECT_THROW(pop.Add(Solution({4})), std::invalid_argument);
}

TEST(PopulationTest, CountsMatchRecountUnderRandomOperations) {
  for (int n : {1, 5, 30, 100}) {
    Rng rng(n);
    Population pop(n);
    for (int step = 0; step < 2000; ++step) {
      if (pop.empty() || rng.Bernoulli(0.55)) {
        pop.Add(RandomSubset(n, rng.Uniform01(), rng));
      } else {
        pop.Remove(rng.UniformIndex(pop.size()));
      }
      for (int c : pop.occurrence_counts()) {
        ASSERT_GE(c, 0);
        ASSERT_LE(c, static_cast<int>(pop.size()));
      }
      ASSERT_TRUE(pop.CountsConsistent()) << "n=" << n << " step=" << step;
    }
  }
}

TEST(CostModelTest, UniformCost) {
  const CostModel model = CostModel::Uniform(10, 10, 2);
  EXPECT_EQ(model.Cost(Solution()), 0.0);
  EXPECT_EQ(model.Cost(Solution({0, 3, 7})), 3.0);
  EXPECT_TRUE(model.integral());
}

TEST(CostModelTest, KnapsackCost) {
  const CostModel model = CostModel::Knapsack({2, 5, 1}, 4, 0);
  EXPECT_EQ(model.Cost(Solution({0, 2})), 3.0);
  EXPECT_EQ(model.c_min(), 1.0);
  EXPECT_EQ(model.c_max(), 5.0);
}

TEST(CostModelTest, Feasibility) {
  std::vector<Element> ten(10);
  for (Element i = 0; i < 10; ++i) ten[i] = i;
  const CostModel uniform = CostModel::Uniform(20, 10, 2);
  EXPECT_TRUE(uniform.IsFeasible(Solution(ten), 0));
  ten.pop_back();
  EXPECT_FALSE(uniform.IsFeasible(Solution(ten), 2));

  const CostModel knapsack = CostModel::Knapsack({2, 5, 1}, 4, 0);
  EXPECT_FALSE(knapsack.IsFeasible(Solution({1}), 0));
  EXPECT_TRUE(knapsack.IsFeasible(Solution({0, 2}), 0));
}

TEST(CostModelTest, RealCostsUseRelativeTolerance) {
  const CostModel model = CostModel::Knapsack({0.1, 0.2}, 0.3, 0);
  EXPECT_FALSE(model.integral());
  // 0.1 + 0.2 > 0.3 in binary floating point.
  EXPECT_TRUE(model.IsFeasible(Solution({0, 1})));
  const CostModel exact = CostModel::Knapsack({1, 2}, 2, 0);
  EXPECT_FALSE(exact.IsFeasible(Solution({0, 1})));
}

TEST(CostModelTest, RejectsInvalidParameters) {
  EXPECT_THROW(CostModel::Uniform(5, 3, 4), std::invalid_argument);
  EXPECT_THROW(CostModel::Uniform(5, 0, 0), std::invalid_argument);
  EXPECT_THROW(CostModel::Uniform(5, 3, -1), std::invalid_argument);
  EXPECT_THROW(CostModel::Knapsack({1, 0}, 3, 0), std::invalid_argument);
  EXPECT_THROW(CostModel::Knapsack({1, -2}, 3, 0), std::invalid_argument);
}

TEST(CostModelTest, KnapsackIsAdditiveOnDisjointSets) {
  Rng rng(7);
  std::vector<double> costs(25);
  for (double& c : costs) c = 1 + static_cast<double>(rng.UniformIndex(9));
  const CostModel model = CostModel::Knapsack(costs, 100, 0);
  for (int t = 0; t < 200; ++t) {
    std::vector<Element> a, b;
    for (Element e = 0; e < 25; ++e) {
      const auto r = rng.UniformIndex(3);
      if (r == 0) a.push_back(e);
      if (r == 1) b.push_back(e);
    }
    std::vector<Element> u = a;
    u.insert(u.end(), b.begin(), b.end());
    EXPECT_EQ(model.Cost(Solution(u)),
              model.Cost(Solution(a)) + model.Cost(Solution(b)));
  }
}

TEST(CostModelTest, WithBudgetKeepsCosts) {
  const CostModel model = CostModel::Knapsack({2, 5, 1}, 4, 0);
  const CostModel wider = model.WithBudget(10, 3);
  EXPECT_EQ(wider.budget(), 10);
  EXPECT_EQ(wider.margin(), 3);
  EXPECT_EQ(wider.Cost(Solution({0, 1, 2})), 8);
}

TEST(EvaluateCachedTest, FillsOnce) {
  int calls = 0;
  FunctionOracle oracle(4, [&](std::span<const Element> m) {
    ++calls;
    return static_cast<double>(m.size());
  });
  Solution s({1, 2});
  EXPECT_EQ(EvaluateCached(oracle, s), 2.0);
  EXPECT_EQ(EvaluateCached(oracle, s), 2.0);
  EXPECT_EQ(calls, 1);
}

void ExpectMonotone(const ObjectiveOracle& oracle, std::uint64_t seed) {
  Rng rng(seed);
  const int n = oracle.ground_size();
  EXPECT_GE(oracle.Evaluate(Solution()), 0.0);
  for (int t = 0; t < 1000; ++t) {
    auto [a, b] = RandomChain(n, rng);
    ASSERT_LE(oracle.Evaluate(a), oracle.Evaluate(b))
        << oracle.name() << " A=" << a.ToString() << " B=" << b.ToString();
  }
}

TEST(OracleMonotonicityTest, Coverage) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ExpectMonotone(CoverageOracle(RandomCoverage(30, 40, 0.15, seed)), seed);
  }
}

TEST(OracleMonotonicityTest, Cascade) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    CascadeParams params;
    params.samples = 20;
    params.evaluation_seed = seed;
    ExpectMonotone(CascadeEvaluator(RandomDigraph(30, 0.1, seed), params),
                   seed);
  }
}

TEST(OracleMonotonicityTest, OneMax) { ExpectMonotone(OneMaxOracle(30), 1); }

}  // namespace
}  // namespace divsub
