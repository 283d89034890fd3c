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

// Diversifying greedy samplers.
//
// Both samplers build a greedy core while holding back a margin m of the
// budget, then complete the core into mu solutions with randomly chosen
// elements. DGS handles cardinality constraints, GDGS knapsack ones.

#ifndef DIVSUB_GREEDY_H_
#define DIVSUB_GREEDY_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divsub/core.h"

namespace divsub {

using BigInt = boost::multiprecision::cpp_int;

struct GreedyStep {
  Element element;
  double gain;  // marginal gain observed when the element was selected
};

struct SingletonChoice {
  Element element;
  double value;
};

struct GreedyTrace {
  // S for DGS; T (the better of S and the best singleton) for GDGS.
  Solution core;
  // S before the singleton comparison. Equal to `core` for DGS.
  Solution greedy_set;
  std::vector<GreedyStep> insertion_order;
  std::optional<SingletonChoice> best_singleton;  // GDGS only
  // Non-empty when the instance forced a fallback (e.g. n < B).
  std::vector<std::string> flags;

  bool degenerate() const { return !flags.empty(); }
};

struct SamplerResult {
  Population population;
  GreedyTrace trace;
};

// Greedy phase of DGS: B - m steps of largest marginal gain, ties to the
// lowest index. Requires a uniform model.
GreedyTrace DgsCore(const ObjectiveOracle& oracle, const CostModel& model);

// Completion phase of DGS: each solution is the core plus B - |core|
// elements drawn uniformly without replacement from the rest.
Population DgsSample(const ObjectiveOracle& oracle, const CostModel& model,
                     const GreedyTrace& trace, int mu, std::uint64_t seed);

SamplerResult Dgs(const ObjectiveOracle& oracle, const CostModel& model, int mu,
                  std::uint64_t seed);

// Greedy phase of GDGS: repeatedly takes the remaining element with the
// largest gain/cost ratio and keeps it if the core still costs at most
// B - m. The core is then compared with the best singleton of cost at most
// B - m. Requires a knapsack model.
GreedyTrace GdgsCore(const ObjectiveOracle& oracle, const CostModel& model);

// Completion phase of GDGS: each solution starts from the core and scans
// the remaining elements in random order, adding every one that still
// fits within B.
Population GdgsSample(const ObjectiveOracle& oracle, const CostModel& model,
                      const GreedyTrace& trace, int mu, std::uint64_t seed);

SamplerResult Gdgs(const ObjectiveOracle& oracle, const CostModel& model,
                   int mu, std::uint64_t seed);

// Dispatches on the model kind.
SamplerResult DiversifyingGreedySample(const ObjectiveOracle& oracle,
                                       const CostModel& model, int mu,
                                       std::uint64_t seed);

struct DgsCountBound {
  BigInt total;            // sum_{i=0}^{m} C(n - B + m, i)
  BigInt per_sample_pool;  // C(n - B + m, m)
};

// Number of feasible solutions no worse than the DGS core, and the size of
// the pool each DGS sample is drawn from. Requires 0 <= m <= B <= n.
DgsCountBound DgsSolutionCountBound(int n, int budget, int margin);

struct GdgsCountBound {
  BigInt count;  // sum_{i=1}^{floor(m/c_max)} C(n - floor((B-m)/c_min), i)
  bool vacuous;  // floor(m / c_max) == 0
};

GdgsCountBound GdgsSolutionCountBound(int n, double budget, double margin,
                                      double c_min, double c_max);

BigInt Binomial(std::int64_t n, std::int64_t k);

}  // namespace divsub

#endif  // DIVSUB_GREEDY_H_
