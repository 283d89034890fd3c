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

// Exhaustive ground truth for desk-scale instances: exact optimum,
// counting of good feasible solutions, the submodularity ratio, and checks
// of the greedy samplers' guarantees against them.

#ifndef DIVSUB_ORACLE_H_
#define DIVSUB_ORACLE_H_

#include <cstdint>
#include <optional>

#include "divsub/core.h"
#include "divsub/greedy.h"

namespace divsub {

inline constexpr int kBruteForceMaxN = 22;
inline constexpr int kSubmodularityRatioMaxN = 14;
inline constexpr int kApproximationCheckMaxN = 18;

struct BruteForceResult {
  double opt_value = 0.0;
  Solution opt_witness;
  // Number of distinct feasible subsets with f >= threshold, if requested.
  std::optional<BigInt> feasible_count_at_threshold;
  // Feasible subsets evaluated (infeasible branches are pruned).
  std::int64_t enumerated = 0;
};

// Depth-first enumeration in index order, pruning branches whose cost
// already exceeds B. Values are compared exactly for objectives with a
// value step and with a 1e-9 relative tolerance otherwise. Throws
// std::invalid_argument for n > kBruteForceMaxN.
BruteForceResult BruteForceOpt(const ObjectiveOracle& oracle,
                               const CostModel& model,
                               std::optional<double> threshold = std::nullopt);

struct SubmodularityReport {
  double alpha = 1.0;
  // Minimising triple (A, B, v); absent if no pair had a positive
  // denominator.
  std::optional<Solution> witness_a;
  std::optional<Solution> witness_b;
  std::optional<Element> witness_v;
  std::int64_t pairs_examined = 0;
};

// min over A <= B, v not in B of
//   (f(A + v) - f(A)) / (f(B + v) - f(B))
// over pairs with a positive denominator. Throws std::invalid_argument for
// n > kSubmodularityRatioMaxN.
SubmodularityReport SubmodularityRatio(const ObjectiveOracle& oracle, int n);

struct ApproximationCheck {
  double opt_value = 0.0;
  double alpha = 1.0;
  double bound_factor = 0.0;  // every solution must reach factor * OPT
  double min_ratio = 1.0;     // min f(P_i) / OPT observed
  std::int64_t solutions_checked = 0;
  std::int64_t violations = 0;

  bool passed() const { return violations == 0; }
};

// Runs DGS `trials` times and checks every sampled solution against
//   f(P_i) >= (1 - (1 - alpha/B)^(B - m)) * f(OPT).
// alpha defaults to 1 for certified-submodular objectives and is
// enumerated otherwise (n <= kSubmodularityRatioMaxN).
ApproximationCheck CheckDgsApproximation(
    const ObjectiveOracle& oracle, const CostModel& model, int trials,
    std::uint64_t seed, std::optional<double> alpha = std::nullopt);

// Finite-n check for GDGS on submodular objectives:
//   f(T) >= 1/2 (1 - (1 - (B - m) / ((L + 1) B))^(L + 1)) * f(OPT)
// with L the size of the greedy set. Sampled solutions are checked
// against the same factor.
ApproximationCheck CheckGdgsApproximation(const ObjectiveOracle& oracle,
                                          const CostModel& model, int trials,
                                          std::uint64_t seed);

struct CountCheck {
  double threshold = 0.0;  // quality level of the greedy core
  BigInt enumerated_count;
  BigInt bound;
  bool vacuous = false;  // bound is 0 or its preconditions do not hold
  bool passed() const { return vacuous || enumerated_count >= bound; }
};

// Counts feasible solutions at least as good as the DGS core and compares
// with sum_{i=0}^{m} C(n - B + m, i).
CountCheck CheckDgsSolutionCount(const ObjectiveOracle& oracle,
                                 const CostModel& model);

// Counts feasible solutions at least as good as the GDGS core T and
// compares with sum_{i=1}^{floor(m/c_max)} C(n - floor((B-m)/c_min), i).
CountCheck CheckGdgsSolutionCount(const ObjectiveOracle& oracle,
                                  const CostModel& model);

}  // namespace divsub

#endif  // DIVSUB_ORACLE_H_
