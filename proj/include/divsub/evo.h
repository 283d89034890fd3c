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

// DIVEA: steady-state evolutionary diversity optimisation.
//
// Each iteration mutates one uniformly chosen solution with standard bit
// mutation. An offspring with f >= f_min and cost <= B joins the
// population, after which the solution whose removal leaves the highest
// entropy is dropped.

#ifndef DIVSUB_EVO_H_
#define DIVSUB_EVO_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "divsub/core.h"
#include "divsub/diversity.h"
#include "divsub/random.h"

namespace divsub {

struct DiveaConfig {
  std::int64_t t_max = 10000;
  // Per-element flip probability; 1/n when unset.
  std::optional<double> mutation_rate;
  double f_min = 0.0;
  std::uint64_t seed = 0;
  // Entropy trajectory sampling period (plus first and last iteration).
  std::int64_t log_interval = 100;
  // Re-verify counts, thresholds, budget and entropy monotonicity after
  // every iteration; throws InvariantViolation on failure.
  bool check_invariants = false;

  void Validate() const;
};

struct EntropySample {
  std::int64_t iteration;
  double entropy;
};

struct DiveaResult {
  Population population;
  double entropy = 0.0;
  std::vector<EntropySample> trajectory;
  std::int64_t iterations = 0;
  std::int64_t accepted = 0;
  // Last iteration at which the entropy strictly increased (0 if never).
  std::int64_t last_improvement = 0;
};

// Called after every iteration with (t, population, entropy, accepted).
using DiveaObserver =
    std::function<void(std::int64_t, const Population&, double, bool)>;

// Flips each of the n elements independently with probability `rate`.
Solution Mutate(const Solution& parent, int n, double rate, Rng& rng);

// Throws std::invalid_argument naming the first initial solution that
// misses f_min or the budget.
DiveaResult Divea(Population initial, const ObjectiveOracle& oracle,
                  const CostModel& model, const DiveaConfig& config,
                  const DiveaObserver& observer = nullptr);

// Survivor selection on a mu + 1 working population: index of the
// solution whose removal maximises entropy, ties to the largest index.
// `current` is the entropy of the working population measured with
// denominator mu. Returns {index, entropy after removal}.
std::pair<std::size_t, double> SelectForRemoval(const Population& working,
                                                const EntropyTracker& tracker,
                                                double current);

}  // namespace divsub

#endif  // DIVSUB_EVO_H_
