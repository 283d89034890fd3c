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

#include "divsub/evo.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>

namespace divsub {
namespace {

constexpr double kEntropySlack = 1e-9;

void CheckPopulation(const Population& pop, std::size_t mu,
                     const CostModel& model, double f_min, double entropy,
                     double previous, std::int64_t t) {
  const std::string at = " at iteration " + std::to_string(t);
  if (pop.size() != mu)
    throw InvariantViolation("population size changed" + at);
  if (!pop.CountsConsistent()) {
    throw InvariantViolation("occurrence counts out of sync" + at);
  }
  for (const Solution& s : pop.solutions()) {
    if (!s.value() || *s.value() < f_min) {
      throw InvariantViolation("solution below f_min" + at);
    }
    if (!model.IsFeasible(s)) throw InvariantViolation("budget exceeded" + at);
  }
  if (std::fabs(Entropy(pop) - entropy) > kEntropySlack) {
    throw InvariantViolation("incremental entropy drifted" + at);
  }
  if (entropy < previous - kEntropySlack) {
    throw InvariantViolation("entropy decreased" + at);
  }
}

}  // namespace

void DiveaConfig::Validate() const {
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  if (mutation_rate && !(*mutation_rate > 0.0 && *mutation_rate <= 1.0)) {
    throw std::invalid_argument("mutation rate must be in (0, 1]");
  }
  if (!(f_min >= 0.0)) throw std::invalid_argument("f_min must be >= 0");
  if (log_interval < 1)
    throw std::invalid_argument("log_interval must be >= 1");
}

Solution Mutate(const Solution& parent, int n, double rate, Rng& rng) {
  // Flip positions are drawn by geometric skips: one draw per flip instead
  // of one per element.
  std::vector<Element> flips;
  const auto size = static_cast<std::uint64_t>(n);
  std::uint64_t pos = rng.Geometric(rate);
  while (pos < size) {
    flips.push_back(static_cast<Element>(pos));
    const std::uint64_t skip = rng.Geometric(rate);
    if (skip >= size - pos - 1) break;
    pos += skip + 1;
  }
  const auto old = parent.members();
  std::vector<Element> members;
  members.reserve(old.size() + flips.size());
  std::set_symmetric_difference(old.begin(), old.end(), flips.begin(),
                                flips.end(), std::back_inserter(members));
  return Solution(std::move(members));
}

std::pair<std::size_t, double> SelectForRemoval(const Population& working,
                                                const EntropyTracker& tracker,
                                                double current) {
  const auto counts = working.occurrence_counts();
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t j = 0; j < working.size(); ++j) {
    const double h = current + tracker.RemovalDelta(counts, working[j]);
    if (h >= best_value) {  // ties go to the newest solution
      best_value = h;
      best = j;
    }
  }
  return {best, best_value};
}

DiveaResult Divea(Population initial, const ObjectiveOracle& oracle,
                  const CostModel& model, const DiveaConfig& config,
                  const DiveaObserver& observer) {
  config.Validate();
  if (initial.empty()) throw std::invalid_argument("empty initial population");
  const int n = oracle.ground_size();
  if (initial.ground_size() != n || model.ground_size() != n) {
    throw std::invalid_argument("population, oracle and model disagree on n");
  }
  const double rate = config.mutation_rate.value_or(1.0 / n);

  DiveaResult result{std::move(initial), 0.0, {}, 0, 0, 0};
  Population& pop = result.population;
  const std::size_t mu = pop.size();

  // Validate the start and fill the caches.
  {
    Population checked(n);
    for (std::size_t i = 0; i < mu; ++i) {
      Solution s = pop[i];
      EvaluateCached(oracle, s);
      if (!s.cost()) s.set_cost(model.Cost(s));
      if (*s.value() < config.f_min) {
        throw std::invalid_argument(
            "initial solution " + std::to_string(i) + " " + s.ToString() +
            " has f = " + std::to_string(*s.value()) + " < f_min");
      }
      if (!model.IsFeasibleCost(*s.cost())) {
        throw std::invalid_argument("initial solution " + std::to_string(i) +
                                    " " + s.ToString() + " exceeds the budget");
      }
      checked.Add(std::move(s));
    }
    pop = std::move(checked);
  }

  EntropyTracker tracker(pop);
  double entropy = tracker.value();
  result.trajectory.push_back({0, entropy});
  Rng rng(config.seed);

  for (std::int64_t t = 1; t <= config.t_max; ++t) {
    const std::size_t parent = rng.UniformIndex(mu);
    Solution child = Mutate(pop[parent], n, rate, rng);

    bool accepted = false;
    const double cost = model.Cost(child);
    if (model.IsFeasibleCost(cost)) {
      const double value = oracle.Evaluate(child);
      if (value >= config.f_min) {
        child.set_value(value);
        child.set_cost(cost);
        accepted = true;
      }
    }

    const double previous = entropy;
    if (accepted) {
      ++result.accepted;
      const double working =
          entropy + tracker.AdditionDelta(pop.occurrence_counts(), child);
      pop.Add(std::move(child));
      const auto [victim, after] = SelectForRemoval(pop, tracker, working);
      pop.Remove(victim);
      tracker.Commit(after, pop);
      entropy = tracker.value();
      if (entropy > previous + kEntropySlack) result.last_improvement = t;
    }

    if (config.check_invariants) {
      CheckPopulation(pop, mu, model, config.f_min, entropy, previous, t);
    }
    if (observer) observer(t, pop, entropy, accepted);
    if (t % config.log_interval == 0 || t == config.t_max) {
      result.trajectory.push_back({t, entropy});
    }
  }
  result.iterations = config.t_max;
  result.entropy = entropy;
  return result;
}

}  // namespace divsub
