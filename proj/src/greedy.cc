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

#include "divsub/greedy.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>

#include "divsub/random.h"

namespace divsub {
namespace {

void CheckSamplerArgs(const ObjectiveOracle& oracle, const CostModel& model,
                      int mu) {
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  if (oracle.ground_size() != model.ground_size()) {
    throw std::invalid_argument("oracle and cost model disagree on n");
  }
}

// Sorted copy of `base` with `e` inserted; reuses `buffer`.
std::span<const Element> WithElement(std::span<const Element> base, Element e,
                                     std::vector<Element>& buffer) {
  buffer.assign(base.begin(), base.end());
  buffer.insert(std::lower_bound(buffer.begin(), buffer.end(), e), e);
  return buffer;
}

std::vector<Element> Complement(int n, const Solution& s) {
  std::vector<Element> rest;
  rest.reserve(static_cast<std::size_t>(n) - s.size());
  for (Element e = 0; e < static_cast<Element>(n); ++e) {
    if (!s.Contains(e)) rest.push_back(e);
  }
  return rest;
}

void FinishSample(const ObjectiveOracle& oracle, const CostModel& model,
                  const GreedyTrace& trace, double core_value, Solution& p) {
  const double value = oracle.Evaluate(p);
  const double cost = model.Cost(p);
  if (value < core_value) {
    throw InvariantViolation("sampled solution " + p.ToString() +
                             " is worse than its greedy core (objective not "
                             "monotone?)");
  }
  if (!model.IsFeasibleCost(cost) && !trace.degenerate()) {
    throw InvariantViolation("sampled solution " + p.ToString() +
                             " exceeds the budget");
  }
  p.set_value(value);
  p.set_cost(cost);
}

}  // namespace

GreedyTrace DgsCore(const ObjectiveOracle& oracle, const CostModel& model) {
  if (model.kind() != CostKind::kUniform) {
    throw std::invalid_argument("DGS requires a uniform cost model");
  }
  CheckSamplerArgs(oracle, model, 1);
  const int n = oracle.ground_size();
  const int budget = static_cast<int>(std::floor(model.budget()));
  const int margin = static_cast<int>(std::floor(model.margin()));

  GreedyTrace trace;
  if (n < budget) {
    trace.flags.push_back("n<B: solutions filled to n elements");
  }
  const int steps = std::min(budget - margin, n);

  Solution s;
  double current = oracle.Evaluate(s);
  std::vector<Element> remaining(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) remaining[i] = static_cast<Element>(i);
  std::vector<Element> probe;

  for (int step = 0; step < steps && !remaining.empty(); ++step) {
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const double v =
          oracle.Evaluate(WithElement(s.members(), remaining[i], probe));
      if (v > best_value) {  // strict: ties keep the lowest index
        best_value = v;
        best = i;
      }
    }
    trace.insertion_order.push_back({remaining[best], best_value - current});
    s.Insert(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    current = best_value;
  }
  s.set_value(current);
  s.set_cost(model.Cost(s));
  trace.greedy_set = s;
  trace.core = std::move(s);
  return trace;
}

Population DgsSample(const ObjectiveOracle& oracle, const CostModel& model,
                     const GreedyTrace& trace, int mu, std::uint64_t seed) {
  CheckSamplerArgs(oracle, model, mu);
  const int n = oracle.ground_size();
  const int budget = static_cast<int>(std::floor(model.budget()));
  const double core_value =
      trace.core.value() ? *trace.core.value() : oracle.Evaluate(trace.core);
  std::vector<Element> rest = Complement(n, trace.core);
  const std::size_t extra = std::min<std::size_t>(
      static_cast<std::size_t>(
          std::max(0, budget - static_cast<int>(trace.core.size()))),
      rest.size());

  Rng rng(seed);
  Population pop(n);
  for (int i = 0; i < mu; ++i) {
    rng.PartialShuffle(std::span<Element>(rest), extra);
    Solution p = trace.core;
    for (std::size_t k = 0; k < extra; ++k) p.Insert(rest[k]);
    FinishSample(oracle, model, trace, core_value, p);
    pop.Add(std::move(p));
  }
  return pop;
}

SamplerResult Dgs(const ObjectiveOracle& oracle, const CostModel& model, int mu,
                  std::uint64_t seed) {
  CheckSamplerArgs(oracle, model, mu);
  GreedyTrace trace = DgsCore(oracle, model);
  Population pop = DgsSample(oracle, model, trace, mu, seed);
  return {std::move(pop), std::move(trace)};
}

GreedyTrace GdgsCore(const ObjectiveOracle& oracle, const CostModel& model) {
  if (model.kind() != CostKind::kKnapsack) {
    throw std::invalid_argument("GDGS requires a knapsack cost model");
  }
  CheckSamplerArgs(oracle, model, 1);
  const int n = oracle.ground_size();
  const double inner_limit = model.budget() - model.margin();

  GreedyTrace trace;
  Solution s;
  double current = oracle.Evaluate(s);
  double cost = 0.0;
  std::vector<Element> candidates(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) candidates[i] = static_cast<Element>(i);
  std::vector<Element> probe;

  // An element that does not fit now never fits later (the core only
  // grows), and picking it would leave S unchanged; dropping such elements
  // up front selects exactly the same sequence of elements.
  while (true) {
    std::erase_if(candidates, [&](Element e) {
      return !model.Fits(cost + model.ItemCost(e), inner_limit);
    });
    if (candidates.empty()) break;
    std::size_t best = 0;
    double best_ratio = -1.0;
    double best_value = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Element e = candidates[i];
      const double v = oracle.Evaluate(WithElement(s.members(), e, probe));
      const double ratio = (v - current) / model.ItemCost(e);
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best_value = v;
        best = i;
      }
    }
    const Element chosen = candidates[best];
    trace.insertion_order.push_back({chosen, best_value - current});
    s.Insert(chosen);
    cost += model.ItemCost(chosen);
    current = best_value;
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  s.set_value(current);
  s.set_cost(model.Cost(s));
  trace.greedy_set = s;

  auto best_singleton = [&](double limit) -> std::optional<SingletonChoice> {
    std::optional<SingletonChoice> best;
    for (int i = 0; i < n; ++i) {
      const Element e = static_cast<Element>(i);
      if (!model.Fits(model.ItemCost(e), limit)) continue;
      const Element single[] = {e};
      const double v = oracle.Evaluate(std::span<const Element>(single));
      if (!best || v > best->value) best = SingletonChoice{e, v};
    }
    return best;
  };

  trace.best_singleton = best_singleton(inner_limit);
  if (!trace.best_singleton) {
    trace.flags.push_back(
        "no element fits B-m: core is the best singleton "
        "under B");
    trace.best_singleton = best_singleton(model.budget());
    if (!trace.best_singleton) {
      trace.flags.push_back("no element fits B: empty solutions");
    }
  }

  if (trace.best_singleton && trace.best_singleton->value > current) {
    Solution t({trace.best_singleton->element});
    t.set_value(trace.best_singleton->value);
    t.set_cost(model.Cost(t));
    trace.core = std::move(t);
  } else {
    trace.core = s;
  }
  return trace;
}

Population GdgsSample(const ObjectiveOracle& oracle, const CostModel& model,
                      const GreedyTrace& trace, int mu, std::uint64_t seed) {
  CheckSamplerArgs(oracle, model, mu);
  const int n = oracle.ground_size();
  const double core_value =
      trace.core.value() ? *trace.core.value() : oracle.Evaluate(trace.core);
  const double core_cost = model.Cost(trace.core);
  std::vector<Element> rest = Complement(n, trace.core);

  Rng rng(seed);
  Population pop(n);
  for (int i = 0; i < mu; ++i) {
    rng.Shuffle(std::span<Element>(rest));
    Solution p = trace.core;
    double cost = core_cost;
    for (Element e : rest) {
      if (model.Fits(cost + model.ItemCost(e), model.budget())) {
        p.Insert(e);
        cost += model.ItemCost(e);
      }
    }
    FinishSample(oracle, model, trace, core_value, p);
    pop.Add(std::move(p));
  }
  return pop;
}

SamplerResult Gdgs(const ObjectiveOracle& oracle, const CostModel& model,
                   int mu, std::uint64_t seed) {
  CheckSamplerArgs(oracle, model, mu);
  GreedyTrace trace = GdgsCore(oracle, model);
  Population pop = GdgsSample(oracle, model, trace, mu, seed);
  return {std::move(pop), std::move(trace)};
}

SamplerResult DiversifyingGreedySample(const ObjectiveOracle& oracle,
                                       const CostModel& model, int mu,
                                       std::uint64_t seed) {
  return model.kind() == CostKind::kUniform ? Dgs(oracle, model, mu, seed)
                                            : Gdgs(oracle, model, mu, seed);
}

BigInt Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

DgsCountBound DgsSolutionCountBound(int n, int budget, int margin) {
  if (margin < 0 || margin > budget || budget > n) {
    throw std::invalid_argument("count bound needs 0 <= m <= B <= n");
  }
  const std::int64_t pool = static_cast<std::int64_t>(n) - budget + margin;
  DgsCountBound bound{0, Binomial(pool, margin)};
  for (int i = 0; i <= margin; ++i) bound.total += Binomial(pool, i);
  return bound;
}

GdgsCountBound GdgsSolutionCountBound(int n, double budget, double margin,
                                      double c_min, double c_max) {
  if (!(c_min > 0.0) || c_min > c_max) {
    throw std::invalid_argument("count bound needs 0 < c_min <= c_max");
  }
  if (margin < 0.0 || margin > budget) {
    throw std::invalid_argument("count bound needs 0 <= m <= B");
  }
  const auto extra = static_cast<std::int64_t>(std::floor(margin / c_max));
  const auto core_size =
      static_cast<std::int64_t>(std::floor((budget - margin) / c_min));
  if (core_size > n) {
    throw std::invalid_argument("count bound needs floor((B-m)/c_min) <= n");
  }
  GdgsCountBound bound{0, extra == 0};
  for (std::int64_t i = 1; i <= extra; ++i) {
    bound.count += Binomial(n - core_size, i);
  }
  return bound;
}

}  // namespace divsub
