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

#include "divsub/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "divsub/random.h"

namespace divsub {
namespace {

// Values on the oracle's grid are compared as integers; real-valued ones
// with a relative tolerance.
class ValueComparator {
 public:
  explicit ValueComparator(double step) : step_(step) {}

  double Snap(double v) const {
    return step_ > 0.0 ? std::round(v / step_) : v;
  }
  bool AtLeast(double v, double threshold) const {
    if (step_ > 0.0) return Snap(v) >= Snap(threshold);
    return v >= threshold - 1e-9 * std::max(1.0, std::fabs(threshold));
  }

 private:
  double step_;
};

void CheckSize(int n, int cap, const char* what) {
  if (n > cap) {
    throw std::invalid_argument(std::string(what) +
                                " is limited to n <= " + std::to_string(cap) +
                                ", got n = " + std::to_string(n));
  }
}

double ResolveAlpha(const ObjectiveOracle& oracle,
                    std::optional<double> alpha) {
  if (alpha) return *alpha;
  if (oracle.certified_submodular()) return 1.0;
  return SubmodularityRatio(oracle, oracle.ground_size()).alpha;
}

void Accumulate(ApproximationCheck& check, double value) {
  ++check.solutions_checked;
  const double ratio = check.opt_value > 0.0 ? value / check.opt_value : 1.0;
  check.min_ratio = std::min(check.min_ratio, ratio);
  const double need = check.bound_factor * check.opt_value;
  // Guards rounding in the factor only; no slack beyond that.
  if (value < need - 1e-12 * std::max(1.0, check.opt_value)) {
    ++check.violations;
  }
}

}  // namespace

BruteForceResult BruteForceOpt(const ObjectiveOracle& oracle,
                               const CostModel& model,
                               std::optional<double> threshold) {
  const int n = oracle.ground_size();
  CheckSize(n, kBruteForceMaxN, "brute force");
  if (model.ground_size() != n) {
    throw std::invalid_argument("oracle and cost model disagree on n");
  }
  const ValueComparator cmp(oracle.value_step());

  BruteForceResult result;
  result.opt_value = -std::numeric_limits<double>::infinity();
  std::int64_t count = 0;
  std::vector<Element> members;
  members.reserve(static_cast<std::size_t>(n));

  // Recursive DFS: at depth i decide element i, exclude before include.
  auto visit = [&](auto&& self, int i, double cost) -> void {
    if (i == n) {
      const double v = oracle.Evaluate(std::span<const Element>(members));
      ++result.enumerated;
      if (v > result.opt_value) {
        result.opt_value = v;
        result.opt_witness = Solution(members);
      }
      if (threshold && cmp.AtLeast(v, *threshold)) ++count;
      return;
    }
    self(self, i + 1, cost);
    const double with = cost + model.ItemCost(static_cast<Element>(i));
    if (model.Fits(with, model.budget())) {
      members.push_back(static_cast<Element>(i));
      self(self, i + 1, with);
      members.pop_back();
    }
  };
  visit(visit, 0, 0.0);

  result.opt_witness.set_value(result.opt_value);
  result.opt_witness.set_cost(model.Cost(result.opt_witness));
  if (threshold) result.feasible_count_at_threshold = BigInt(count);
  return result;
}

SubmodularityReport SubmodularityRatio(const ObjectiveOracle& oracle, int n) {
  CheckSize(n, kSubmodularityRatioMaxN, "submodularity ratio");
  if (n < 1 || n != oracle.ground_size()) {
    throw std::invalid_argument("n must match the oracle's ground set");
  }
  const ValueComparator cmp(oracle.value_step());
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::vector<double> f(std::size_t{full} + 1);
  std::vector<Element> members;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    members.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) members.push_back(static_cast<Element>(i));
    }
    f[mask] = cmp.Snap(oracle.Evaluate(std::span<const Element>(members)));
  }

  auto to_solution = [n](std::uint32_t mask) {
    std::vector<Element> m;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) m.push_back(static_cast<Element>(i));
    }
    return Solution(std::move(m));
  };

  SubmodularityReport report;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_a = 0, best_b = 0;
  int best_v = -1;
  for (std::uint32_t b = 0; b <= full; ++b) {
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (b & bit) continue;
      const double den = f[b | bit] - f[b];
      // 0/0 pairs carry no constraint; x/0 with x > 0 is +inf.
      if (!(den > 0.0)) continue;
      for (std::uint32_t a = b;; a = (a - 1) & b) {
        const double num = f[a | bit] - f[a];
        const double ratio = num / den;
        ++report.pairs_examined;
        if (ratio < best) {
          best = ratio;
          best_a = a;
          best_b = b;
          best_v = v;
        }
        if (a == 0) break;
      }
    }
  }
  if (best_v >= 0) {
    report.alpha = best;
    report.witness_a = to_solution(best_a);
    report.witness_b = to_solution(best_b);
    report.witness_v = static_cast<Element>(best_v);
  }
  return report;
}

ApproximationCheck CheckDgsApproximation(const ObjectiveOracle& oracle,
                                         const CostModel& model, int trials,
                                         std::uint64_t seed,
                                         std::optional<double> alpha) {
  CheckSize(oracle.ground_size(), kApproximationCheckMaxN,
            "approximation check");
  if (model.kind() != CostKind::kUniform) {
    throw std::invalid_argument("DGS check needs a uniform cost model");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  ApproximationCheck check;
  check.alpha = ResolveAlpha(oracle, alpha);
  check.opt_value = BruteForceOpt(oracle, model).opt_value;
  const double budget = std::floor(model.budget());
  const double margin = std::floor(model.margin());
  check.bound_factor =
      1.0 - std::pow(1.0 - check.alpha / budget, budget - margin);

  const GreedyTrace trace = DgsCore(oracle, model);
  for (int t = 0; t < trials; ++t) {
    const Population pop = DgsSample(
        oracle, model, trace, 1, Hash64({seed, static_cast<std::uint64_t>(t)}));
    for (const Solution& s : pop.solutions()) Accumulate(check, *s.value());
  }
  return check;
}

ApproximationCheck CheckGdgsApproximation(const ObjectiveOracle& oracle,
                                          const CostModel& model, int trials,
                                          std::uint64_t seed) {
  CheckSize(oracle.ground_size(), kApproximationCheckMaxN,
            "approximation check");
  if (model.kind() != CostKind::kKnapsack) {
    throw std::invalid_argument("GDGS check needs a knapsack cost model");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  ApproximationCheck check;
  check.alpha = 1.0;
  check.opt_value = BruteForceOpt(oracle, model).opt_value;

  const GreedyTrace trace = GdgsCore(oracle, model);
  const double budget = model.budget();
  const double margin = model.margin();
  const double steps = static_cast<double>(trace.greedy_set.size()) + 1.0;
  check.bound_factor =
      0.5 * (1.0 - std::pow(1.0 - (budget - margin) / (steps * budget), steps));

  Accumulate(check, *trace.core.value());
  for (int t = 0; t < trials; ++t) {
    const Population pop = GdgsSample(
        oracle, model, trace, 1, Hash64({seed, static_cast<std::uint64_t>(t)}));
    for (const Solution& s : pop.solutions()) Accumulate(check, *s.value());
  }
  return check;
}

CountCheck CheckDgsSolutionCount(const ObjectiveOracle& oracle,
                                 const CostModel& model) {
  const int n = oracle.ground_size();
  const int budget = static_cast<int>(std::floor(model.budget()));
  const int margin = static_cast<int>(std::floor(model.margin()));
  const GreedyTrace trace = DgsCore(oracle, model);
  CountCheck check;
  check.threshold = *trace.core.value();
  if (budget > n) {
    check.vacuous = true;
    return check;
  }
  check.bound = DgsSolutionCountBound(n, budget, margin).total;
  check.enumerated_count = *BruteForceOpt(oracle, model, check.threshold)
                                .feasible_count_at_threshold;
  return check;
}

CountCheck CheckGdgsSolutionCount(const ObjectiveOracle& oracle,
                                  const CostModel& model) {
  const int n = oracle.ground_size();
  const GreedyTrace trace = GdgsCore(oracle, model);
  CountCheck check;
  check.threshold = *trace.core.value();
  const double core_limit =
      std::floor((model.budget() - model.margin()) / model.c_min());
  if (trace.degenerate() || core_limit > n) {
    check.vacuous = true;
    return check;
  }
  const GdgsCountBound bound = GdgsSolutionCountBound(
      n, model.budget(), model.margin(), model.c_min(), model.c_max());
  check.bound = bound.count;
  check.vacuous = bound.vacuous;
  check.enumerated_count = *BruteForceOpt(oracle, model, check.threshold)
                                .feasible_count_at_threshold;
  return check;
}

}  // namespace divsub
