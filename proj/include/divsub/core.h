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

// Shared vocabulary: ground sets, solutions, populations, objective
// oracles and cost models.

#ifndef DIVSUB_CORE_H_
#define DIVSUB_CORE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace divsub {

// Elements of the ground set are dense indices 0..n-1.
using Element = std::uint32_t;

// Raised when an internal invariant (counts, thresholds, budgets) is found
// broken. Distinct from std::invalid_argument, which signals bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  bool Contains(Element e) const { return e < static_cast<Element>(n_); }

 private:
  int n_;
};

// A subset of the ground set, stored as a sorted vector of distinct
// indices, with optional cached objective value and cost. Any mutation of
// the members drops both caches.
class Solution {
 public:
  Solution() = default;
  // Sorts `members`; throws std::invalid_argument on duplicates.
  explicit Solution(std::vector<Element> members);

  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(Element e) const;

  // Returns false if already present.
  bool Insert(Element e);
  // Returns false if absent.
  bool Erase(Element e);
  void Toggle(Element e);

  std::optional<double> value() const { return value_; }
  std::optional<double> cost() const { return cost_; }
  void set_value(double v) { value_ = v; }
  void set_cost(double c) { cost_ = c; }

  // Equality on members only; caches are ignored.
  friend bool operator==(const Solution& a, const Solution& b) {
    return a.members_ == b.members_;
  }

  std::string ToString() const;

 private:
  void Invalidate() {
    value_.reset();
    cost_.reset();
  }

  std::vector<Element> members_;
  std::optional<double> value_;
  std::optional<double> cost_;
};

// Ordered multiset of solutions over a ground set of size n, with
// per-element occurrence counts kept in sync on every insert/remove.
class Population {
 public:
  explicit Population(int n);

  int ground_size() const { return static_cast<int>(counts_.size()); }
  std::size_t size() const { return solutions_.size(); }
  bool empty() const { return solutions_.empty(); }

  const Solution& operator[](std::size_t i) const { return solutions_[i]; }
  std::span<const Solution> solutions() const { return solutions_; }
  std::span<const int> occurrence_counts() const { return counts_; }

  // Throws std::invalid_argument if a member is outside the ground set.
  void Add(Solution s);
  // Removes and returns solution i, preserving the order of the others.
  Solution Remove(std::size_t i);

  // Recounts occurrences from scratch and compares with the maintained
  // counts.
  bool CountsConsistent() const;

 private:
  std::vector<Solution> solutions_;
  std::vector<int> counts_;
};

// Evaluation interface for monotone set functions f: 2^V -> R+.
// Implementations are immutable after construction and safe to call from
// several threads at once.
class ObjectiveOracle {
 public:
  virtual ~ObjectiveOracle() = default;

  virtual double Evaluate(std::span<const Element> members) const = 0;
  double Evaluate(const Solution& s) const { return Evaluate(s.members()); }

  virtual int ground_size() const = 0;
  virtual std::string name() const = 0;

  // All values are exact multiples of this step (1 for integer-valued
  // objectives, 1/R for an R-sample mean). 0 means real-valued.
  virtual double value_step() const { return 0.0; }

  // True when the implementation is known to be submodular, so that the
  // submodularity ratio may be taken as 1 without enumeration.
  virtual bool certified_submodular() const { return false; }
};

// Evaluates and stores the value in the solution's cache if absent.
double EvaluateCached(const ObjectiveOracle& oracle, Solution& s);

// Adapter over an arbitrary callable. Used by tests and the Python module.
class FunctionOracle : public ObjectiveOracle {
 public:
  using Fn = std::function<double(std::span<const Element>)>;

  FunctionOracle(int n, Fn fn, std::string name = "function",
                 double value_step = 0.0, bool submodular = false);

  double Evaluate(std::span<const Element> members) const override {
    return fn_(members);
  }
  using ObjectiveOracle::Evaluate;
  int ground_size() const override { return n_; }
  std::string name() const override { return name_; }
  double value_step() const override { return value_step_; }
  bool certified_submodular() const override { return submodular_; }

 private:
  int n_;
  Fn fn_;
  std::string name_;
  double value_step_;
  bool submodular_;
};

enum class CostKind { kUniform, kKnapsack };

const char* CostKindName(CostKind kind);

// Uniform (|X|) or additive knapsack (sum of item costs) constraint with
// budget B and margin m <= B.
class CostModel {
 public:
  static CostModel Uniform(int n, double budget, double margin);
  // Throws std::invalid_argument unless every cost is > 0.
  static CostModel Knapsack(std::vector<double> item_costs, double budget,
                            double margin);

  CostKind kind() const { return kind_; }
  int ground_size() const { return n_; }
  double budget() const { return budget_; }
  double margin() const { return margin_; }
  // Empty for uniform models.
  std::span<const double> item_costs() const { return item_costs_; }
  double c_min() const { return c_min_; }
  double c_max() const { return c_max_; }
  // True when all item costs are integers, so comparisons are exact.
  bool integral() const { return integral_; }

  double ItemCost(Element e) const {
    return kind_ == CostKind::kUniform ? 1.0 : item_costs_[e];
  }
  double Cost(std::span<const Element> members) const;
  double Cost(const Solution& s) const { return Cost(s.members()); }

  // cost(x) <= budget - slack. slack must not exceed the budget.
  bool IsFeasible(const Solution& x, double slack = 0.0) const;
  bool IsFeasibleCost(double cost, double slack = 0.0) const;

  // total <= limit, exact for integral costs and with a 1e-9 relative
  // tolerance otherwise.
  bool Fits(double total, double limit) const;

  // Same costs, different budget/margin.
  CostModel WithBudget(double budget, double margin) const;

 private:
  CostModel() = default;
  void Validate() const;

  CostKind kind_ = CostKind::kUniform;
  int n_ = 0;
  std::vector<double> item_costs_;
  double budget_ = 0.0;
  double margin_ = 0.0;
  double c_min_ = 1.0;
  double c_max_ = 1.0;
  bool integral_ = true;
};

}  // namespace divsub

#endif  // DIVSUB_CORE_H_
