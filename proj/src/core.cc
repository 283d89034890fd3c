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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace divsub {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set must be non-empty");
}

Solution::Solution(std::vector<Element> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("solution has duplicate members");
  }
}

bool Solution::Contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool Solution::Insert(Element e) {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it != members_.end() && *it == e) return false;
  members_.insert(it, e);
  Invalidate();
  return true;
}

bool Solution::Erase(Element e) {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || *it != e) return false;
  members_.erase(it);
  Invalidate();
  return true;
}

void Solution::Toggle(Element e) {
  if (!Erase(e)) Insert(e);
}

std::string Solution::ToString() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

Population::Population(int n) : counts_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("ground set must be non-empty");
}

void Population::Add(Solution s) {
  for (Element e : s.members()) {
    if (e >= counts_.size()) {
      throw std::invalid_argument("solution member " + std::to_string(e) +
                                  " outside ground set");
    }
  }
  for (Element e : s.members()) ++counts_[e];
  solutions_.push_back(std::move(s));
}

Solution Population::Remove(std::size_t i) {
  if (i >= solutions_.size()) {
    throw std::out_of_range("population index out of range");
  }
  Solution removed = std::move(solutions_[i]);
  solutions_.erase(solutions_.begin() + static_cast<std::ptrdiff_t>(i));
  for (Element e : removed.members()) --counts_[e];
  return removed;
}

bool Population::CountsConsistent() const {
  std::vector<int> recount(counts_.size(), 0);
  for (const Solution& s : solutions_) {
    for (Element e : s.members()) ++recount[e];
  }
  return recount == counts_;
}

double EvaluateCached(const ObjectiveOracle& oracle, Solution& s) {
  if (!s.value()) s.set_value(oracle.Evaluate(s));
  return *s.value();
}

FunctionOracle::FunctionOracle(int n, Fn fn, std::string name,
                               double value_step, bool submodular)
    : n_(n),
      fn_(std::move(fn)),
      name_(std::move(name)),
      value_step_(value_step),
      submodular_(submodular) {
  if (n < 1) throw std::invalid_argument("ground set must be non-empty");
  if (!fn_) throw std::invalid_argument("objective callable is empty");
}

const char* CostKindName(CostKind kind) {
  return kind == CostKind::kUniform ? "uniform" : "knapsack";
}

CostModel CostModel::Uniform(int n, double budget, double margin) {
  CostModel model;
  model.kind_ = CostKind::kUniform;
  model.n_ = n;
  model.budget_ = budget;
  model.margin_ = margin;
  model.integral_ = true;
  model.Validate();
  return model;
}

CostModel CostModel::Knapsack(std::vector<double> item_costs, double budget,
                              double margin) {
  if (item_costs.empty()) {
    throw std::invalid_argument("knapsack model needs at least one item");
  }
  CostModel model;
  model.kind_ = CostKind::kKnapsack;
  model.n_ = static_cast<int>(item_costs.size());
  model.budget_ = budget;
  model.margin_ = margin;
  model.integral_ = true;
  for (double c : item_costs) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("item costs must be positive and finite");
    }
    if (c != std::floor(c)) model.integral_ = false;
  }
  const auto [lo, hi] =
      std::minmax_element(item_costs.begin(), item_costs.end());
  model.c_min_ = *lo;
  model.c_max_ = *hi;
  model.item_costs_ = std::move(item_costs);
  model.Validate();
  return model;
}

void CostModel::Validate() const {
  if (n_ < 1) throw std::invalid_argument("ground set must be non-empty");
  if (!(budget_ > 0.0)) throw std::invalid_argument("budget must be > 0");
  if (!(margin_ >= 0.0)) throw std::invalid_argument("margin must be >= 0");
  if (margin_ > budget_) {
    throw std::invalid_argument("margin must not exceed the budget");
  }
}

CostModel CostModel::WithBudget(double budget, double margin) const {
  CostModel copy = *this;
  copy.budget_ = budget;
  copy.margin_ = margin;
  copy.Validate();
  return copy;
}

double CostModel::Cost(std::span<const Element> members) const {
  if (kind_ == CostKind::kUniform) return static_cast<double>(members.size());
  double total = 0.0;
  for (Element e : members) total += item_costs_[e];
  return total;
}

bool CostModel::Fits(double total, double limit) const {
  if (integral_) return total <= limit;
  return total <= limit + 1e-9 * std::max(1.0, std::fabs(limit));
}

bool CostModel::IsFeasibleCost(double cost, double slack) const {
  return Fits(cost, budget_ - slack);
}

bool CostModel::IsFeasible(const Solution& x, double slack) const {
  return IsFeasibleCost(x.cost() ? *x.cost() : Cost(x), slack);
}

}  // namespace divsub
