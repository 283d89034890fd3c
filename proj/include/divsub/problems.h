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

// Benchmark objectives: maximum coverage, influence spread under the
// independent cascade model, and OneMax; plus their cost models.

#ifndef DIVSUB_PROBLEMS_H_
#define DIVSUB_PROBLEMS_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "divsub/core.h"
#include "divsub/graph.h"

namespace divsub {

struct CoverageInstance {
  int universe_size = 0;
  // sets[i] is sorted; its cost in the knapsack setting is sets[i].size().
  std::vector<std::vector<Element>> sets;

  int num_sets() const { return static_cast<int>(sets.size()); }
  std::vector<double> SetCosts() const;
};

enum class CoverageRule {
  kHigherNumber,        // V_i = {i} + neighbours of i with a larger index
  kClosedNeighborhood,  // V_i = {i} + all neighbours of i
};

const char* CoverageRuleName(CoverageRule rule);
// Throws std::invalid_argument for unknown names.
CoverageRule ParseCoverageRule(const std::string& name);

CoverageInstance CoverageFromGraph(
    const Graph& g, CoverageRule rule = CoverageRule::kHigherNumber);

// |union of the chosen sets|, computed directly.
std::int64_t CoverageValue(const CoverageInstance& inst, const Solution& x);

class CoverageOracle : public ObjectiveOracle {
 public:
  explicit CoverageOracle(CoverageInstance inst);

  double Evaluate(std::span<const Element> members) const override;
  using ObjectiveOracle::Evaluate;
  int ground_size() const override { return instance_.num_sets(); }
  std::string name() const override { return "coverage"; }
  double value_step() const override { return 1.0; }
  bool certified_submodular() const override { return true; }

  const CoverageInstance& instance() const { return instance_; }

 private:
  CoverageInstance instance_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;  // num_sets x words_
};

struct CascadeParams {
  int samples = 100;                  // R
  double default_probability = 0.05;  // for arcs without their own p
  std::uint64_t evaluation_seed = 0;
  // Draw fresh live-edge graphs on every evaluation instead of reusing R
  // fixed ones. The objective is then noisy; only for variance studies.
  bool fresh_samples = false;
};

// Expected number of activated vertices under the independent cascade
// model, estimated as the mean reachable-set size over R live-edge graphs.
// With fixed samples the value is a deterministic function of the seeds.
class CascadeEvaluator : public ObjectiveOracle {
 public:
  CascadeEvaluator(std::shared_ptr<const Graph> graph, CascadeParams params);

  double Evaluate(std::span<const Element> members) const override;
  using ObjectiveOracle::Evaluate;
  int ground_size() const override { return graph_->num_vertices(); }
  std::string name() const override { return "influence"; }
  double value_step() const override { return 1.0 / params_.samples; }
  bool certified_submodular() const override { return !params_.fresh_samples; }

  const CascadeParams& params() const { return params_; }
  bool precomputed_reachability() const { return !reach_.empty(); }

 private:
  double ArcProbability(const Arc& a) const;
  std::vector<std::uint64_t> SampleLiveArcs(std::uint64_t seed) const;
  std::int64_t Reach(std::span<const Element> members,
                     std::span<const std::uint64_t> live) const;

  std::shared_ptr<const Graph> graph_;
  CascadeParams params_;
  std::size_t words_;                             // per vertex bitset
  std::vector<std::vector<std::uint64_t>> live_;  // R arc masks
  // reach_[r * n * words_ + v * words_ ...]: vertices reachable from v in
  // live-edge graph r. Empty when too large to precompute.
  std::vector<std::uint64_t> reach_;
  mutable std::atomic<std::uint64_t> fresh_calls_{0};
};

// Mean live-edge reachability, the spread estimator behind
// CascadeEvaluator.
double CascadeSpread(const CascadeEvaluator& eval, const Solution& x);

class OneMaxOracle : public ObjectiveOracle {
 public:
  explicit OneMaxOracle(int n);

  double Evaluate(std::span<const Element> members) const override {
    return static_cast<double>(members.size());
  }
  using ObjectiveOracle::Evaluate;
  int ground_size() const override { return n_; }
  std::string name() const override { return "onemax"; }
  double value_step() const override { return 1.0; }
  bool certified_submodular() const override { return true; }

 private:
  int n_;
};

inline std::int64_t OneMax(const Solution& x) {
  return static_cast<std::int64_t>(x.size());
}

// Knapsack model with c(v) = outdeg(v) + 1.
CostModel DegreeCostModel(const Graph& g, double budget, double margin);

// Knapsack model with c(V_i) = |V_i|.
CostModel CoverageCostModel(const CoverageInstance& inst, double budget,
                            double margin);

}  // namespace divsub

#endif  // DIVSUB_PROBLEMS_H_
