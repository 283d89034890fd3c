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

// Experiment harness: runs greedy sampling followed by DIVEA over a grid
// of (B, m, mu) cells and repetitions, and reports per-run records plus
// per-cell aggregates.

#ifndef DIVSUB_BENCH_H_
#define DIVSUB_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divsub/core.h"
#include "divsub/evo.h"
#include "divsub/graph.h"
#include "divsub/problems.h"

namespace divsub {

enum class ProblemKind { kCoverage, kInfluence, kOneMax };
enum class Algorithm { kDgs, kGdgs, kDivea };

const char* ProblemName(ProblemKind p);
const char* AlgorithmName(Algorithm a);
// Throws std::invalid_argument for unknown names.
ProblemKind ParseProblem(const std::string& name);
CostKind ParseConstraint(const std::string& name);

// The objective and cost data for one problem on one graph, shared
// read-only by all runs of a grid.
class BenchInstance {
 public:
  // OneMax uses only the vertex count; influence keeps `graph` for the
  // cascade evaluator.
  BenchInstance(ProblemKind problem, std::shared_ptr<const Graph> graph,
                const CascadeParams& cascade = {},
                CoverageRule rule = CoverageRule::kHigherNumber);

  ProblemKind problem() const { return problem_; }
  const ObjectiveOracle& oracle() const { return *oracle_; }
  int ground_size() const { return oracle_->ground_size(); }
  const Graph& graph() const { return *graph_; }

  // Uniform: |X|. Knapsack: |V_i| for coverage, outdeg + 1 for influence,
  // unit costs for OneMax.
  CostModel MakeCostModel(CostKind kind, double budget, double margin) const;

 private:
  ProblemKind problem_;
  std::shared_ptr<const Graph> graph_;
  std::optional<CoverageInstance> coverage_;
  std::unique_ptr<ObjectiveOracle> oracle_;
};

struct ExperimentGrid {
  ProblemKind problem = ProblemKind::kCoverage;
  CostKind constraint = CostKind::kUniform;
  std::vector<double> budgets;
  std::vector<double> margins;
  std::vector<int> population_sizes;
  int repetitions = 30;
  std::uint64_t base_seed = 0;
  // t_max, mutation rate and logging; f_min and seed are set per run.
  DiveaConfig divea;
  // Number of worker threads; 0 picks the hardware concurrency.
  int workers = 0;
  // Write 0 instead of measured wall time, for byte-stable output.
  bool record_timings = true;

  // Throws std::invalid_argument naming the first bad cell.
  void Validate() const;
};

struct RunRecord {
  ProblemKind problem;
  CostKind constraint;
  double budget;
  double margin;
  int mu;
  int repetition;
  std::uint64_t seed;
  Algorithm algorithm;
  double threshold;  // min_i f(P_i)
  double entropy;    // H(P) in bits
  std::int64_t accepted_iters;
  std::int64_t wall_time_ms;
  std::vector<std::string> flags;
};

// seed = Hash64(base_seed, problem, constraint, B, m, mu, repetition),
// with B and m entering as their IEEE-754 bit patterns.
std::uint64_t DeriveRunSeed(std::uint64_t base_seed, ProblemKind problem,
                            CostKind constraint, double budget, double margin,
                            int mu, int repetition);

// Seed of the DIVEA phase of a run, derived from the run seed.
std::uint64_t DiveaSeed(std::uint64_t run_seed);

// Seed of the fixed live-edge samples shared by all runs of a grid.
std::uint64_t CascadeEvaluationSeed(std::uint64_t base_seed);

struct CellSummary {
  ProblemKind problem;
  CostKind constraint;
  double budget;
  double margin;
  int mu;
  Algorithm algorithm;
  int runs = 0;
  double threshold_mean = 0.0;
  double threshold_std = 0.0;  // sample std (n - 1); 0 for one run
  double entropy_mean = 0.0;
  double entropy_std = 0.0;
  bool single_sample = false;
};

struct CheckTally {
  std::int64_t passed = 0;
  std::int64_t total = 0;
  void Add(bool ok) {
    ++total;
    if (ok) ++passed;
  }
};

struct GridChecks {
  CheckTally entropy_ceiling;  // greedy entropy <= DGS ceiling (DGS only)
  CheckTally budget;           // every solution within B
  CheckTally pairing;          // DIVEA min-f >= f_min, entropy >= greedy's
};

struct GridResult {
  std::vector<RunRecord> records;
  std::vector<CellSummary> cells;
  GridChecks checks;
  std::vector<std::string> warnings;
};

// Runs every cell and repetition. Records come out in grid order
// (B, m, mu, repetition), greedy record before its DIVEA record,
// independent of the number of workers. Progress lines go to `progress`
// when non-null.
GridResult RunGrid(const ExperimentGrid& grid, const BenchInstance& instance,
                   std::ostream* progress = nullptr);

// Groups by (problem, constraint, B, m, mu, algorithm) in first-seen
// order. Records with non-finite values are skipped; a group left empty is
// dropped with a warning.
std::vector<CellSummary> Aggregate(
    std::span<const RunRecord> records,
    std::vector<std::string>* warnings = nullptr);

// Header: problem,constraint,B,m,mu,seed,algorithm,threshold,entropy,
// accepted_iters,wall_time_ms,flags. Reals with 6 decimals; flags joined
// by ';'.
void WriteCsv(std::ostream& out, std::span<const RunRecord> records);

nlohmann::json SummaryJson(const GridResult& result);

// Human-readable table, means and stds rounded to 4 decimals.
std::string FormatSummaryTable(std::span<const CellSummary> cells);

}  // namespace divsub

#endif  // DIVSUB_BENCH_H_
