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

#include "divsub/bench.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "divsub/diversity.h"
#include "divsub/greedy.h"
#include "divsub/random.h"

namespace divsub {
namespace {

constexpr double kCheckSlack = 1e-9;
// Domain separators for derived seeds.
constexpr std::uint64_t kDiveaStream = 0xd1fea;
constexpr std::uint64_t kCascadeStream = 0xca5cade;

std::string FormatReal(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

// Grid coordinates print as integers when they are integral.
std::string FormatCoord(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  return FormatReal(v);
}

double MinValue(const Population& pop) {
  double lo = INFINITY;
  for (const Solution& s : pop.solutions()) lo = std::min(lo, *s.value());
  return lo;
}

struct Cell {
  double budget;
  double margin;
  int mu;
};

struct Task {
  std::size_t cell;
  int repetition;
};

struct TaskOutput {
  RunRecord greedy;
  RunRecord divea;
  bool ceiling_checked = false;
  bool ceiling_ok = true;
  bool budget_ok = true;
  bool pairing_ok = true;
};

std::int64_t ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

const char* ProblemName(ProblemKind p) {
  switch (p) {
    case ProblemKind::kCoverage:
      return "coverage";
    case ProblemKind::kInfluence:
      return "influence";
    case ProblemKind::kOneMax:
      return "onemax";
  }
  return "unknown";
}

const char* AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kDgs:
      return "DGS";
    case Algorithm::kGdgs:
      return "GDGS";
    case Algorithm::kDivea:
      return "DIVEA";
  }
  return "unknown";
}

ProblemKind ParseProblem(const std::string& name) {
  if (name == "coverage") return ProblemKind::kCoverage;
  if (name == "influence") return ProblemKind::kInfluence;
  if (name == "onemax") return ProblemKind::kOneMax;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

CostKind ParseConstraint(const std::string& name) {
  if (name == "uniform") return CostKind::kUniform;
  if (name == "knapsack") return CostKind::kKnapsack;
  throw std::invalid_argument("unknown constraint '" + name + "'");
}

BenchInstance::BenchInstance(ProblemKind problem,
                             std::shared_ptr<const Graph> graph,
                             const CascadeParams& cascade, CoverageRule rule)
    : problem_(problem), graph_(std::move(graph)) {
  if (!graph_) throw std::invalid_argument("bench instance needs a graph");
  switch (problem_) {
    case ProblemKind::kCoverage:
      coverage_ = CoverageFromGraph(*graph_, rule);
      oracle_ = std::make_unique<CoverageOracle>(*coverage_);
      break;
    case ProblemKind::kInfluence:
      oracle_ = std::make_unique<CascadeEvaluator>(graph_, cascade);
      break;
    case ProblemKind::kOneMax:
      oracle_ = std::make_unique<OneMaxOracle>(graph_->num_vertices());
      break;
  }
}

CostModel BenchInstance::MakeCostModel(CostKind kind, double budget,
                                       double margin) const {
  if (kind == CostKind::kUniform) {
    return CostModel::Uniform(ground_size(), budget, margin);
  }
  switch (problem_) {
    case ProblemKind::kCoverage:
      return CoverageCostModel(*coverage_, budget, margin);
    case ProblemKind::kInfluence:
      return DegreeCostModel(*graph_, budget, margin);
    case ProblemKind::kOneMax:
      break;
  }
  return CostModel::Knapsack(
      std::vector<double>(static_cast<std::size_t>(ground_size()), 1.0), budget,
      margin);
}

void ExperimentGrid::Validate() const {
  if (budgets.empty() || margins.empty() || population_sizes.empty()) {
    throw std::invalid_argument("grid needs at least one B, m and mu");
  }
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  for (double b : budgets) {
    for (double m : margins) {
      if (!(b > 0.0) || !(m >= 0.0) || m > b) {
        throw std::invalid_argument("invalid grid cell B=" + FormatCoord(b) +
                                    " m=" + FormatCoord(m) +
                                    ": need 0 <= m <= B, B > 0");
      }
    }
  }
  for (int mu : population_sizes) {
    if (mu < 1) {
      throw std::invalid_argument("invalid grid cell mu=" + std::to_string(mu));
    }
  }
  divea.Validate();
}

std::uint64_t DeriveRunSeed(std::uint64_t base_seed, ProblemKind problem,
                            CostKind constraint, double budget, double margin,
                            int mu, int repetition) {
  return Hash64({base_seed, static_cast<std::uint64_t>(problem),
                 static_cast<std::uint64_t>(constraint),
                 std::bit_cast<std::uint64_t>(budget),
                 std::bit_cast<std::uint64_t>(margin),
                 static_cast<std::uint64_t>(mu),
                 static_cast<std::uint64_t>(repetition)});
}

std::uint64_t DiveaSeed(std::uint64_t run_seed) {
  return Hash64({run_seed, kDiveaStream});
}

std::uint64_t CascadeEvaluationSeed(std::uint64_t base_seed) {
  return Hash64({base_seed, kCascadeStream});
}

GridResult RunGrid(const ExperimentGrid& grid, const BenchInstance& instance,
                   std::ostream* progress) {
  grid.Validate();
  const int n = instance.ground_size();
  const ObjectiveOracle& oracle = instance.oracle();

  std::vector<Cell> cells;
  for (double b : grid.budgets) {
    for (double m : grid.margins) {
      for (int mu : grid.population_sizes) cells.push_back({b, m, mu});
    }
  }

  // The greedy phase does not depend on the seed; compute it once per
  // (B, m).
  std::map<std::pair<double, double>, GreedyTrace> cores;
  for (double b : grid.budgets) {
    for (double m : grid.margins) {
      const CostModel model = instance.MakeCostModel(grid.constraint, b, m);
      cores.emplace(std::pair(b, m), grid.constraint == CostKind::kUniform
                                         ? DgsCore(oracle, model)
                                         : GdgsCore(oracle, model));
    }
  }

  std::vector<Task> tasks;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int r = 0; r < grid.repetitions; ++r) tasks.push_back({c, r});
  }
  std::vector<TaskOutput> outputs(tasks.size());

  const Algorithm greedy_algo = grid.constraint == CostKind::kUniform
                                    ? Algorithm::kDgs
                                    : Algorithm::kGdgs;

  auto run_task = [&](std::size_t index) {
    const Task& task = tasks[index];
    const Cell& cell = cells[task.cell];
    const CostModel model =
        instance.MakeCostModel(grid.constraint, cell.budget, cell.margin);
    const GreedyTrace& trace = cores.at(std::pair(cell.budget, cell.margin));
    const std::uint64_t seed =
        DeriveRunSeed(grid.base_seed, grid.problem, grid.constraint,
                      cell.budget, cell.margin, cell.mu, task.repetition);

    TaskOutput& out = outputs[index];
    RunRecord base{grid.problem,
                   grid.constraint,
                   cell.budget,
                   cell.margin,
                   cell.mu,
                   task.repetition,
                   seed,
                   greedy_algo,
                   0.0,
                   0.0,
                   0,
                   0,
                   {}};
    if (trace.degenerate()) base.flags.push_back("degenerate");

    auto start = std::chrono::steady_clock::now();
    Population pop = greedy_algo == Algorithm::kDgs
                         ? DgsSample(oracle, model, trace, cell.mu, seed)
                         : GdgsSample(oracle, model, trace, cell.mu, seed);
    out.greedy = base;
    out.greedy.threshold = MinValue(pop);
    out.greedy.entropy = Entropy(pop);
    out.greedy.wall_time_ms = grid.record_timings ? ElapsedMs(start) : 0;

    for (const Solution& s : pop.solutions()) {
      out.budget_ok = out.budget_ok && model.IsFeasible(s);
    }
    if (greedy_algo == Algorithm::kDgs && cell.budget <= n) {
      out.ceiling_checked = true;
      out.ceiling_ok =
          out.greedy.entropy <= DgsEntropyUpperBound(n, std::floor(cell.budget),
                                                     std::floor(cell.margin)) +
                                    kCheckSlack;
      if (!out.ceiling_ok)
        out.greedy.flags.push_back("entropy_ceiling_violated");
    }

    DiveaConfig config = grid.divea;
    config.f_min = out.greedy.threshold;
    config.seed = DiveaSeed(seed);
    start = std::chrono::steady_clock::now();
    DiveaResult evo = Divea(std::move(pop), oracle, model, config);
    out.divea = base;
    out.divea.algorithm = Algorithm::kDivea;
    out.divea.threshold = MinValue(evo.population);
    out.divea.entropy = evo.entropy;
    out.divea.accepted_iters = evo.accepted;
    out.divea.wall_time_ms = grid.record_timings ? ElapsedMs(start) : 0;

    for (const Solution& s : evo.population.solutions()) {
      out.budget_ok = out.budget_ok && model.IsFeasible(s);
    }
    out.pairing_ok = out.divea.threshold >= out.greedy.threshold &&
                     out.divea.entropy >= out.greedy.entropy - kCheckSlack;
    if (!out.pairing_ok) out.divea.flags.push_back("pairing_violated");
    if (!out.budget_ok) out.divea.flags.push_back("budget_violated");
  };

  int workers = grid.workers > 0
                    ? grid.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, static_cast<int>(tasks.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex error_mu;
  std::exception_ptr error;
  std::mutex progress_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      {
        std::lock_guard<std::mutex> lock(error_mu);
        if (error) return;
      }
      try {
        run_task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        const Cell& c = cells[tasks[i].cell];
        *progress << "[" << finished << "/" << tasks.size() << "] "
                  << ProblemName(grid.problem) << ' '
                  << CostKindName(grid.constraint)
                  << " B=" << FormatCoord(c.budget)
                  << " m=" << FormatCoord(c.margin) << " mu=" << c.mu
                  << " rep=" << tasks[i].repetition << '\n';
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  GridResult result;
  for (TaskOutput& out : outputs) {
    if (out.ceiling_checked) result.checks.entropy_ceiling.Add(out.ceiling_ok);
    result.checks.budget.Add(out.budget_ok);
    result.checks.pairing.Add(out.pairing_ok);
    result.records.push_back(std::move(out.greedy));
    result.records.push_back(std::move(out.divea));
  }
  result.cells = Aggregate(result.records, &result.warnings);
  return result;
}

std::vector<CellSummary> Aggregate(std::span<const RunRecord> records,
                                   std::vector<std::string>* warnings) {
  using Key = std::tuple<int, int, double, double, int, int>;
  std::map<Key, std::size_t> index;
  std::vector<CellSummary> cells;
  std::vector<std::vector<double>> thresholds, entropies;
  for (const RunRecord& r : records) {
    const Key key{static_cast<int>(r.problem),
                  static_cast<int>(r.constraint),
                  r.budget,
                  r.margin,
                  r.mu,
                  static_cast<int>(r.algorithm)};
    auto [it, inserted] = index.emplace(key, cells.size());
    if (inserted) {
      cells.push_back(
          {r.problem, r.constraint, r.budget, r.margin, r.mu, r.algorithm});
      thresholds.emplace_back();
      entropies.emplace_back();
    }
    if (!std::isfinite(r.threshold) || !std::isfinite(r.entropy)) continue;
    thresholds[it->second].push_back(r.threshold);
    entropies[it->second].push_back(r.entropy);
  }

  auto mean_std = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return std::pair(mean, 0.0);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::pair(mean, std::sqrt(ss / static_cast<double>(xs.size() - 1)));
  };

  std::vector<CellSummary> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellSummary cell = cells[i];
    if (thresholds[i].empty()) {
      if (warnings) {
        warnings->push_back(std::string("no usable records for ") +
                            ProblemName(cell.problem) +
                            " B=" + FormatCoord(cell.budget) +
                            " m=" + FormatCoord(cell.margin) +
                            " mu=" + std::to_string(cell.mu) + " " +
                            AlgorithmName(cell.algorithm));
      }
      continue;
    }
    cell.runs = static_cast<int>(thresholds[i].size());
    std::tie(cell.threshold_mean, cell.threshold_std) = mean_std(thresholds[i]);
    std::tie(cell.entropy_mean, cell.entropy_std) = mean_std(entropies[i]);
    cell.single_sample = cell.runs == 1;
    out.push_back(cell);
  }
  return out;
}

void WriteCsv(std::ostream& out, std::span<const RunRecord> records) {
  out << "problem,constraint,B,m,mu,seed,algorithm,threshold,entropy,"
         "accepted_iters,wall_time_ms,flags\n";
  for (const RunRecord& r : records) {
    out << ProblemName(r.problem) << ',' << CostKindName(r.constraint) << ','
        << FormatCoord(r.budget) << ',' << FormatCoord(r.margin) << ',' << r.mu
        << ',' << r.seed << ',' << AlgorithmName(r.algorithm) << ','
        << FormatReal(r.threshold) << ',' << FormatReal(r.entropy) << ','
        << r.accepted_iters << ',' << r.wall_time_ms << ',';
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
      if (i) out << ';';
      out << r.flags[i];
    }
    out << '\n';
  }
}

nlohmann::json SummaryJson(const GridResult& result) {
  nlohmann::json cells = nlohmann::json::array();
  for (const CellSummary& c : result.cells) {
    cells.push_back({
        {"problem", ProblemName(c.problem)},
        {"constraint", CostKindName(c.constraint)},
        {"B", c.budget},
        {"m", c.margin},
        {"mu", c.mu},
        {"algorithm", AlgorithmName(c.algorithm)},
        {"runs", c.runs},
        {"threshold", {{"mean", c.threshold_mean}, {"std", c.threshold_std}}},
        {"entropy", {{"mean", c.entropy_mean}, {"std", c.entropy_std}}},
        {"single_sample", c.single_sample},
    });
  }
  auto tally = [](const CheckTally& t) {
    return nlohmann::json{{"passed", t.passed}, {"total", t.total}};
  };
  return {
      {"cells", cells},
      {"checks",
       {{"entropy_ceiling", tally(result.checks.entropy_ceiling)},
        {"budget", tally(result.checks.budget)},
        {"pairing", tally(result.checks.pairing)}}},
      {"warnings", result.warnings},
  };
}

std::string FormatSummaryTable(std::span<const CellSummary> cells) {
  std::ostringstream out;
  out << "problem    constraint  B      m      mu   algorithm  runs  "
         "threshold(mean/std)     entropy(mean/std)\n";
  for (const CellSummary& c : cells) {
    char line[256];
    std::snprintf(line, sizeof(line),
                  "%-10s %-11s %-6s %-6s %-4d %-10s %-5d %10.4f %8.4f   "
                  "%10.4f %8.4f%s\n",
                  ProblemName(c.problem), CostKindName(c.constraint),
                  FormatCoord(c.budget).c_str(), FormatCoord(c.margin).c_str(),
                  c.mu, AlgorithmName(c.algorithm), c.runs, c.threshold_mean,
                  c.threshold_std, c.entropy_mean, c.entropy_std,
                  c.single_sample ? "  (single sample)" : "");
    out << line;
  }
  return out.str();
}

}  // namespace divsub
