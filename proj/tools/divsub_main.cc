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

// divsub: diverse solutions for budget-constrained submodular problems.
//
//   divsub solve   --problem coverage --constraint uniform --B 10 --m 2
//                  --mu 5 --seed 1 graph.mis
//   divsub bench   --problem coverage --B 10,15 --m 2,5,8 --mu 5,10,15,20
//                  --csv runs.csv --json summary.json graph.mis
//   divsub oracle  --B 4 --m 1 data/adversarial12.txt
//   divsub inspect graph.mis
//   divsub generate --out surrogate.mis

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "divsub/bench.h"
#include "divsub/core.h"
#include "divsub/diversity.h"
#include "divsub/evo.h"
#include "divsub/graph.h"
#include "divsub/greedy.h"
#include "divsub/oracle.h"
#include "divsub/problems.h"

namespace divsub {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitBadInstance = 3;
constexpr int kExitInvariant = 4;

// Raised for argument combinations CLI11 cannot validate on its own.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the instance file is missing or malformed.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::string path;
  std::string format = "auto";
  std::string problem = "coverage";
  std::string constraint = "uniform";
  bool symmetrize = false;
  int samples = 100;
  double probability = 0.05;
  std::string coverage_rule = "higher";
};

struct SolveFlags {
  InstanceFlags instance;
  double budget = 10;
  double margin = 2;
  int mu = 5;
  std::uint64_t seed = 0;
  bool divea = false;
  std::int64_t t_max = 10000;
  std::string out;
};

struct BenchFlags {
  InstanceFlags instance;
  std::vector<double> budgets{10};
  std::vector<double> margins{2};
  std::vector<int> mus{5};
  int repetitions = 30;
  std::uint64_t seed = 0;
  std::int64_t t_max = 10000;
  int workers = 0;
  bool no_timings = false;
  bool quiet = false;
  std::string csv;
  std::string json;
};

struct OracleFlags {
  InstanceFlags instance;
  double budget = 4;
  double margin = 1;
  int trials = 20;
  std::uint64_t seed = 0;
};

struct GenerateFlags {
  ModelRbParams params;
  std::string out;
};

void AddInstanceFlags(CLI::App* cmd, InstanceFlags& f, bool with_problem) {
  cmd->add_option("instance", f.path, "Graph file (DIMACS or edge list)")
      ->required();
  cmd->add_option("--format", f.format, "auto | dimacs | edgelist")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
  cmd->add_flag("--symmetrize", f.symmetrize,
                "Add the reverse of every arc (influence)");
  if (!with_problem) return;
  cmd->add_option("--problem", f.problem, "coverage | influence | onemax")
      ->check(CLI::IsMember({"coverage", "influence", "onemax"}));
  cmd->add_option("--constraint", f.constraint, "uniform | knapsack")
      ->check(CLI::IsMember({"uniform", "knapsack"}));
  cmd->add_option("--R", f.samples, "Live-edge samples for influence")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--p", f.probability, "Default arc probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--coverage-rule", f.coverage_rule,
                  "Coverage sets: higher | closed")
      ->check(CLI::IsMember({"higher", "closed"}));
}

GraphFormat ToFormat(const std::string& name) {
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  return GraphFormat::kAuto;
}

std::shared_ptr<const Graph> LoadGraph(const InstanceFlags& f) {
  try {
    auto g = std::make_shared<Graph>(
        IngestGraph(f.path, ToFormat(f.format), f.symmetrize));
    for (const std::string& w : g->stats().warnings) {
      std::cerr << "warning: " << f.path << ": " << w << '\n';
    }
    return g;
  } catch (const GraphParseError& e) {
    if (e.line() == 0) throw InstanceError(e.what());
    throw InstanceError(f.path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InstanceError(f.path + ": " + e.what());
  }
}

BenchInstance MakeInstance(const InstanceFlags& f, std::uint64_t seed) {
  CascadeParams cascade;
  cascade.samples = f.samples;
  cascade.default_probability = f.probability;
  cascade.evaluation_seed = CascadeEvaluationSeed(seed);
  return BenchInstance(ParseProblem(f.problem), LoadGraph(f), cascade,
                       ParseCoverageRule(f.coverage_rule));
}

void CheckBudget(double budget, double margin) {
  if (!(budget > 0.0)) throw UsageError("--B must be > 0");
  if (!(margin >= 0.0) || margin > budget) {
    throw UsageError("--m must satisfy 0 <= m <= B");
  }
}

// Opens `path` for writing, or returns std::cout for an empty path.
class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double MinValue(const Population& pop) {
  double lo = INFINITY;
  for (const Solution& s : pop.solutions()) lo = std::min(lo, *s.value());
  return lo;
}

int RunSolve(const SolveFlags& f) {
  CheckBudget(f.budget, f.margin);
  if (f.mu < 1) throw UsageError("--mu must be >= 1");
  const CostKind constraint = ParseConstraint(f.instance.constraint);
  const BenchInstance instance = MakeInstance(f.instance, f.seed);
  const CostModel model =
      instance.MakeCostModel(constraint, f.budget, f.margin);
  const ObjectiveOracle& oracle = instance.oracle();

  const std::uint64_t run_seed = DeriveRunSeed(
      f.seed, instance.problem(), constraint, f.budget, f.margin, f.mu, 0);
  const bool uniform = constraint == CostKind::kUniform;
  const GreedyTrace trace =
      uniform ? DgsCore(oracle, model) : GdgsCore(oracle, model);
  Population pop = uniform ? DgsSample(oracle, model, trace, f.mu, run_seed)
                           : GdgsSample(oracle, model, trace, f.mu, run_seed);
  const double f_min = MinValue(pop);
  const double greedy_entropy = Entropy(pop);
  std::string algorithm = uniform ? "DGS" : "GDGS";

  std::int64_t accepted = 0;
  if (f.divea) {
    DiveaConfig config;
    config.t_max = f.t_max;
    config.f_min = f_min;
    config.seed = DiveaSeed(run_seed);
    DiveaResult result = Divea(std::move(pop), oracle, model, config);
    pop = std::move(result.population);
    accepted = result.accepted;
    algorithm += "+DIVEA";
  }
  const double entropy = Entropy(pop);

  OutputFile out(f.out);
  std::ostream& os = out.stream();
  os << "# problem " << ProblemName(instance.problem()) << " constraint "
     << CostKindName(constraint) << " B " << f.budget << " m " << f.margin
     << " mu " << f.mu << " seed " << f.seed << '\n';
  os << "# algorithm " << algorithm << '\n';
  os << "# labels 0-based (input label - "
     << instance.graph().stats().label_offset << ")\n";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# threshold %.6f\n# entropy %.6f\n", f_min,
                entropy);
  os << buf;
  for (const std::string& flag : trace.flags) os << "# flag " << flag << '\n';
  for (const Solution& s : pop.solutions()) {
    const auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) os << ' ';
      os << members[i];
    }
    os << '\n';
  }

  std::snprintf(
      buf, sizeof(buf), "%s: mu=%zu threshold=%.4f entropy=%.4f (greedy %.4f)",
      algorithm.c_str(), pop.size(), MinValue(pop), entropy, greedy_entropy);
  std::cerr << buf;
  if (f.divea) std::cerr << " accepted=" << accepted;
  std::cerr << '\n';
  return kExitOk;
}

int RunBench(const BenchFlags& f) {
  ExperimentGrid grid;
  grid.problem = ParseProblem(f.instance.problem);
  grid.constraint = ParseConstraint(f.instance.constraint);
  grid.budgets = f.budgets;
  grid.margins = f.margins;
  grid.population_sizes = f.mus;
  grid.repetitions = f.repetitions;
  grid.base_seed = f.seed;
  grid.divea.t_max = f.t_max;
  grid.workers = f.workers;
  grid.record_timings = !f.no_timings;
  try {
    grid.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const BenchInstance instance = MakeInstance(f.instance, f.seed);
  const GridResult result =
      RunGrid(grid, instance, f.quiet ? nullptr : &std::cerr);

  if (!f.csv.empty()) {
    OutputFile csv(f.csv == "-" ? "" : f.csv);
    WriteCsv(csv.stream(), result.records);
  }
  if (!f.json.empty()) {
    OutputFile json(f.json == "-" ? "" : f.json);
    json.stream() << SummaryJson(result).dump(2) << '\n';
  }
  std::cout << FormatSummaryTable(result.cells);
  for (const std::string& w : result.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  const GridChecks& c = result.checks;
  std::cout << "checks: entropy_ceiling " << c.entropy_ceiling.passed << '/'
            << c.entropy_ceiling.total << ", budget " << c.budget.passed << '/'
            << c.budget.total << ", pairing " << c.pairing.passed << '/'
            << c.pairing.total << '\n';
  const bool ok = c.entropy_ceiling.passed == c.entropy_ceiling.total &&
                  c.budget.passed == c.budget.total &&
                  c.pairing.passed == c.pairing.total;
  return ok ? kExitOk : kExitInvariant;
}

int RunOracle(const OracleFlags& f) {
  CheckBudget(f.budget, f.margin);
  if (f.trials < 1) throw UsageError("--trials must be >= 1");
  const CostKind constraint = ParseConstraint(f.instance.constraint);
  const BenchInstance instance = MakeInstance(f.instance, f.seed);
  const ObjectiveOracle& oracle = instance.oracle();
  const int n = oracle.ground_size();
  if (n > kApproximationCheckMaxN) {
    throw UsageError(
        "oracle checks need n <= " + std::to_string(kApproximationCheckMaxN) +
        ", got " + std::to_string(n));
  }
  const CostModel model =
      instance.MakeCostModel(constraint, f.budget, f.margin);

  bool ok = true;
  const BruteForceResult opt = BruteForceOpt(oracle, model);
  std::cout << "n " << n << "\nOPT " << opt.opt_value << " witness "
            << opt.opt_witness.ToString() << " (" << opt.enumerated
            << " feasible subsets)\n";

  if (n <= kSubmodularityRatioMaxN) {
    const SubmodularityReport ratio = SubmodularityRatio(oracle, n);
    std::cout << "submodularity_ratio " << ratio.alpha << " ("
              << ratio.pairs_examined << " pairs)\n";
  }

  const ApproximationCheck approx =
      constraint == CostKind::kUniform
          ? CheckDgsApproximation(oracle, model, f.trials, f.seed)
          : CheckGdgsApproximation(oracle, model, f.trials, f.seed);
  std::cout << "approximation " << (approx.passed() ? "PASS" : "FAIL")
            << " factor " << approx.bound_factor << " min_ratio "
            << approx.min_ratio << " checked " << approx.solutions_checked
            << " violations " << approx.violations << '\n';
  ok = ok && approx.passed();

  const CountCheck count = constraint == CostKind::kUniform
                               ? CheckDgsSolutionCount(oracle, model)
                               : CheckGdgsSolutionCount(oracle, model);
  std::cout << "count " << (count.passed() ? "PASS" : "FAIL") << " threshold "
            << count.threshold << " enumerated " << count.enumerated_count
            << " bound " << count.bound << (count.vacuous ? " (vacuous)" : "")
            << '\n';
  ok = ok && count.passed();
  return ok ? kExitOk : kExitInvariant;
}

int RunInspect(const InstanceFlags& f) {
  const auto g = LoadGraph(f);
  const IngestStats& s = g->stats();
  std::cout << "path " << f.path << '\n'
            << "format " << GraphFormatName(s.format) << '\n'
            << "vertices " << g->num_vertices() << '\n'
            << "undirected_edges " << g->undirected_edge_count() << '\n'
            << "arcs " << g->arcs().size() << '\n'
            << "input_edges " << s.input_edges << '\n'
            << "self_loops_dropped " << s.self_loops_dropped << '\n'
            << "duplicates_collapsed " << s.duplicates_collapsed << '\n'
            << "symmetrized " << (s.symmetrized ? "yes" : "no") << '\n'
            << "label_offset " << s.label_offset << '\n';
  if (s.header_vertices >= 0) {
    std::cout << "header " << s.header_vertices << ' ' << s.header_edges
              << '\n';
  }
  for (const std::string& w : s.warnings) std::cout << "warning " << w << '\n';
  return kExitOk;
}

int RunGenerate(const GenerateFlags& f) {
  const auto edges = GenerateModelRb(f.params);
  const ModelRbParams& p = f.params;
  std::ostringstream note;
  note << "Model RB instance: " << p.variables << " variables, domain "
       << p.domain << ", tightness " << p.tightness << ", seed " << p.seed;
  const std::vector<std::string> comments{note.str()};
  OutputFile out(f.out);
  WriteDimacs(out.stream(), p.variables * p.domain, edges, comments);
  std::cerr << "wrote " << p.variables * p.domain << " vertices, "
            << edges.size() << " edges\n";
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Diverse solutions for budget-constrained submodular problems"};
  app.require_subcommand(1);

  SolveFlags solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Greedy sampling, optionally then DIVEA");
  AddInstanceFlags(solve_cmd, solve.instance, true);
  solve_cmd->add_option("--B", solve.budget, "Budget");
  solve_cmd->add_option("--m", solve.margin, "Margin");
  solve_cmd->add_option("--mu", solve.mu, "Population size");
  solve_cmd->add_option("--seed", solve.seed, "Base seed");
  solve_cmd->add_flag("--divea", solve.divea, "Run DIVEA after sampling");
  solve_cmd->add_option("--t-max", solve.t_max, "DIVEA iterations")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--out", solve.out, "Output file (default stdout)");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run an experiment grid");
  AddInstanceFlags(bench_cmd, bench.instance, true);
  bench_cmd->add_option("--B", bench.budgets, "Budgets")->delimiter(',');
  bench_cmd->add_option("--m", bench.margins, "Margins")->delimiter(',');
  bench_cmd->add_option("--mu", bench.mus, "Population sizes")->delimiter(',');
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per cell");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--t-max", bench.t_max, "DIVEA iterations")
      ->check(CLI::NonNegativeNumber);
  bench_cmd
      ->add_option("--workers", bench.workers, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_flag("--no-timings", bench.no_timings,
                      "Write 0 for wall times");
  bench_cmd->add_flag("--quiet", bench.quiet, "No progress lines");
  bench_cmd->add_option("--csv", bench.csv, "Per-run CSV ('-' for stdout)");
  bench_cmd->add_option("--json", bench.json, "Summary JSON ('-' for stdout)");

  OracleFlags oracle;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Check the greedy guarantees by exhaustive enumeration");
  AddInstanceFlags(oracle_cmd, oracle.instance, true);
  oracle_cmd->add_option("--B", oracle.budget, "Budget");
  oracle_cmd->add_option("--m", oracle.margin, "Margin");
  oracle_cmd->add_option("--trials", oracle.trials, "Sampler runs");
  oracle_cmd->add_option("--seed", oracle.seed, "Base seed");

  InstanceFlags inspect;
  CLI::App* inspect_cmd =
      app.add_subcommand("inspect", "Report graph statistics");
  AddInstanceFlags(inspect_cmd, inspect, false);

  GenerateFlags generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a Model RB graph in DIMACS format");
  generate_cmd->add_option("--variables", generate.params.variables)
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--domain", generate.params.domain)
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--tightness", generate.params.tightness)
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--edges", generate.params.target_edges);
  generate_cmd->add_option("--seed", generate.params.seed);
  generate_cmd->add_option("--out", generate.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*bench_cmd) return RunBench(bench);
    if (*oracle_cmd) return RunOracle(oracle);
    if (*inspect_cmd) return RunInspect(inspect);
    if (*generate_cmd) return RunGenerate(generate);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInstance;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitBadArgs;
}

}  // namespace
}  // namespace divsub

int main(int argc, char** argv) { return divsub::Main(argc, argv); }
