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

// Acceptance run: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// The benchmark graph is taken from $FRB30_15_01 if set, else
// data/frb30-15-01.mis, else the bundled Model RB surrogate.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "divsub/bench.h"
#include "divsub/core.h"
#include "divsub/diversity.h"
#include "divsub/evo.h"
#include "divsub/graph.h"
#include "divsub/greedy.h"
#include "divsub/oracle.h"
#include "divsub/problems.h"
#include "divsub/random.h"
#include "test_util.h"

namespace divsub {
namespace {

using ::divsub::testing::RandomCoverage;
using ::divsub::testing::RandomDigraph;

constexpr std::uint64_t kBaseSeed = 1;
constexpr int kReps = 30;
constexpr std::int64_t kTableIterations = 10000;
constexpr std::int64_t kOptimumIterations = 3000000;
constexpr std::int64_t kDiagnosticIterations = 1000000;

const std::vector<int> kMus = {5, 10, 15, 20};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void Progress(const std::string& what) {
  static const Stopwatch clock;
  std::cerr << Format("[%7.1fs] ", clock.Seconds()) << what << std::endl;
}

struct Instance {
  std::string path;
  std::string label;
  std::shared_ptr<const Graph> undirected;
  std::shared_ptr<const Graph> symmetrized;
};

Instance LoadInstance() {
  Instance inst;
  if (const char* env = std::getenv("FRB30_15_01"); env && *env) {
    inst.path = env;
    inst.label = "frb30-15-01 ($FRB30_15_01)";
  } else if (std::filesystem::exists(DIVSUB_DATA_DIR "/frb30-15-01.mis")) {
    inst.path = DIVSUB_DATA_DIR "/frb30-15-01.mis";
    inst.label = "frb30-15-01";
  } else {
    inst.path = DIVSUB_DATA_DIR "/frb30-15-surrogate.mis";
    inst.label = "Model RB surrogate (frb30-15-01 not available)";
  }
  inst.undirected = std::make_shared<const Graph>(
      IngestGraph(inst.path, GraphFormat::kAuto, false));
  inst.symmetrized = std::make_shared<const Graph>(
      IngestGraph(inst.path, GraphFormat::kAuto, true));
  return inst;
}

struct TableSetup {
  std::string name;
  ProblemKind problem;
  CostKind constraint;
  std::vector<double> budgets;
  std::vector<double> margins;
  bool symmetrize = false;
  CoverageRule rule = CoverageRule::kHigherNumber;
  std::int64_t t_max = kTableIterations;
  std::vector<int> mus = kMus;
};

struct Table {
  TableSetup setup;
  GridResult result;

  const CellSummary* Find(double b, double m, int mu, bool divea) const {
    for (const CellSummary& c : result.cells) {
      if (c.budget == b && c.margin == m && c.mu == mu &&
          (c.algorithm == Algorithm::kDivea) == divea) {
        return &c;
      }
    }
    return nullptr;
  }
};

CascadeParams Cascade() {
  CascadeParams p;
  p.samples = 100;
  p.default_probability = 0.05;
  p.evaluation_seed = CascadeEvaluationSeed(kBaseSeed);
  return p;
}

Table RunTable(const Instance& inst, const TableSetup& setup) {
  Progress("grid " + setup.name);
  const BenchInstance bench(
      setup.problem, setup.symmetrize ? inst.symmetrized : inst.undirected,
      Cascade(), setup.rule);
  ExperimentGrid grid;
  grid.problem = setup.problem;
  grid.constraint = setup.constraint;
  grid.budgets = setup.budgets;
  grid.margins = setup.margins;
  grid.population_sizes = setup.mus;
  grid.repetitions = kReps;
  grid.base_seed = kBaseSeed;
  grid.divea.t_max = setup.t_max;
  grid.record_timings = false;
  return {setup, RunGrid(grid, bench)};
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Criterion 1: DIVEA reaches the entropy optimum at B = 10, m = 8.

std::string OptimumMeans(const Table& t) {
  std::string s;
  for (int mu : kMus) {
    const CellSummary* c = t.Find(10, 8, mu, true);
    s += Format("%s%.4f", s.empty() ? "" : "/", c ? c->entropy_mean : NAN);
  }
  return s;
}

Verdict OptimumCriterion(const Table& verdict, const Table& diagnostic) {
  const std::map<int, double> targets = {
      {5, 23.2193}, {10, 33.2193}, {15, 39.0689}, {20, 43.2193}};
  Verdict v{true, ""};
  for (const auto& [mu, target] : targets) {
    const CellSummary* c = verdict.Find(10, 8, mu, true);
    if (c == nullptr || std::fabs(c->entropy_mean - target) > 0.05) {
      v.pass = false;
    }
  }
  v.detail = Format(
      "DIVEA entropy mu=5/10/15/20: %s (target 23.2193/33.2193/39.0689/"
      "43.2193 +-0.05, t_max=%lld, higher-number sets); closed "
      "neighbourhood sets, t_max=%lld: %s",
      OptimumMeans(verdict).c_str(),
      static_cast<long long>(verdict.setup.t_max),
      static_cast<long long>(diagnostic.setup.t_max),
      OptimumMeans(diagnostic).c_str());
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 2: greedy thresholds on uniform coverage.

std::string ThresholdSummary(const Table& t, bool* pass) {
  std::string s = "B=15,m=2 mu=5/10/15/20:";
  bool ok = true;
  for (int mu : kMus) {
    const CellSummary* c = t.Find(15, 2, mu, false);
    const double mean = c ? c->threshold_mean : NAN;
    ok = ok && std::fabs(mean - 449.0) <= 1.0;
    s += Format("%s%.2f", mu == kMus.front() ? " " : "/", mean);
  }
  const CellSummary* c = t.Find(10, 2, 5, false);
  const double mean = c ? c->threshold_mean : NAN;
  ok = ok && std::fabs(mean - 429.70) <= 2.0;
  s += Format("; B=10,m=2,mu=5: %.2f", mean);
  if (pass) *pass = ok;
  return s;
}

Verdict ThresholdCriterion(const Table& verdict, const Table& diagnostic) {
  Verdict v;
  const std::string main = ThresholdSummary(verdict, &v.pass);
  v.detail = main +
             " (targets 449.00+-1.0, 429.70+-2.0, higher-number sets); "
             "closed neighbourhood sets: " +
             ThresholdSummary(diagnostic, nullptr);
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 3: knapsack coverage thresholds.

std::string KnapsackSummary(const Table& t, bool* pass) {
  const std::vector<std::pair<double, double>> targets = {
      {10, 406.30}, {20, 398.53}, {30, 388.57}};
  std::string s = "B=100,mu=5 m=10/20/30:";
  bool ok = true;
  double previous = INFINITY;
  for (const auto& [m, target] : targets) {
    const CellSummary* c = t.Find(100, m, 5, false);
    const double mean = c ? c->threshold_mean : NAN;
    const double tol = m == 10 ? 2.0 : 3.0;
    ok = ok && std::fabs(mean - target) <= tol && mean < previous;
    previous = mean;
    s += Format("%s%.2f", m == 10 ? " " : "/", mean);
  }
  if (pass) *pass = ok;
  return s;
}

Verdict KnapsackCriterion(const Table& verdict, const Table& diagnostic) {
  Verdict v;
  const std::string main = KnapsackSummary(verdict, &v.pass);
  v.detail = main +
             " (targets 406.30+-2.0, 398.53/388.57+-3.0, decreasing; "
             "higher-number sets); closed neighbourhood sets: " +
             KnapsackSummary(diagnostic, nullptr) +
             "; f(X) <= c(X) <= B = 100 for every feasible X";
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 4: orderings within every table.

struct OrderingTally {
  int dominance = 0, dominance_total = 0;
  int by_mu = 0, by_mu_total = 0;
  int by_m = 0, by_m_total = 0;
  bool ok() const {
    return dominance == dominance_total && by_mu == by_mu_total &&
           by_m == by_m_total && dominance_total > 0;
  }
};

OrderingTally Orderings(const Table& t) {
  OrderingTally o;
  for (double b : t.setup.budgets) {
    for (std::size_t mi = 0; mi < t.setup.margins.size(); ++mi) {
      const double m = t.setup.margins[mi];
      for (std::size_t ui = 0; ui < t.setup.mus.size(); ++ui) {
        const int mu = t.setup.mus[ui];
        const CellSummary* greedy = t.Find(b, m, mu, false);
        const CellSummary* divea = t.Find(b, m, mu, true);
        ++o.dominance_total;
        if (greedy && divea && divea->entropy_mean > greedy->entropy_mean) {
          ++o.dominance;
        }
        if (ui > 0) {
          const CellSummary* prev = t.Find(b, m, t.setup.mus[ui - 1], false);
          ++o.by_mu_total;
          if (greedy && prev && greedy->entropy_mean > prev->entropy_mean) {
            ++o.by_mu;
          }
        }
        if (mi > 0) {
          const CellSummary* prev =
              t.Find(b, t.setup.margins[mi - 1], mu, false);
          ++o.by_m_total;
          if (greedy && prev && greedy->entropy_mean > prev->entropy_mean) {
            ++o.by_m;
          }
        }
      }
    }
  }
  return o;
}

std::string OrderingText(const Table& t) {
  const OrderingTally o = Orderings(t);
  return Format("%s divea>greedy %d/%d, up-in-mu %d/%d, up-in-m %d/%d",
                t.setup.name.c_str(), o.dominance, o.dominance_total, o.by_mu,
                o.by_mu_total, o.by_m, o.by_m_total);
}

Verdict OrderingCriterion(const std::vector<const Table*>& verdict,
                          const std::vector<const Table*>& diagnostic) {
  Verdict v{true, ""};
  for (const Table* t : verdict) {
    v.pass = v.pass && Orderings(*t).ok();
    v.detail += (v.detail.empty() ? "" : "; ") + OrderingText(*t);
  }
  v.detail += "; diagnostics:";
  for (const Table* t : diagnostic) v.detail += " " + OrderingText(*t) + ";";
  v.detail.pop_back();
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 5: influence invariants with fixed samples.

// Counts evaluations whose spread falls below the number of seeds.
class SpreadAudit : public ObjectiveOracle {
 public:
  explicit SpreadAudit(const ObjectiveOracle& inner) : inner_(inner) {}

  double Evaluate(std::span<const Element> members) const override {
    const double f = inner_.Evaluate(members);
    ++calls_;
    if (f < static_cast<double>(members.size())) ++violations_;
    return f;
  }
  using ObjectiveOracle::Evaluate;
  int ground_size() const override { return inner_.ground_size(); }
  std::string name() const override { return inner_.name(); }
  double value_step() const override { return inner_.value_step(); }
  bool certified_submodular() const override {
    return inner_.certified_submodular();
  }

  std::int64_t calls() const { return calls_; }
  std::int64_t violations() const { return violations_; }

 private:
  const ObjectiveOracle& inner_;
  mutable std::atomic<std::int64_t> calls_{0};
  mutable std::atomic<std::int64_t> violations_{0};
};

struct InvariantTally {
  std::int64_t runs = 0;
  std::int64_t iterations = 0;
  std::int64_t failures = 0;
  std::vector<std::string> first_errors;

  void Fail(const std::string& what) {
    ++failures;
    if (first_errors.size() < 3) first_errors.push_back(what);
  }
};

// Runs DIVEA from `start` while re-checking every invariant after each
// iteration, independently of the library's own checks.
void AuditedDivea(const Population& start, const ObjectiveOracle& oracle,
                  const CostModel& model, double f_min, std::int64_t t_max,
                  std::uint64_t seed, InvariantTally& tally) {
  const std::size_t mu = start.size();
  DiveaConfig config;
  config.t_max = t_max;
  config.f_min = f_min;
  config.seed = seed;
  config.check_invariants = true;
  double last = Entropy(start);
  const std::string tag = Format(
      "%s B=%g m=%g mu=%zu seed=%llu", oracle.name().c_str(), model.budget(),
      model.margin(), mu, static_cast<unsigned long long>(seed));
  const auto observe = [&](std::int64_t t, const Population& pop, double h,
                           bool) {
    if (pop.size() != mu) tally.Fail(tag + Format(" size at t=%lld", t));
    if (h < last - 1e-9) tally.Fail(tag + Format(" entropy fell at t=%lld", t));
    last = h;
    for (const Solution& s : pop.solutions()) {
      if (oracle.Evaluate(s) < f_min) {
        tally.Fail(tag + Format(" below f_min at t=%lld", t));
      }
      if (!model.IsFeasible(s)) {
        tally.Fail(tag + Format(" over budget at t=%lld", t));
      }
    }
  };
  try {
    const DiveaResult a = Divea(start, oracle, model, config, observe);
    tally.iterations += a.iterations;
    ++tally.runs;
    const DiveaResult b = Divea(start, oracle, model, config);
    bool same =
        a.population.size() == b.population.size() && a.entropy == b.entropy;
    for (std::size_t i = 0; same && i < a.population.size(); ++i) {
      same = a.population[i] == b.population[i];
    }
    if (!same) tally.Fail(tag + " not reproducible");
  } catch (const std::exception& e) {
    tally.Fail(tag + " " + e.what());
  }
}

double MinValue(const Population& pop, const ObjectiveOracle& oracle) {
  double f = INFINITY;
  for (const Solution& s : pop.solutions()) f = std::min(f, oracle.Evaluate(s));
  return f;
}

struct InfluenceAudit {
  InvariantTally tally;
  std::int64_t spread_calls = 0;
  std::int64_t spread_violations = 0;
};

void AuditInfluence(const std::shared_ptr<const Graph>& g,
                    InfluenceAudit& audit) {
  const CascadeEvaluator eval(g, Cascade());
  const SpreadAudit oracle(eval);
  const CostModel uniform_base = CostModel::Uniform(g->num_vertices(), 10, 2);
  const CostModel knapsack_base = DegreeCostModel(*g, 100, 10);
  std::uint64_t seed = 0;
  for (double b : {10.0, 15.0}) {
    for (double m : {2.0, 5.0, 8.0}) {
      for (int mu : {5, 20}) {
        const CostModel model = uniform_base.WithBudget(b, m);
        const SamplerResult start = Dgs(oracle, model, mu, ++seed);
        AuditedDivea(start.population, oracle, model,
                     MinValue(start.population, oracle), 2000, seed,
                     audit.tally);
      }
    }
  }
  for (double m : {10.0, 20.0, 30.0}) {
    for (int mu : {5, 20}) {
      const CostModel model = knapsack_base.WithBudget(100, m);
      const SamplerResult start = Gdgs(oracle, model, mu, ++seed);
      AuditedDivea(start.population, oracle, model,
                   MinValue(start.population, oracle), 2000, seed, audit.tally);
    }
  }
  audit.spread_calls += oracle.calls();
  audit.spread_violations += oracle.violations();
}

Verdict InfluenceCriterion(const Instance& inst,
                           const std::vector<const Table*>& tables) {
  Progress("influence invariants");
  InfluenceAudit audit;
  AuditInfluence(inst.undirected, audit);
  AuditInfluence(inst.symmetrized, audit);
  CheckTally budget, pairing;
  for (const Table* t : tables) {
    budget.passed += t->result.checks.budget.passed;
    budget.total += t->result.checks.budget.total;
    pairing.passed += t->result.checks.pairing.passed;
    pairing.total += t->result.checks.pairing.total;
  }
  Verdict v;
  v.pass = audit.tally.failures == 0 && audit.spread_violations == 0 &&
           budget.passed == budget.total && pairing.passed == pairing.total &&
           audit.tally.runs > 0;
  v.detail = Format(
      "p=0.05, R=100 fixed samples, directed and symmetrized arcs: %lld "
      "audited DIVEA runs (%lld iterations, rerun for reproducibility), "
      "%lld invariant failures; spread >= |X| violated in %lld of %lld "
      "evaluations; grid budget checks %lld/%lld, pairing %lld/%lld",
      static_cast<long long>(audit.tally.runs),
      static_cast<long long>(audit.tally.iterations),
      static_cast<long long>(audit.tally.failures),
      static_cast<long long>(audit.spread_violations),
      static_cast<long long>(audit.spread_calls),
      static_cast<long long>(budget.passed),
      static_cast<long long>(budget.total),
      static_cast<long long>(pairing.passed),
      static_cast<long long>(pairing.total));
  for (const std::string& e : audit.tally.first_errors) v.detail += "; " + e;
  return v;
}

// ---------------------------------------------------------------------------
// Criteria 6 and 7: enumeration against the approximation and count bounds.

Verdict ApproximationCriterion() {
  Progress("approximation bound");
  Rng rng(Hash64({kBaseSeed, 6}));
  int instances = 0;
  std::int64_t solutions = 0, violations = 0;
  int gaps = 0;
  double worst = INFINITY;
  for (int i = 0; i < 240; ++i) {
    const int n = 10 + i % 9;
    const int b = 2 + i % 5;
    const int m = std::min(i % 3, b);
    const CoverageOracle oracle(RandomCoverage(n, 24, 0.12, rng.Next()));
    const ApproximationCheck c = CheckDgsApproximation(
        oracle, CostModel::Uniform(n, b, m), 10, rng.Next());
    ++instances;
    solutions += c.solutions_checked;
    violations += c.violations;
    if (c.min_ratio < 1.0) ++gaps;
    worst = std::min(worst, c.min_ratio - c.bound_factor);
  }
  Verdict v;
  v.pass = instances >= 200 && violations == 0;
  v.detail = Format(
      "%d coverage instances (n=10..18, B=2..6, m=0..2), %lld DGS solutions, "
      "%lld violations; %d instances with f(P_i) < OPT; smallest margin over "
      "the bound %.4f",
      instances, static_cast<long long>(solutions),
      static_cast<long long>(violations), gaps, worst);
  return v;
}

Verdict CountCriterion() {
  Progress("solution count bounds");
  Rng rng(Hash64({kBaseSeed, 7}));
  int dgs = 0, dgs_fail = 0;
  for (int i = 0; i < 120; ++i) {
    const int n = 8 + i % 9;
    const int b = 2 + i % 5;
    const int m = i % (b + 1);
    const CoverageOracle oracle(RandomCoverage(n, 20, 0.12, rng.Next()));
    const CountCheck c =
        CheckDgsSolutionCount(oracle, CostModel::Uniform(n, b, m));
    ++dgs;
    if (!c.passed()) ++dgs_fail;
  }
  int gdgs = 0, gdgs_fail = 0, gdgs_vacuous = 0;
  for (int i = 0; i < 120; ++i) {
    const int n = 8 + i % 7;
    std::vector<double> costs(static_cast<std::size_t>(n));
    for (double& c : costs) c = 1.0 + static_cast<double>(rng.UniformIndex(3));
    const double b = 6.0 + static_cast<double>(rng.UniformIndex(6));
    const double m = 3.0 + static_cast<double>(rng.UniformIndex(
                               static_cast<std::uint64_t>(b) - 3));
    const CoverageOracle oracle(RandomCoverage(n, 20, 0.12, rng.Next()));
    const CountCheck c =
        CheckGdgsSolutionCount(oracle, CostModel::Knapsack(costs, b, m));
    ++gdgs;
    if (c.vacuous) ++gdgs_vacuous;
    if (!c.passed()) ++gdgs_fail;
  }
  Verdict v;
  v.pass = dgs >= 100 && dgs_fail == 0 && gdgs - gdgs_vacuous >= 50 &&
           gdgs_fail == 0;
  v.detail = Format(
      "DGS: %d uniform coverage instances (n=8..16), %d violations; GDGS: %d "
      "knapsack instances (n=8..14, costs 1..3), %d violations, %d vacuous",
      dgs, dgs_fail, gdgs, gdgs_fail, gdgs_vacuous);
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 8: DGS entropy ceiling across the uniform grids.

Verdict CeilingCriterion(const std::vector<const Table*>& tables) {
  CheckTally all;
  std::string parts;
  for (const Table* t : tables) {
    const CheckTally& c = t->result.checks.entropy_ceiling;
    all.passed += c.passed;
    all.total += c.total;
    parts += Format("%s%s %lld/%lld", parts.empty() ? "" : ", ",
                    t->setup.name.c_str(), static_cast<long long>(c.passed),
                    static_cast<long long>(c.total));
  }
  Verdict v;
  v.pass = all.total > 0 && all.passed == all.total;
  v.detail = Format("%lld/%lld DGS runs within -m log2(m/(n-B+m)) (",
                    static_cast<long long>(all.passed),
                    static_cast<long long>(all.total)) +
             parts + ")";
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 9: fuzzed DIVEA invariants across objectives.

Verdict DiveaCriterion() {
  Progress("DIVEA invariant fuzzing");
  Rng rng(Hash64({kBaseSeed, 9}));
  InvariantTally tally;
  int round = 0;
  while (tally.iterations < 100000) {
    const int kind = round++ % 5;
    const int n = 20 + static_cast<int>(rng.UniformIndex(21));
    const int mu = 2 + static_cast<int>(rng.UniformIndex(9));
    std::unique_ptr<ObjectiveOracle> oracle;
    std::optional<CoverageInstance> coverage;
    std::shared_ptr<const Graph> graph;
    switch (kind) {
      case 0:
      case 1:
        coverage = RandomCoverage(n, 40, 0.1, rng.Next());
        oracle = std::make_unique<CoverageOracle>(*coverage);
        break;
      case 2:
      case 3: {
        graph = RandomDigraph(n, 0.08, rng.Next());
        CascadeParams params;
        params.samples = 20;
        params.evaluation_seed = rng.Next();
        oracle = std::make_unique<CascadeEvaluator>(graph, params);
        break;
      }
      default:
        oracle = std::make_unique<OneMaxOracle>(n);
    }
    const bool knapsack = kind == 1 || kind == 3;
    const int b = 3 + static_cast<int>(rng.UniformIndex(6));
    const int m = static_cast<int>(rng.UniformIndex(b + 1));
    CostModel model = CostModel::Uniform(n, b, m);
    if (knapsack) {
      model = kind == 1 ? CoverageCostModel(*coverage, 3.0 * b, m)
                        : DegreeCostModel(*graph, 2.0 * b, m);
    }
    const std::uint64_t seed = rng.Next();
    const SamplerResult start =
        DiversifyingGreedySample(*oracle, model, mu, seed);
    AuditedDivea(start.population, *oracle, model,
                 MinValue(start.population, *oracle), 2500, seed, tally);
  }
  Verdict v;
  v.pass = tally.failures == 0 && tally.iterations >= 100000;
  v.detail = Format(
      "%lld runs over coverage/influence/OneMax, uniform and knapsack, "
      "%lld iterations; %lld failures (entropy monotone, size mu, f >= "
      "f_min, cost <= B each iteration; reruns bit-identical)",
      static_cast<long long>(tally.runs),
      static_cast<long long>(tally.iterations),
      static_cast<long long>(tally.failures));
  for (const std::string& e : tally.first_errors) v.detail += "; " + e;
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 10: oracle self-consistency.

double ReferenceEntropy(const std::vector<Solution>& sols, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (const Solution& s : sols) {
    for (Element e : s.members()) ++counts[e];
  }
  double h = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(sols.size());
    h -= p * std::log(p) / std::log(2.0);
  }
  return h;
}

Verdict OracleCriterion() {
  Progress("oracle self-consistency");
  Rng rng(Hash64({kBaseSeed, 10}));
  int checked = 0, not_one = 0;
  for (int n = 4; n <= 10; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const CoverageOracle coverage(RandomCoverage(n, 16, 0.2, rng.Next()));
      CascadeParams params;
      params.samples = 25;
      params.evaluation_seed = rng.Next();
      const CascadeEvaluator cascade(RandomDigraph(n, 0.25, rng.Next()),
                                     params);
      for (const ObjectiveOracle* o :
           std::initializer_list<const ObjectiveOracle*>{&coverage, &cascade}) {
        ++checked;
        if (SubmodularityRatio(*o, n).alpha != 1.0) ++not_one;
      }
    }
    ++checked;
    if (SubmodularityRatio(OneMaxOracle(n), n).alpha != 1.0) ++not_one;
  }

  int removals = 0;
  double worst = 0.0;
  while (removals < 10000) {
    const int n = 1 + static_cast<int>(rng.UniformIndex(40));
    const int size = 2 + static_cast<int>(rng.UniformIndex(20));
    const double p = rng.Uniform01();
    std::vector<Solution> sols;
    Population pop(n);
    for (int i = 0; i < size; ++i) {
      std::vector<Element> m;
      for (int e = 0; e < n; ++e) {
        if (rng.Bernoulli(p)) m.push_back(static_cast<Element>(e));
      }
      sols.emplace_back(m);
      pop.Add(Solution(std::move(m)));
    }
    const std::size_t j = rng.UniformIndex(size);
    std::vector<Solution> rest = sols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    worst = std::max(
        worst, std::fabs(EntropyWithout(pop, j) - ReferenceEntropy(rest, n)));
    ++removals;
  }
  Verdict v;
  v.pass = not_one == 0 && worst <= 1e-12;
  v.detail = Format(
      "submodularity ratio != 1.0 on %d of %d instances (coverage, fixed-"
      "sample cascade, OneMax, n=4..10); entropy_without max deviation "
      "%.3g over %d removals (tolerance 1e-12)",
      not_one, checked, worst, removals);
  return v;
}

int Main() {
  const Instance inst = LoadInstance();
  std::cout << "instance: " << inst.label << " [" << inst.path << "]\n"
            << Format("graph: %d vertices, %lld undirected edges\n",
                      inst.undirected->num_vertices(),
                      static_cast<long long>(
                          inst.undirected->undirected_edge_count()));

  const std::vector<double> uniform_b = {10, 15};
  const std::vector<double> uniform_m = {2, 5, 8};
  const std::vector<double> knapsack_b = {100};
  const std::vector<double> knapsack_m = {10, 20, 30};
  const CoverageRule closed = CoverageRule::kClosedNeighborhood;

  const Table t1 = RunTable(inst, {"influence/uniform", ProblemKind::kInfluence,
                                   CostKind::kUniform, uniform_b, uniform_m});
  const Table t2 = RunTable(inst, {"coverage/uniform", ProblemKind::kCoverage,
                                   CostKind::kUniform, uniform_b, uniform_m});
  const Table t3 =
      RunTable(inst, {"influence/knapsack", ProblemKind::kInfluence,
                      CostKind::kKnapsack, knapsack_b, knapsack_m});
  const Table t4 =
      RunTable(inst, {"coverage/knapsack", ProblemKind::kCoverage,
                      CostKind::kKnapsack, knapsack_b, knapsack_m});
  const Table t1_sym =
      RunTable(inst, {"influence/uniform(symmetrized)", ProblemKind::kInfluence,
                      CostKind::kUniform, uniform_b, uniform_m, true});
  const Table t2_closed =
      RunTable(inst, {"coverage/uniform(closed)", ProblemKind::kCoverage,
                      CostKind::kUniform, uniform_b, uniform_m, false, closed});
  const Table t3_sym = RunTable(
      inst, {"influence/knapsack(symmetrized)", ProblemKind::kInfluence,
             CostKind::kKnapsack, knapsack_b, knapsack_m, true});
  const Table t4_closed = RunTable(
      inst, {"coverage/knapsack(closed)", ProblemKind::kCoverage,
             CostKind::kKnapsack, knapsack_b, knapsack_m, false, closed});
  const Table optimum = RunTable(inst, {"coverage/uniform B=10 m=8",
                                        ProblemKind::kCoverage,
                                        CostKind::kUniform,
                                        {10},
                                        {8},
                                        false,
                                        CoverageRule::kHigherNumber,
                                        kOptimumIterations});
  const Table optimum_closed =
      RunTable(inst, {"coverage/uniform B=10 m=8 (closed)",
                      ProblemKind::kCoverage,
                      CostKind::kUniform,
                      {10},
                      {8},
                      false,
                      closed,
                      kDiagnosticIterations});

  std::vector<Verdict> verdicts;
  verdicts.push_back(OptimumCriterion(optimum, optimum_closed));
  verdicts.push_back(ThresholdCriterion(t2, t2_closed));
  verdicts.push_back(KnapsackCriterion(t4, t4_closed));
  verdicts.push_back(OrderingCriterion(
      {&t1, &t2, &t3, &t4}, {&t1_sym, &t2_closed, &t3_sym, &t4_closed}));
  verdicts.push_back(InfluenceCriterion(inst, {&t1, &t3, &t1_sym, &t3_sym}));
  verdicts.push_back(ApproximationCriterion());
  verdicts.push_back(CountCriterion());
  verdicts.push_back(CeilingCriterion({&t1, &t2, &t1_sym, &t2_closed}));
  verdicts.push_back(DiveaCriterion());
  verdicts.push_back(OracleCriterion());

  int failed = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const Verdict& v = verdicts[i];
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << v.detail << "\n";
  }
  std::cout << Format("%zu/%zu criteria passed\n", verdicts.size() - failed,
                      verdicts.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace divsub

int main() {
  try {
    return divsub::Main();
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}
