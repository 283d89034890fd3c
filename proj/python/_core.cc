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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "divsub/bench.h"
#include "divsub/core.h"
#include "divsub/diversity.h"
#include "divsub/evo.h"
#include "divsub/graph.h"
#include "divsub/greedy.h"
#include "divsub/problems.h"

namespace py = pybind11;

namespace divsub {
namespace {

using Members = std::vector<Element>;

std::vector<Members> ToLists(const Population& pop) {
  std::vector<Members> out;
  for (const Solution& s : pop.solutions()) {
    out.emplace_back(s.members().begin(), s.members().end());
  }
  return out;
}

double MinValue(const Population& pop, const ObjectiveOracle& oracle) {
  double lo = INFINITY;
  for (const Solution& s : pop.solutions()) {
    lo = std::min(lo, oracle.Evaluate(s));
  }
  return lo;
}

std::shared_ptr<const Graph> LoadGraph(const std::string& path,
                                       bool symmetrize) {
  return std::make_shared<const Graph>(
      IngestGraph(path, GraphFormat::kAuto, symmetrize));
}

std::shared_ptr<const Graph> GraphFromEdges(
    int n, const std::vector<std::pair<Element, Element>>& edges,
    bool symmetrize) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [u, v] : edges) arcs.push_back({u, v});
  return std::make_shared<const Graph>(n, std::move(arcs), symmetrize);
}

std::shared_ptr<BenchInstance> MakeInstance(const std::string& problem,
                                            std::shared_ptr<const Graph> graph,
                                            int samples, double probability,
                                            std::uint64_t seed,
                                            const std::string& coverage_rule) {
  CascadeParams cascade;
  cascade.samples = samples;
  cascade.default_probability = probability;
  cascade.evaluation_seed = CascadeEvaluationSeed(seed);
  return std::make_shared<BenchInstance>(ParseProblem(problem),
                                         std::move(graph), cascade,
                                         ParseCoverageRule(coverage_rule));
}

// Same pipeline as `divsub solve`: greedy sampler, then optionally DIVEA
// at the greedy threshold.
py::dict Solve(const BenchInstance& instance, const std::string& constraint,
               double budget, double margin, int mu, std::uint64_t seed,
               bool divea, std::int64_t t_max) {
  const CostKind kind = ParseConstraint(constraint);
  const CostModel model = instance.MakeCostModel(kind, budget, margin);
  const ObjectiveOracle& oracle = instance.oracle();
  const std::uint64_t run_seed =
      DeriveRunSeed(seed, instance.problem(), kind, budget, margin, mu, 0);
  SamplerResult sampled = [&] {
    py::gil_scoped_release release;
    return DiversifyingGreedySample(oracle, model, mu, run_seed);
  }();
  Population pop = std::move(sampled.population);
  const double f_min = MinValue(pop, oracle);
  const double greedy_entropy = Entropy(pop);
  std::string algorithm = kind == CostKind::kUniform ? "DGS" : "GDGS";
  std::int64_t accepted = 0;
  if (divea) {
    DiveaConfig config;
    config.t_max = t_max;
    config.f_min = f_min;
    config.seed = DiveaSeed(run_seed);
    py::gil_scoped_release release;
    DiveaResult result = Divea(std::move(pop), oracle, model, config);
    pop = std::move(result.population);
    accepted = result.accepted;
    algorithm += "+DIVEA";
  }
  py::dict out;
  out["algorithm"] = algorithm;
  out["solutions"] = ToLists(pop);
  out["threshold"] = MinValue(pop, oracle);
  out["entropy"] = Entropy(pop);
  out["greedy_entropy"] = greedy_entropy;
  out["accepted"] = accepted;
  out["flags"] = sampled.trace.flags;
  return out;
}

std::string RunGridJson(const BenchInstance& instance,
                        const std::string& constraint,
                        std::vector<double> budgets,
                        std::vector<double> margins, std::vector<int> mus,
                        int repetitions, std::uint64_t seed, std::int64_t t_max,
                        int workers) {
  ExperimentGrid grid;
  grid.problem = instance.problem();
  grid.constraint = ParseConstraint(constraint);
  grid.budgets = std::move(budgets);
  grid.margins = std::move(margins);
  grid.population_sizes = std::move(mus);
  grid.repetitions = repetitions;
  grid.base_seed = seed;
  grid.divea.t_max = t_max;
  grid.workers = workers;
  grid.record_timings = false;
  const GridResult result = [&] {
    py::gil_scoped_release release;
    return RunGrid(grid, instance);
  }();
  nlohmann::json j = SummaryJson(result);
  nlohmann::json records = nlohmann::json::array();
  for (const RunRecord& r : result.records) {
    records.push_back({{"B", r.budget},
                       {"m", r.margin},
                       {"mu", r.mu},
                       {"repetition", r.repetition},
                       {"seed", r.seed},
                       {"algorithm", AlgorithmName(r.algorithm)},
                       {"threshold", r.threshold},
                       {"entropy", r.entropy}});
  }
  j["records"] = std::move(records);
  return j.dump();
}

double PopulationEntropy(const std::vector<Members>& solutions, int n) {
  Population pop(n);
  for (const Members& m : solutions) pop.Add(Solution(m));
  return Entropy(pop);
}

}  // namespace
}  // namespace divsub

PYBIND11_MODULE(_core, m) {
  using namespace divsub;
  m.doc() = "Diverse solution sets for submodular maximisation.";

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_arcs",
                             [](const Graph& g) { return g.arcs().size(); })
      .def_property_readonly("undirected_edge_count",
                             &Graph::undirected_edge_count)
      .def("neighbors", [](const Graph& g, Element v) {
        const auto nb = g.Neighbors(v);
        return std::vector<Element>(nb.begin(), nb.end());
      });

  m.def(
      "load_graph",
      [](const std::string& path, bool symmetrize) {
        return std::const_pointer_cast<Graph>(LoadGraph(path, symmetrize));
      },
      py::arg("path"), py::arg("symmetrize") = false,
      "Reads a DIMACS or edge-list file.");
  m.def(
      "graph_from_edges",
      [](int n, const std::vector<std::pair<Element, Element>>& edges,
         bool symmetrize) {
        return std::const_pointer_cast<Graph>(
            GraphFromEdges(n, edges, symmetrize));
      },
      py::arg("n"), py::arg("edges"), py::arg("symmetrize") = false);

  py::class_<BenchInstance, std::shared_ptr<BenchInstance>>(m, "Instance")
      .def(py::init([](const std::string& problem, std::shared_ptr<Graph> graph,
                       int samples, double probability, std::uint64_t seed,
                       const std::string& coverage_rule) {
             return MakeInstance(problem, std::move(graph), samples,
                                 probability, seed, coverage_rule);
           }),
           py::arg("problem"), py::arg("graph"), py::arg("samples") = 100,
           py::arg("probability") = 0.05, py::arg("seed") = 0,
           py::arg("coverage_rule") = "higher")
      .def_property_readonly("ground_size", &BenchInstance::ground_size)
      .def_property_readonly(
          "problem",
          [](const BenchInstance& i) { return ProblemName(i.problem()); })
      .def("evaluate",
           [](const BenchInstance& i, const Members& members) {
             return i.oracle().Evaluate(Solution(members));
           })
      .def("cost", [](const BenchInstance& i, const std::string& constraint,
                      const Members& members) {
        return i.MakeCostModel(ParseConstraint(constraint), 1.0, 0.0)
            .Cost(Solution(members));
      });

  m.def("solve", &Solve, py::arg("instance"), py::arg("constraint") = "uniform",
        py::arg("B"), py::arg("m"), py::arg("mu") = 5, py::arg("seed") = 0,
        py::arg("divea") = false, py::arg("t_max") = 10000);
  m.def("_run_grid_json", &RunGridJson, py::arg("instance"),
        py::arg("constraint"), py::arg("budgets"), py::arg("margins"),
        py::arg("mus"), py::arg("repetitions"), py::arg("seed"),
        py::arg("t_max"), py::arg("workers"));
  m.def("entropy", &PopulationEntropy, py::arg("solutions"), py::arg("n"),
        "Population entropy in bits.");
  m.def("dgs_entropy_upper_bound", &DgsEntropyUpperBound, py::arg("n"),
        py::arg("B"), py::arg("m"));
  m.def("onemax_max_entropy", &OneMaxMaxEntropy, py::arg("n"), py::arg("B"),
        py::arg("mu"));

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GraphParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
