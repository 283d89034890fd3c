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

// Directed graphs and instance ingestion.
//
// Two text formats are accepted:
//
//   DIMACS:     c <comment>
//               p edge <n> <m>
//               e <u> <v>            (1-based ids, undirected)
//
//   edge list:  <u> <v> [<p>]        (0-based ids, one arc per line,
//                                     optional activation probability;
//                                     '#' starts a comment)

#ifndef DIVSUB_GRAPH_H_
#define DIVSUB_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divsub/core.h"

namespace divsub {

struct Arc {
  Element source;
  Element target;
  // Activation probability; NaN means "use the evaluator's default".
  double probability = std::numeric_limits<double>::quiet_NaN();
};

enum class GraphFormat { kAuto, kDimacs, kEdgeList };

const char* GraphFormatName(GraphFormat format);

struct IngestStats {
  GraphFormat format = GraphFormat::kEdgeList;
  // Input id of vertex 0 (1 for DIMACS, 0 for edge lists).
  int label_offset = 0;
  std::int64_t lines = 0;
  std::int64_t input_edges = 0;
  std::int64_t header_vertices = -1;
  std::int64_t header_edges = -1;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicates_collapsed = 0;
  bool symmetrized = false;
  std::vector<std::string> warnings;
};

// Directed graph on vertices 0..n-1 with arcs stored in CSR order by
// source. Self-loops and duplicate arcs are removed at construction.
class Graph {
 public:
  Graph(int num_vertices, std::vector<Arc> arcs, bool symmetrize = false);

  int num_vertices() const { return n_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Arc> OutArcs(Element v) const {
    return std::span<const Arc>(arcs_).subspan(offsets_[v],
                                               offsets_[v + 1] - offsets_[v]);
  }
  int OutDegree(Element v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  // Number of distinct unordered vertex pairs joined by at least one arc.
  std::int64_t undirected_edge_count() const { return undirected_edges_; }
  // Undirected neighbourhood, sorted.
  std::span<const Element> Neighbors(Element v) const {
    return std::span<const Element>(neighbors_)
        .subspan(neighbor_offsets_[v],
                 neighbor_offsets_[v + 1] - neighbor_offsets_[v]);
  }

  const IngestStats& stats() const { return stats_; }
  IngestStats& mutable_stats() { return stats_; }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;
  std::vector<Element> neighbors_;
  std::vector<std::size_t> neighbor_offsets_;
  std::int64_t undirected_edges_ = 0;
  IngestStats stats_;
};

// Malformed instance; `line()` is 1-based, 0 when not line-specific.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(const std::string& what, std::int64_t line)
      : std::runtime_error(
            line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

Graph ParseGraph(std::istream& in, GraphFormat format, bool symmetrize);

// Throws GraphParseError (line 0) if the file cannot be opened.
Graph IngestGraph(const std::string& path, GraphFormat format, bool symmetrize);

// Writes DIMACS text for an undirected graph given as vertex pairs.
void WriteDimacs(std::ostream& out, int num_vertices,
                 std::span<const std::pair<Element, Element>> edges,
                 std::span<const std::string> comments = {});

// Model RB random CSP instance as a graph (the construction behind the
// BHOSLIB frb benchmarks). Vertex var*domain + value stands for the
// assignment var := value; each variable's domain is a clique, and every
// incompatible tuple of a constraint adds an edge. A hidden solution is
// never forbidden. Generation stops once the graph has `target_edges`
// distinct edges.
struct ModelRbParams {
  int variables = 30;
  int domain = 15;
  double tightness = 0.25;  // fraction of tuples forbidden per constraint
  std::int64_t target_edges = 17827;
  std::uint64_t seed = 1;
};

// Returns undirected edges (u < v) over variables * domain vertices.
std::vector<std::pair<Element, Element>> GenerateModelRb(
    const ModelRbParams& params);

}  // namespace divsub

#endif  // DIVSUB_GRAPH_H_
