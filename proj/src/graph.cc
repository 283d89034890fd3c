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

#include "divsub/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "divsub/random.h"

namespace divsub {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t ParseInt(std::string_view token, std::int64_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw GraphParseError(
        "expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

double ParseProbability(std::string_view token, std::int64_t line) {
  // from_chars for double is missing from older libstdc++.
  std::string text(token);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) {
    throw GraphParseError("expected a probability, got '" + text + "'", line);
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw GraphParseError("probability " + text + " outside [0, 1]", line);
  }
  return value;
}

bool LooksLikeDimacs(std::string_view first_token) {
  return first_token == "c" || first_token == "p" || first_token == "e";
}

Graph ParseDimacs(std::istream& in, bool symmetrize) {
  IngestStats stats;
  stats.format = GraphFormat::kDimacs;
  stats.label_offset = 1;
  std::vector<Arc> arcs;
  std::int64_t n = -1;
  std::string line;
  std::int64_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    const auto tokens = Tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n >= 0) throw GraphParseError("duplicate 'p' header", ln);
      if (tokens.size() != 4 ||
          (tokens[1] != "edge" && tokens[1] != "edges" && tokens[1] != "col")) {
        throw GraphParseError("malformed header, expected 'p edge <n> <m>'",
                              ln);
      }
      n = ParseInt(tokens[2], ln);
      stats.header_vertices = n;
      stats.header_edges = ParseInt(tokens[3], ln);
      if (n < 1) throw GraphParseError("vertex count must be >= 1", ln);
      continue;
    }
    if (tokens[0] == "e") {
      if (n < 0) throw GraphParseError("edge before 'p' header", ln);
      if (tokens.size() != 3) {
        throw GraphParseError("malformed edge, expected 'e <u> <v>'", ln);
      }
      const std::int64_t u = ParseInt(tokens[1], ln);
      const std::int64_t v = ParseInt(tokens[2], ln);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw GraphParseError("vertex id outside 1.." + std::to_string(n), ln);
      }
      arcs.push_back(
          {static_cast<Element>(u - 1), static_cast<Element>(v - 1)});
      ++stats.input_edges;
      continue;
    }
    throw GraphParseError("unknown line type '" + std::string(tokens[0]) + "'",
                          ln);
  }
  if (n < 0) throw GraphParseError("missing 'p edge <n> <m>' header", 0);
  stats.lines = ln;
  if (stats.header_edges != stats.input_edges) {
    stats.warnings.push_back(
        "header declares " + std::to_string(stats.header_edges) +
        " edges, file has " + std::to_string(stats.input_edges));
  }
  Graph g(static_cast<int>(n), std::move(arcs), symmetrize);
  IngestStats& out = g.mutable_stats();
  stats.self_loops_dropped = out.self_loops_dropped;
  stats.duplicates_collapsed = out.duplicates_collapsed;
  stats.symmetrized = symmetrize;
  out = std::move(stats);
  return g;
}

Graph ParseEdgeList(std::istream& in, bool symmetrize) {
  IngestStats stats;
  stats.format = GraphFormat::kEdgeList;
  stats.label_offset = 0;
  std::vector<Arc> arcs;
  std::int64_t max_id = -1;
  std::string line;
  std::int64_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    const auto tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#' || tokens[0].front() == '%')
      continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw GraphParseError("expected '<u> <v> [<p>]'", ln);
    }
    const std::int64_t u = ParseInt(tokens[0], ln);
    const std::int64_t v = ParseInt(tokens[1], ln);
    if (u < 0 || v < 0 || u > UINT32_MAX / 2 || v > UINT32_MAX / 2) {
      throw GraphParseError("vertex id out of range", ln);
    }
    Arc arc{static_cast<Element>(u), static_cast<Element>(v)};
    if (tokens.size() == 3) arc.probability = ParseProbability(tokens[2], ln);
    arcs.push_back(arc);
    max_id = std::max({max_id, u, v});
    ++stats.input_edges;
  }
  if (max_id < 0) throw GraphParseError("edge list contains no edges", 0);
  stats.lines = ln;
  Graph g(static_cast<int>(max_id + 1), std::move(arcs), symmetrize);
  IngestStats& out = g.mutable_stats();
  stats.self_loops_dropped = out.self_loops_dropped;
  stats.duplicates_collapsed = out.duplicates_collapsed;
  stats.symmetrized = symmetrize;
  out = std::move(stats);
  return g;
}

}  // namespace

const char* GraphFormatName(GraphFormat format) {
  switch (format) {
    case GraphFormat::kAuto:
      return "auto";
    case GraphFormat::kDimacs:
      return "dimacs";
    case GraphFormat::kEdgeList:
      return "edgelist";
  }
  return "unknown";
}

Graph::Graph(int num_vertices, std::vector<Arc> arcs, bool symmetrize)
    : n_(num_vertices) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<Arc> kept;
  kept.reserve(symmetrize ? 2 * arcs.size() : arcs.size());
  for (const Arc& a : arcs) {
    if (a.source >= static_cast<Element>(n_) ||
        a.target >= static_cast<Element>(n_)) {
      throw std::invalid_argument("arc endpoint outside the vertex range");
    }
    if (a.source == a.target) {
      ++stats_.self_loops_dropped;
      continue;
    }
    kept.push_back(a);
    if (symmetrize) kept.push_back({a.target, a.source, a.probability});
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  const auto same = [](const Arc& a, const Arc& b) {
    return a.source == b.source && a.target == b.target;
  };
  const auto last = std::unique(kept.begin(), kept.end(), same);
  stats_.duplicates_collapsed = std::distance(last, kept.end());
  kept.erase(last, kept.end());
  stats_.symmetrized = symmetrize;
  arcs_ = std::move(kept);

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Arc& a : arcs_) ++offsets_[a.source + 1];
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];

  std::vector<std::vector<Element>> adj(static_cast<std::size_t>(n_));
  for (const Arc& a : arcs_) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  neighbor_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    neighbor_offsets_[v + 1] = neighbor_offsets_[v] + list.size();
    neighbors_.insert(neighbors_.end(), list.begin(), list.end());
  }
  undirected_edges_ = static_cast<std::int64_t>(neighbors_.size()) / 2;
}

Graph ParseGraph(std::istream& in, GraphFormat format, bool symmetrize) {
  if (format == GraphFormat::kAuto) {
    // Peek at the first meaningful token without consuming the stream.
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::istringstream probe(text);
    format = GraphFormat::kEdgeList;
    std::string line;
    while (std::getline(probe, line)) {
      const auto tokens = Tokenize(line);
      if (tokens.empty()) continue;
      if (LooksLikeDimacs(tokens[0])) format = GraphFormat::kDimacs;
      break;
    }
    std::istringstream body(text);
    return format == GraphFormat::kDimacs ? ParseDimacs(body, symmetrize)
                                          : ParseEdgeList(body, symmetrize);
  }
  return format == GraphFormat::kDimacs ? ParseDimacs(in, symmetrize)
                                        : ParseEdgeList(in, symmetrize);
}

Graph IngestGraph(const std::string& path, GraphFormat format,
                  bool symmetrize) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open instance file '" + path + "'", 0);
  return ParseGraph(in, format, symmetrize);
}

void WriteDimacs(std::ostream& out, int num_vertices,
                 std::span<const std::pair<Element, Element>> edges,
                 std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p edge " << num_vertices << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::vector<std::pair<Element, Element>> GenerateModelRb(
    const ModelRbParams& params) {
  const int vars = params.variables;
  const int d = params.domain;
  if (vars < 2 || d < 1) {
    throw std::invalid_argument(
        "Model RB needs >= 2 variables and domain >= 1");
  }
  const auto forbidden = static_cast<int>(std::floor(params.tightness * d * d));
  if (forbidden < 1 || forbidden > d * d - 1) {
    throw std::invalid_argument("tightness leaves no tuple to forbid");
  }
  const std::size_t total = static_cast<std::size_t>(vars) * d;
  const std::int64_t clique_edges =
      static_cast<std::int64_t>(vars) * d * (d - 1) / 2;
  const std::int64_t max_edges =
      clique_edges +
      static_cast<std::int64_t>(vars) * (vars - 1) / 2 * (d * d - 1);
  if (params.target_edges < clique_edges || params.target_edges > max_edges) {
    throw std::invalid_argument("target edge count is not reachable");
  }

  Rng rng(params.seed);
  std::vector<int> hidden(static_cast<std::size_t>(vars));
  for (int& h : hidden) h = static_cast<int>(rng.UniformIndex(d));

  std::vector<char> adjacent(total * total, 0);
  std::vector<std::pair<Element, Element>> edges;
  auto add = [&](std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    if (adjacent[u * total + v]) return false;
    adjacent[u * total + v] = 1;
    edges.emplace_back(static_cast<Element>(u), static_cast<Element>(v));
    return true;
  };

  for (int x = 0; x < vars; ++x) {
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) add(x * d + a, x * d + b);
    }
  }

  std::vector<int> tuples;
  std::int64_t count = clique_edges;
  while (count < params.target_edges) {
    const int x = static_cast<int>(rng.UniformIndex(vars));
    int y = static_cast<int>(rng.UniformIndex(vars - 1));
    if (y >= x) ++y;
    tuples.clear();
    for (int t = 0; t < d * d; ++t) {
      if (t / d == hidden[x] && t % d == hidden[y]) continue;
      tuples.push_back(t);
    }
    rng.PartialShuffle(std::span<int>(tuples), forbidden);
    for (int k = 0; k < forbidden && count < params.target_edges; ++k) {
      const int a = tuples[k] / d;
      const int b = tuples[k] % d;
      if (add(static_cast<std::size_t>(x) * d + a,
              static_cast<std::size_t>(y) * d + b)) {
        ++count;
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace divsub
