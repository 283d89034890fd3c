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

#include "divsub/problems.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "divsub/random.h"

namespace divsub {
namespace {

// Reachability tables larger than this fall back to per-call BFS.
constexpr std::size_t kMaxReachBytes = std::size_t{256} << 20;

std::size_t WordsFor(std::size_t bits) { return (bits + 63) / 64; }

bool TestBit(std::span<const std::uint64_t> bits, std::size_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1U;
}

void SetBit(std::span<std::uint64_t> bits, std::size_t i) {
  bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

// Reachable set of every vertex in one live-edge graph; row v of `out`
// (`words` wide) receives the set of v. Tarjan's algorithm emits strongly
// connected components sinks first, so a component's set is its members
// plus the sets of components emitted before it.
void LiveReachability(const Graph& g, std::span<const std::uint64_t> live,
                      std::size_t words, std::span<std::uint64_t> out) {
  const int n = g.num_vertices();
  const auto arcs = g.arcs();
  const auto row = [&](Element v) { return out.subspan(v * words, words); };
  const auto live_targets = [&](Element v, auto&& fn) {
    const auto adj = g.OutArcs(v);
    const std::size_t base = static_cast<std::size_t>(adj.data() - arcs.data());
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (TestBit(live, base + k)) fn(adj[k].target);
    }
  };

  std::vector<int> index(n, -1), low(n, 0), root(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Element> stack, members;
  struct Frame {
    Element v;
    std::size_t next;
  };
  std::vector<Frame> calls;
  int counter = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    const auto open = [&](Element v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = 1;
      calls.push_back({v, 0});
    };
    open(static_cast<Element>(s));
    while (!calls.empty()) {
      const Element v = calls.back().v;
      const auto adj = g.OutArcs(v);
      const std::size_t base =
          static_cast<std::size_t>(adj.data() - arcs.data());
      if (calls.back().next < adj.size()) {
        const std::size_t k = calls.back().next++;
        if (!TestBit(live, base + k)) continue;
        const Element w = adj[k].target;
        if (index[w] < 0) {
          open(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const Element parent = calls.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] != index[v]) continue;

      members.clear();
      Element w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        root[w] = static_cast<int>(v);
        members.push_back(w);
      } while (w != v);
      const auto set = row(v);
      for (Element u : members) {
        SetBit(set, u);
        live_targets(u, [&](Element x) {
          if (root[x] == static_cast<int>(v)) return;
          const auto other = row(static_cast<Element>(root[x]));
          for (std::size_t i = 0; i < words; ++i) set[i] |= other[i];
        });
      }
      for (Element u : members) {
        if (u != v) std::copy(set.begin(), set.end(), row(u).begin());
      }
    }
  }
}

}  // namespace

std::vector<double> CoverageInstance::SetCosts() const {
  std::vector<double> costs;
  costs.reserve(sets.size());
  for (const auto& s : sets) costs.push_back(static_cast<double>(s.size()));
  return costs;
}

const char* CoverageRuleName(CoverageRule rule) {
  return rule == CoverageRule::kHigherNumber ? "higher" : "closed";
}

CoverageRule ParseCoverageRule(const std::string& name) {
  if (name == "higher") return CoverageRule::kHigherNumber;
  if (name == "closed") return CoverageRule::kClosedNeighborhood;
  throw std::invalid_argument("unknown coverage rule '" + name + "'");
}

CoverageInstance CoverageFromGraph(const Graph& g, CoverageRule rule) {
  CoverageInstance inst;
  inst.universe_size = g.num_vertices();
  inst.sets.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int i = 0; i < g.num_vertices(); ++i) {
    auto& set = inst.sets[i];
    set.push_back(static_cast<Element>(i));
    for (Element j : g.Neighbors(static_cast<Element>(i))) {
      if (rule == CoverageRule::kClosedNeighborhood ||
          j > static_cast<Element>(i)) {
        set.push_back(j);
      }
    }
    std::sort(set.begin(), set.end());
  }
  return inst;
}

std::int64_t CoverageValue(const CoverageInstance& inst, const Solution& x) {
  std::vector<char> covered(static_cast<std::size_t>(inst.universe_size), 0);
  std::int64_t count = 0;
  for (Element i : x.members()) {
    for (Element u : inst.sets.at(i)) {
      if (!covered[u]) {
        covered[u] = 1;
        ++count;
      }
    }
  }
  return count;
}

CoverageOracle::CoverageOracle(CoverageInstance inst)
    : instance_(std::move(inst)),
      words_(WordsFor(static_cast<std::size_t>(instance_.universe_size))) {
  if (instance_.sets.empty()) {
    throw std::invalid_argument("coverage instance has no sets");
  }
  bits_.assign(instance_.sets.size() * words_, 0);
  for (std::size_t i = 0; i < instance_.sets.size(); ++i) {
    std::span<std::uint64_t> row(bits_.data() + i * words_, words_);
    for (Element u : instance_.sets[i]) {
      if (u >= static_cast<Element>(instance_.universe_size)) {
        throw std::invalid_argument("coverage set element outside universe");
      }
      SetBit(row, u);
    }
  }
}

double CoverageOracle::Evaluate(std::span<const Element> members) const {
  thread_local std::vector<std::uint64_t> acc;
  acc.assign(words_, 0);
  for (Element i : members) {
    const std::uint64_t* row = bits_.data() + std::size_t{i} * words_;
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= row[w];
  }
  std::int64_t count = 0;
  for (std::uint64_t w : acc) count += std::popcount(w);
  return static_cast<double>(count);
}

CascadeEvaluator::CascadeEvaluator(std::shared_ptr<const Graph> graph,
                                   CascadeParams params)
    : graph_(std::move(graph)),
      params_(params),
      words_(WordsFor(static_cast<std::size_t>(graph_->num_vertices()))) {
  if (params_.samples < 1) {
    throw std::invalid_argument("cascade needs at least one simulation");
  }
  if (!(params_.default_probability >= 0.0 &&
        params_.default_probability <= 1.0)) {
    throw std::invalid_argument("default probability outside [0, 1]");
  }
  if (params_.fresh_samples) return;

  live_.reserve(static_cast<std::size_t>(params_.samples));
  for (int r = 0; r < params_.samples; ++r) {
    live_.push_back(SampleLiveArcs(
        Hash64({params_.evaluation_seed, static_cast<std::uint64_t>(r)})));
  }

  const std::size_t n = static_cast<std::size_t>(graph_->num_vertices());
  const std::size_t bytes = live_.size() * n * words_ * sizeof(std::uint64_t);
  if (bytes > kMaxReachBytes) return;

  reach_.assign(live_.size() * n * words_, 0);
  for (std::size_t r = 0; r < live_.size(); ++r) {
    LiveReachability(
        *graph_, live_[r], words_,
        std::span<std::uint64_t>(reach_).subspan(r * n * words_, n * words_));
  }
}

double CascadeEvaluator::ArcProbability(const Arc& a) const {
  return std::isnan(a.probability) ? params_.default_probability
                                   : a.probability;
}

std::vector<std::uint64_t> CascadeEvaluator::SampleLiveArcs(
    std::uint64_t seed) const {
  const auto arcs = graph_->arcs();
  std::vector<std::uint64_t> mask(WordsFor(arcs.size()), 0);
  Rng rng(seed);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (rng.Bernoulli(ArcProbability(arcs[k]))) SetBit(mask, k);
  }
  return mask;
}

std::int64_t CascadeEvaluator::Reach(
    std::span<const Element> members,
    std::span<const std::uint64_t> live) const {
  thread_local std::vector<std::uint64_t> seen;
  thread_local std::vector<Element> stack;
  seen.assign(words_, 0);
  stack.clear();
  std::int64_t count = 0;
  for (Element v : members) {
    if (TestBit(seen, v)) continue;
    SetBit(seen, v);
    ++count;
    stack.push_back(v);
  }
  const auto arcs = graph_->arcs();
  while (!stack.empty()) {
    const Element u = stack.back();
    stack.pop_back();
    const auto out = graph_->OutArcs(u);
    const std::size_t base = static_cast<std::size_t>(out.data() - arcs.data());
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!TestBit(live, base + k)) continue;
      const Element w = out[k].target;
      if (TestBit(seen, w)) continue;
      SetBit(seen, w);
      ++count;
      stack.push_back(w);
    }
  }
  return count;
}

double CascadeEvaluator::Evaluate(std::span<const Element> members) const {
  for (Element v : members) {
    if (v >= static_cast<Element>(graph_->num_vertices())) {
      throw std::invalid_argument("seed vertex outside the graph");
    }
  }
  // The integer total keeps equal spreads bit-identical as doubles.
  std::int64_t total = 0;
  const std::size_t n = static_cast<std::size_t>(graph_->num_vertices());
  if (params_.fresh_samples) {
    const std::uint64_t call = fresh_calls_.fetch_add(1);
    for (int r = 0; r < params_.samples; ++r) {
      const auto live = SampleLiveArcs(Hash64(
          {params_.evaluation_seed, call, static_cast<std::uint64_t>(r)}));
      total += Reach(members, live);
    }
  } else if (!reach_.empty()) {
    thread_local std::vector<std::uint64_t> acc;
    for (std::size_t r = 0; r < live_.size(); ++r) {
      acc.assign(words_, 0);
      for (Element v : members) {
        const std::uint64_t* row = reach_.data() + (r * n + v) * words_;
        for (std::size_t w = 0; w < words_; ++w) acc[w] |= row[w];
      }
      for (std::uint64_t w : acc) total += std::popcount(w);
    }
  } else {
    for (const auto& live : live_) total += Reach(members, live);
  }
  return static_cast<double>(total) / params_.samples;
}

double CascadeSpread(const CascadeEvaluator& eval, const Solution& x) {
  return eval.Evaluate(x);
}

OneMaxOracle::OneMaxOracle(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set must be non-empty");
}

CostModel DegreeCostModel(const Graph& g, double budget, double margin) {
  std::vector<double> costs(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    costs[v] = g.OutDegree(static_cast<Element>(v)) + 1.0;
  }
  return CostModel::Knapsack(std::move(costs), budget, margin);
}

CostModel CoverageCostModel(const CoverageInstance& inst, double budget,
                            double margin) {
  return CostModel::Knapsack(inst.SetCosts(), budget, margin);
}

}  // namespace divsub
