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

// Entropy diversity of a population:
//
//   H(P) = -sum_i p_i log2 p_i,   p_i = (#solutions containing i) / mu
//
// with 0 log 0 = 0. Elements in no solution or in every solution add 0.

#ifndef DIVSUB_DIVERSITY_H_
#define DIVSUB_DIVERSITY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "divsub/core.h"

namespace divsub {

// -(c/mu) log2(c/mu); 0 for c == 0 or c == mu.
double EntropyTerm(int count, int mu);

// Entropy of a count vector with denominator mu (>= 1).
double Entropy(std::span<const int> counts, int mu);

// Entropy of a population, denominator = population size.
double Entropy(const Population& pop);

// Entropy of `pop` with solution `index` deleted, using denominator
// pop.size() - 1. Only the terms touched by the removed solution are
// adjusted. Throws std::out_of_range for a bad index and
// std::invalid_argument if the population has fewer than 2 solutions.
double EntropyWithout(const Population& pop, std::size_t index);

// Ceiling on the entropy of any population produced by diversifying greedy
// sampling: -m log2(m / (n - B + m)). Returns 0 for m == 0.
double DgsEntropyUpperBound(int n, double budget, double margin);

// Entropy of the population spreading mu*B OneMax slots equally over n
// elements: -B log2(B / n).
double OneMaxMaxEntropy(int n, int budget, int mu);

// Incremental entropy bookkeeping for steady-state survivor selection on a
// mu-sized population that temporarily grows to mu + 1.
//
// Terms use a fixed denominator mu, so the entropy of the (mu+1)-working
// population minus any one member is the current value adjusted by the
// members of the added and removed solutions only. The stored value is
// recomputed from scratch every kRecomputeInterval commits.
class EntropyTracker {
 public:
  static constexpr std::int64_t kRecomputeInterval = 4096;

  // pop must have exactly mu solutions.
  explicit EntropyTracker(const Population& pop);

  int mu() const { return mu_; }
  double value() const { return value_; }

  double Term(int count) const {
    return terms_[static_cast<std::size_t>(count)];
  }

  // Change in entropy from adding `s` to a population with `counts`
  // (counts taken before the addition).
  double AdditionDelta(std::span<const int> counts, const Solution& s) const;
  // Change in entropy from removing `s` from a population with `counts`
  // (counts taken before the removal, i.e. including s).
  double RemovalDelta(std::span<const int> counts, const Solution& s) const;

  // Records the entropy of the new mu-sized population `pop`.
  void Commit(double value, const Population& pop);

  std::int64_t commits() const { return commits_; }

 private:
  int mu_;
  std::vector<double> terms_;  // terms_[c] for c in [0, mu + 1]
  double value_ = 0.0;
  std::int64_t commits_ = 0;
};

}  // namespace divsub

#endif  // DIVSUB_DIVERSITY_H_
