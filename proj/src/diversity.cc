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

#include "divsub/diversity.h"

#include <cmath>
#include <stdexcept>

namespace divsub {

double EntropyTerm(int count, int mu) {
  if (count == 0 || count == mu) return 0.0;
  const double p = static_cast<double>(count) / mu;
  return -p * std::log2(p);
}

double Entropy(std::span<const int> counts, int mu) {
  if (mu < 1) throw std::invalid_argument("entropy needs mu >= 1");
  double h = 0.0;
  for (int c : counts) h += EntropyTerm(c, mu);
  return h;
}

double Entropy(const Population& pop) {
  return Entropy(pop.occurrence_counts(), static_cast<int>(pop.size()));
}

double EntropyWithout(const Population& pop, std::size_t index) {
  if (index >= pop.size()) {
    throw std::out_of_range("removal index out of range");
  }
  if (pop.size() < 2) {
    throw std::invalid_argument("removal would leave an empty population");
  }
  const int mu = static_cast<int>(pop.size()) - 1;
  const auto counts = pop.occurrence_counts();
  double h = Entropy(counts, mu);
  for (Element e : pop[index].members()) {
    h += EntropyTerm(counts[e] - 1, mu) - EntropyTerm(counts[e], mu);
  }
  return h;
}

double DgsEntropyUpperBound(int n, double budget, double margin) {
  if (margin == 0.0) return 0.0;
  if (!(margin > 0.0) || margin > budget || budget > n) {
    throw std::invalid_argument("entropy bound needs 0 <= m <= B <= n");
  }
  return -margin * std::log2(margin / (n - budget + margin));
}

double OneMaxMaxEntropy(int n, int budget, int mu) {
  if (n < 1 || budget < 1 || budget > n || mu < 1) {
    throw std::invalid_argument("OneMax entropy needs 1 <= B <= n, mu >= 1");
  }
  const double ratio = static_cast<double>(budget) / n;
  return -budget * std::log2(ratio);
}

EntropyTracker::EntropyTracker(const Population& pop)
    : mu_(static_cast<int>(pop.size())) {
  if (mu_ < 1) throw std::invalid_argument("empty population");
  terms_.resize(static_cast<std::size_t>(mu_) + 2);
  for (int c = 0; c <= mu_ + 1; ++c) {
    if (c == 0 || c == mu_) {
      terms_[c] = 0.0;
    } else {
      // c == mu + 1 only occurs transiently in the working population.
      const double p = static_cast<double>(c) / mu_;
      terms_[c] = -p * std::log2(p);
    }
  }
  value_ = Entropy(pop);
}

double EntropyTracker::AdditionDelta(std::span<const int> counts,
                                     const Solution& s) const {
  double delta = 0.0;
  for (Element e : s.members()) delta += Term(counts[e] + 1) - Term(counts[e]);
  return delta;
}

double EntropyTracker::RemovalDelta(std::span<const int> counts,
                                    const Solution& s) const {
  double delta = 0.0;
  for (Element e : s.members()) delta += Term(counts[e] - 1) - Term(counts[e]);
  return delta;
}

void EntropyTracker::Commit(double value, const Population& pop) {
  ++commits_;
  value_ = commits_ % kRecomputeInterval == 0 ? Entropy(pop) : value;
}

}  // namespace divsub
