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

#ifndef DIVSUB_RANDOM_H_
#define DIVSUB_RANDOM_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace divsub {

// One step of the SplitMix64 sequence. Used for seed derivation only.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable 64-bit hash of a sequence of integers:
//   h_0 = SplitMix64(len), h_{k+1} = SplitMix64(h_k ^ SplitMix64(v_k)).
// The value is part of the on-disk reproducibility contract; do not change.
inline std::uint64_t Hash64(std::initializer_list<std::uint64_t> values) {
  std::uint64_t h = SplitMix64(values.size());
  for (std::uint64_t v : values) h = SplitMix64(h ^ SplitMix64(v));
  return h;
}

// Seeded random source. Wraps mt19937_64 and implements the few
// distributions we need directly, so sequences are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t UniformIndex(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps this unbiased.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Failures before the first success of Bernoulli(p) trials, p in (0, 1].
  // Saturates at UINT64_MAX.
  std::uint64_t Geometric(double p) {
    if (p >= 1.0) return 0;
    const double u = 1.0 - Uniform01();  // (0, 1]
    const double k = std::floor(std::log(u) / std::log1p(-p));
    return k >= 0x1.0p64 ? UINT64_MAX : static_cast<std::uint64_t>(k);
  }

  // Moves a uniformly random k-subset of `items` into its first k slots
  // (partial Fisher-Yates).
  template <typename T>
  void PartialShuffle(std::span<T> items, std::size_t k) {
    for (std::size_t i = 0; i < k && i + 1 < items.size(); ++i) {
      const std::size_t j = i + UniformIndex(items.size() - i);
      std::swap(items[i], items[j]);
    }
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    PartialShuffle(items, items.size());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace divsub

#endif  // DIVSUB_RANDOM_H_
