// Copyright 2026 The DocDjinn Authors.
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

#ifndef DOCDJINN_COMMON_RNG_H_
#define DOCDJINN_COMMON_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace docdjinn {

// Seeded random stream. The standard distributions are implementation
// defined, so the derived draws are written out here to keep outputs
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n). Rejection sampling avoids modulo bias.
  uint64_t UniformIndex(uint64_t n);

  // Uniform integer in [lo, hi] inclusive.
  int UniformInt(int lo, int hi);

  // Standard normal via Box-Muller; one of the pair is cached.
  double Normal();

  bool Bernoulli(double p) { return Uniform() < p; }

  // Draws an index with probability proportional to `weights`.
  size_t Categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Mixes a seed with a stream identifier (splitmix64 finalizer).
uint64_t MixSeed(uint64_t seed, uint64_t stream);

// FNV-1a over bytes; stable across platforms.
uint64_t StableHash(std::string_view bytes);

}  // namespace docdjinn

#endif  // DOCDJINN_COMMON_RNG_H_
