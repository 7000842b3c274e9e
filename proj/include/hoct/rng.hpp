/*
Copyright 2026 the hoct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstdint>

namespace hoct {

/// Deterministic PRNG (splitmix64 core). std::uniform_int_distribution is not
/// reproducible across standard libraries, so all randomized components draw
/// through this type; identical seeds give identical streams on every
/// platform. Substreams derived from (seed, index) keep parallel walks
/// independent of scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n). n must be positive. Rejection over the top
  /// 64-bit range keeps the draw exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool coin() { return (next_u64() & 1ULL) != 0; }

  /// Derives an independent substream for (base seed, stream index).
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
    return Rng(mixer.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace hoct
