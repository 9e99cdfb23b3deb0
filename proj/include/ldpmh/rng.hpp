// Copyright 2026 The ldp-minhash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>

namespace ldpmh {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer; full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Counter-based stream splitting: distinct indices give independent seeds,
// so derived generators never share a stream.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::uint64_t index) noexcept {
  return mix64(base + (index + 1) * kGoldenGamma);
}

// Order-dependent combinator for folding several words into one seed.
constexpr std::uint64_t combine_seed(std::uint64_t acc,
                                     std::uint64_t word) noexcept {
  return mix64(acc ^ (word + kGoldenGamma + (acc << 6) + (acc >> 2)));
}

constexpr std::uint64_t combine_seed(std::uint64_t acc, double word) noexcept {
  return combine_seed(acc, std::bit_cast<std::uint64_t>(word));
}

// splitmix64 engine. Output sequence is fixed by the seed alone and is
// identical across platforms; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~0ULL; }

  constexpr result_type operator()() noexcept {
    return mix64(state_ += kGoldenGamma);
  }

 private:
  std::uint64_t state_;
};

// Uniform double in the open interval (0, 1), symmetric about 1/2.
// Consumes exactly one 64-bit word.
template <class URBG>
double uniform_unit(URBG& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform integer in [0, n) via 128-bit multiply-high reduction; no modulo
// bias, residual bias O(n / 2^64). Consumes exactly one 64-bit word.
template <class URBG>
std::uint64_t uniform_below(URBG& gen, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(gen()) * n) >> 64);
}

}  // namespace ldpmh
