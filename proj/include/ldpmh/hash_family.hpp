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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ldpmh/rng.hpp"
#include "ldpmh/user_vector.hpp"

namespace ldpmh {

/// A sketch: one bucket value in [0, num_buckets) per hash function.
struct Sketch {
  std::vector<std::uint32_t> values;
  std::uint32_t num_buckets = 0;

  std::uint32_t num_hashes() const noexcept {
    return static_cast<std::uint32_t>(values.size());
  }
  bool operator==(const Sketch&) const = default;
};

/// A family of `num_hashes` seeded range-B MinHash functions shared by all
/// users. Each slot composes a min-wise stage (argmin of a keyed 64-bit hash
/// over the item set, ties to the smaller item index) with a bucketing stage
/// (keyed hash of the winner, reduced to [0, num_buckets) by multiply-high).
/// Fully determined by (num_hashes, num_buckets, universe_size, seed);
/// immutable after construction and safe for concurrent reads.
class HashFamily {
 public:
  HashFamily(std::uint32_t num_hashes, std::uint32_t num_buckets,
             std::uint32_t universe_size, std::uint64_t seed)
      : num_hashes_(num_hashes),
        num_buckets_(num_buckets),
        universe_(universe_size),
        seed_(seed) {
    if (num_hashes == 0) {
      throw std::invalid_argument("need at least one hash function");
    }
    if (num_buckets < 2) {
      throw std::invalid_argument("range-B MinHash needs at least 2 buckets");
    }
    if (universe_size == 0) {
      throw std::invalid_argument("universe size must be positive");
    }
    min_seeds_.resize(num_hashes);
    bucket_seeds_.resize(num_hashes);
    for (std::uint32_t k = 0; k < num_hashes; ++k) {
      min_seeds_[k] = derive_seed(seed, 2 * std::uint64_t{k});
      bucket_seeds_[k] = derive_seed(seed, 2 * std::uint64_t{k} + 1);
    }
  }

  std::uint32_t num_hashes() const noexcept { return num_hashes_; }
  std::uint32_t num_buckets() const noexcept { return num_buckets_; }
  std::uint32_t universe_size() const noexcept { return universe_; }
  std::uint64_t seed() const noexcept { return seed_; }

  // Keyed item hash; premix(item) is seed-independent so callers hashing one
  // item under many seeds pay a single mix per (seed, item).
  static constexpr std::uint64_t premix(std::uint32_t item) noexcept {
    return mix64(item + kGoldenGamma);
  }
  static constexpr std::uint64_t keyed_hash(std::uint64_t seed,
                                            std::uint32_t item) noexcept {
    return mix64(premix(item) ^ seed);
  }

  /// The item of `x` minimizing slot `slot`'s keyed order.
  std::uint32_t min_item(std::uint32_t slot, const UserVector& x) const {
    check_input(x);
    if (slot >= num_hashes_) {
      throw std::invalid_argument("hash slot out of range");
    }
    const auto& items = x.items();
    const std::uint64_t seed = min_seeds_[slot];
    std::uint32_t best_item = items[0];
    std::uint64_t best_hash = keyed_hash(seed, items[0]);
    for (std::size_t i = 1; i < items.size(); ++i) {
      const std::uint64_t h = keyed_hash(seed, items[i]);
      if (h < best_hash) {
        best_hash = h;
        best_item = items[i];
      }
    }
    return best_item;
  }

  /// Applies all hash functions to `x`. O(num_hashes * |x|).
  Sketch sketch(const UserVector& x) const {
    check_input(x);
    const auto& items = x.items();
    std::vector<std::uint64_t> pre(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) pre[i] = premix(items[i]);

    Sketch out;
    out.num_buckets = num_buckets_;
    out.values.resize(num_hashes_);
    for (std::uint32_t k = 0; k < num_hashes_; ++k) {
      const std::uint64_t seed = min_seeds_[k];
      std::size_t arg = 0;
      std::uint64_t best = mix64(pre[0] ^ seed);
      for (std::size_t i = 1; i < pre.size(); ++i) {
        const std::uint64_t h = mix64(pre[i] ^ seed);
        if (h < best) {
          best = h;
          arg = i;
        }
      }
      const std::uint64_t bucket_hash = mix64(pre[arg] ^ bucket_seeds_[k]);
      out.values[k] = reduce_to_bucket(bucket_hash, num_buckets_);
    }
    return out;
  }

  static constexpr std::uint32_t reduce_to_bucket(
      std::uint64_t hash, std::uint32_t num_buckets) noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(hash) * num_buckets) >> 64);
  }

 private:
  void check_input(const UserVector& x) const {
    if (x.empty()) {
      throw std::invalid_argument("empty set has no MinHash");
    }
    if (x.universe_size() > universe_) {
      throw std::invalid_argument("vector universe exceeds family universe");
    }
  }

  std::uint32_t num_hashes_;
  std::uint32_t num_buckets_;
  std::uint32_t universe_;
  std::uint64_t seed_;
  std::vector<std::uint64_t> min_seeds_;
  std::vector<std::uint64_t> bucket_seeds_;
};

}  // namespace ldpmh
