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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldpmh {

/// A user's item set over a bounded universe: a sorted, duplicate-free list
/// of item indices in [0, universe_size). Construction normalizes the input
/// order, so any permutation of the same items compares (and sketches) equal.
class UserVector {
 public:
  UserVector(std::vector<std::uint32_t> items, std::uint32_t universe_size)
      : items_(std::move(items)), universe_(universe_size) {
    if (universe_ == 0) {
      throw std::invalid_argument("universe size must be positive");
    }
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (!items_.empty() && items_.back() >= universe_) {
      throw std::invalid_argument("item index " +
                                  std::to_string(items_.back()) +
                                  " outside universe of size " +
                                  std::to_string(universe_));
    }
  }

  const std::vector<std::uint32_t>& items() const noexcept { return items_; }
  std::uint32_t universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  bool operator==(const UserVector&) const = default;

 private:
  std::vector<std::uint32_t> items_;
  std::uint32_t universe_;
};

/// Exact Jaccard similarity |a ∩ b| / |a ∪ b|. Undefined (throws) only when
/// both sets are empty; one empty set gives 0.
inline double jaccard(const UserVector& a, const UserVector& b) {
  if (a.empty() && b.empty()) {
    throw std::invalid_argument("Jaccard undefined on two empty sets");
  }
  const auto& xs = a.items();
  const auto& ys = b.items();
  std::size_t i = 0, j = 0, shared = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] == ys[j]) {
      ++shared;
      ++i;
      ++j;
    } else if (xs[i] < ys[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const double unions =
      static_cast<double>(xs.size() + ys.size() - shared);
  return static_cast<double>(shared) / unions;
}

}  // namespace ldpmh
