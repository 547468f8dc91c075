// Copyright 2026 The Wesketch Authors.
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

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wesketch/prf.hpp"

namespace wesketch {

// One stream event: 1-based time index and an item id in [1, n].
struct Update {
  std::uint64_t t = 0;
  std::uint64_t item = 0;
};

// Insertion-only stream over universe [1, n]; length m = items.size().
struct Stream {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> items;

  std::uint64_t m() const { return items.size(); }

  bool operator==(const Stream& other) const {
    return n == other.n && items == other.items;
  }
};

// Nested subsampling rate at level ell >= 1: min(1, 2^(1-ell)).
inline double subsample_rate(int level) {
  return level <= 1 ? 1.0 : std::ldexp(1.0, 1 - level);
}

// Item-keyed nested membership: true iff prf(item) < min(1, 2^(1-level)).
// Membership at level+1 implies membership at level since the same uniform
// value is compared against a halving threshold.
inline bool universe_member(const SeededPrf& prf, std::uint64_t item,
                            int level) {
  if (level <= 1) return true;
  return prf.uniform(item) < subsample_rate(level);
}

// Time-index-keyed nested membership, same construction.
inline bool time_member(const SeededPrf& prf, std::uint64_t t, int level) {
  if (level <= 1) return true;
  return prf.uniform(t) < subsample_rate(level);
}

// Deepest level x in [1, max_level] such that the key is still a member;
// membership then holds exactly for levels 1..x.
inline int deepest_member_level(const SeededPrf& prf, std::uint64_t key,
                                int max_level) {
  const double u = prf.uniform(key);
  int x = 1;
  while (x < max_level && u < subsample_rate(x + 1)) ++x;
  return x;
}

}  // namespace wesketch
