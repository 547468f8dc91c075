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

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wesketch {

// 64-bit finalizer (murmur3 style). Full avalanche, bijective.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xFF51AFD7ED558CCDULL;
  z ^= z >> 33;
  z *= 0xC4CEB9FE1A85EC53ULL;
  z ^= z >> 33;
  return z;
}

// Keyed pseudo-random function. Same (seed, tag, input) always maps to the
// same output; distinct inputs behave as independent uniforms for testing
// purposes. All "uniformly at random" draws in the library go through this
// so that every run is reproducible from a single seed.
class SeededPrf {
 public:
  SeededPrf() : key_(0) {}
  explicit SeededPrf(std::uint64_t seed, std::string_view tag = {}) {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a over the tag
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ULL;
    }
    key_ = mix64(seed ^ mix64(h + 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t word(std::uint64_t input) const {
    return mix64(key_ ^ mix64(input + 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t word2(std::uint64_t a, std::uint64_t b) const {
    return mix64(word(a) ^ mix64(b + 0xD1B54A32D192ED03ULL));
  }

  // Uniform in [0, 1) with 53-bit precision.
  double uniform(std::uint64_t input) const {
    return static_cast<double>(word(input) >> 11) * 0x1.0p-53;
  }

  double uniform2(std::uint64_t a, std::uint64_t b) const {
    return static_cast<double>(word2(a, b) >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0, 1).
  double uniform_open2(std::uint64_t a, std::uint64_t b) const {
    return (static_cast<double>(word2(a, b) >> 11) + 0.5) * 0x1.0p-53;
  }

  // Independent child PRF for a subcomponent.
  SeededPrf derive(std::string_view tag, std::uint64_t index = 0) const {
    return SeededPrf(word(index), tag);
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
};

// Sequential deterministic generator (splitmix64). Used as the random tape
// for decisions that consume fresh randomness per event, e.g. Morris
// counter increments and reservoir acceptance.
class Rng {
 public:
  Rng() : state_(0x853C49E6748FEA9BULL) {}
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling on the top bits; bias-free and portable.
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Lower median (ties broken toward the smaller element); fixed convention
// so results are deterministic for even counts.
template <typename T>
T lower_median(std::vector<T> v) {
  const std::size_t k = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k),
                   v.end());
  return v[k];
}

}  // namespace wesketch
