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
#include <stdexcept>
#include <vector>

#include "wesketch/prf.hpp"

namespace wesketch {

// Probabilistic counter with geometric update probability. Each copy holds
// a level c representing ((1+a)^c - 1)/a and bumps with probability
// (1+a)^(-c) per increment; the reported estimate is the lower median over
// independent copies. Per copy, at most log_{1+a}(1 + a*m) level changes
// can occur over m increments.
class MorrisCounter {
 public:
  // Accuracy-driven sizing: base a = eps^2/8 with 2*ceil(ln(1/delta)) + 1
  // median-combined copies.
  MorrisCounter(double eps, double delta, std::uint64_t seed)
      : MorrisCounter(eps * eps / 8.0,
                      2 * static_cast<int>(std::ceil(std::log(1.0 / delta))) + 1,
                      seed) {}

  // Direct sizing, e.g. base 1.0 for a coarse 2-approximation.
  static MorrisCounter with_base(double base, int copies, std::uint64_t seed) {
    return MorrisCounter(base, copies, seed);
  }

  // Returns true iff at least one copy's level changed.
  bool increment() {
    bool changed = false;
    for (Copy& c : copies_) {
      if (c.rng.next_double() < c.threshold) {
        ++c.level;
        c.threshold *= inv_base_factor_;
        ++level_changes_;
        changed = true;
      }
    }
    return changed;
  }

  double estimate() const {
    std::vector<double> vals;
    vals.reserve(copies_.size());
    for (const Copy& c : copies_) vals.push_back(level_value(c.level));
    return lower_median(std::move(vals));
  }

  double base() const { return base_; }
  int copy_count() const { return static_cast<int>(copies_.size()); }
  std::uint64_t level_changes() const { return level_changes_; }
  std::uint32_t level(int copy) const {
    return copies_[static_cast<std::size_t>(copy)].level;
  }

 private:
  MorrisCounter(double base, int copies, std::uint64_t seed)
      : base_(base),
        log1p_base_(std::log1p(base)),
        inv_base_factor_(1.0 / (1.0 + base)) {
    if (!(base > 0.0))
      throw std::invalid_argument("MorrisCounter: base must be > 0");
    if (copies < 1)
      throw std::invalid_argument("MorrisCounter: need at least one copy");
    copies_.reserve(static_cast<std::size_t>(copies));
    Rng seeder(seed);
    for (int i = 0; i < copies; ++i)
      copies_.push_back(Copy{Rng(seeder.next_u64()), 0, 1.0});
  }

  double level_value(std::uint32_t level) const {
    return std::expm1(static_cast<double>(level) * log1p_base_) / base_;
  }

  struct Copy {
    Rng rng;
    std::uint32_t level;
    double threshold;  // (1+a)^(-level), kept incrementally
  };

  double base_;
  double log1p_base_;
  double inv_base_factor_;
  std::vector<Copy> copies_;
  std::uint64_t level_changes_ = 0;
};

// Monotone accumulator for non-negative real increments. The represented
// value is ((1+a)^c - 1)/a for an integer level c; each add rounds the new
// target value to one of the two neighbouring levels so that the expected
// represented value equals the target exactly. Levels never decrease.
class ApproxAccumulator {
 public:
  ApproxAccumulator(double base, std::uint64_t seed)
      : base_(base), log1p_base_(std::log1p(base)), rng_(seed) {
    if (!(base > 0.0))
      throw std::invalid_argument("ApproxAccumulator: base must be > 0");
  }

  // Returns true iff the level changed.
  bool add(double w) {
    if (w < 0.0)
      throw std::invalid_argument("ApproxAccumulator: negative increment");
    if (w == 0.0) return false;
    const double target = value_ + w;
    std::uint64_t lo =
        static_cast<std::uint64_t>(std::floor(std::log1p(base_ * target) / log1p_base_));
    if (lo < level_) lo = level_;
    double vlo = level_value(lo);
    double vhi = level_value(lo + 1);
    // Floating guards: keep target inside [vlo, vhi).
    while (target < vlo && lo > level_) {
      --lo;
      vhi = vlo;
      vlo = level_value(lo);
    }
    while (target >= vhi) {
      ++lo;
      vlo = vhi;
      vhi = level_value(lo + 1);
    }
    const double q = (target - vlo) / (vhi - vlo);
    const std::uint64_t next = lo + (rng_.next_double() < q ? 1 : 0);
    if (next == level_) return false;
    level_ = next;
    value_ = level_value(next);
    ++level_changes_;
    return true;
  }

  double value() const { return value_; }
  std::uint64_t level() const { return level_; }
  std::uint64_t level_changes() const { return level_changes_; }
  double base() const { return base_; }

 private:
  double level_value(std::uint64_t level) const {
    return std::expm1(static_cast<double>(level) * log1p_base_) / base_;
  }

  double base_;
  double log1p_base_;
  std::uint64_t level_ = 0;
  double value_ = 0.0;
  std::uint64_t level_changes_ = 0;
  Rng rng_;
};

}  // namespace wesketch
