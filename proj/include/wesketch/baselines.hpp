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
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wesketch/meter.hpp"
#include "wesketch/prf.hpp"

namespace wesketch {

// Textbook comparators, instrumented with the same state-change meter as
// the sampling sketches. They mutate their tables on essentially every
// update, which is exactly the contrast the experiments measure.

class MisraGries {
 public:
  MisraGries(std::uint64_t k, StateMeter* meter) : k_(k), meter_(meter) {
    if (k < 1) throw std::invalid_argument("MisraGries: k must be >= 1");
    counters_.reserve(k);
  }

  void process(std::uint64_t t, std::uint64_t item) {
    (void)t;
    if (auto it = counters_.find(item); it != counters_.end()) {
      ++it->second;
      meter_->mark_dirty();
    } else if (counters_.size() < k_) {
      counters_.emplace(item, 1);
      meter_->add_words(1);
      meter_->mark_dirty();
    } else {
      for (auto it = counters_.begin(); it != counters_.end();) {
        if (--it->second == 0) {
          it = counters_.erase(it);
          meter_->release_words(1);
        } else {
          ++it;
        }
      }
      meter_->mark_dirty();
    }
    meter_->commit_update();
  }

  double estimate(std::uint64_t item) const {
    auto it = counters_.find(item);
    return it == counters_.end() ? 0.0 : static_cast<double>(it->second);
  }

  std::vector<std::pair<std::uint64_t, double>> report(double eps,
                                                       double norm) const {
    std::vector<std::pair<std::uint64_t, double>> out;
    for (const auto& [item, count] : counters_)
      if (static_cast<double>(count) >= eps * norm)
        out.emplace_back(item, static_cast<double>(count));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t size() const { return counters_.size(); }

 private:
  std::uint64_t k_;
  StateMeter* meter_;
  std::unordered_map<std::uint64_t, std::uint64_t> counters_;
};

class SpaceSaving {
 public:
  SpaceSaving(std::uint64_t k, StateMeter* meter) : k_(k), meter_(meter) {
    if (k < 1) throw std::invalid_argument("SpaceSaving: k must be >= 1");
    counters_.reserve(k);
  }

  void process(std::uint64_t t, std::uint64_t item) {
    (void)t;
    if (auto it = counters_.find(item); it != counters_.end()) {
      ++it->second;
    } else if (counters_.size() < k_) {
      counters_.emplace(item, 1);
      meter_->add_words(1);
    } else {
      // Evict a minimum-count entry (smallest id on ties) and inherit its
      // count plus one.
      auto min_it = counters_.begin();
      for (auto it = counters_.begin(); it != counters_.end(); ++it)
        if (it->second < min_it->second ||
            (it->second == min_it->second && it->first < min_it->first))
          min_it = it;
      const std::uint64_t inherited = min_it->second + 1;
      counters_.erase(min_it);
      counters_.emplace(item, inherited);
    }
    meter_->mark_dirty();
    meter_->commit_update();
  }

  double estimate(std::uint64_t item) const {
    auto it = counters_.find(item);
    return it == counters_.end() ? 0.0 : static_cast<double>(it->second);
  }

  std::vector<std::pair<std::uint64_t, double>> report(double eps,
                                                       double norm) const {
    std::vector<std::pair<std::uint64_t, double>> out;
    for (const auto& [item, count] : counters_)
      if (static_cast<double>(count) >= eps * norm)
        out.emplace_back(item, static_cast<double>(count));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t size() const { return counters_.size(); }

 private:
  std::uint64_t k_;
  StateMeter* meter_;
  std::unordered_map<std::uint64_t, std::uint64_t> counters_;
};

class CountMin {
 public:
  CountMin(std::uint64_t width, std::uint64_t depth, std::uint64_t seed,
           StateMeter* meter)
      : width_(width), depth_(depth), prf_(seed, "count-min"), meter_(meter) {
    if (width < 1 || depth < 1)
      throw std::invalid_argument("CountMin: width and depth must be >= 1");
    table_.assign(width * depth, 0);
    meter_->add_words(width * depth);
  }

  void process(std::uint64_t t, std::uint64_t item) {
    (void)t;
    for (std::uint64_t row = 0; row < depth_; ++row) {
      ++table_[row * width_ + prf_.word2(row, item) % width_];
    }
    meter_->mark_dirty();
    meter_->commit_update();
  }

  // Never undercounts.
  double estimate(std::uint64_t item) const {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t row = 0; row < depth_; ++row)
      best = std::min(best, table_[row * width_ + prf_.word2(row, item) % width_]);
    return static_cast<double>(best);
  }

  // Point queries cannot enumerate; callers supply candidate items.
  std::vector<std::pair<std::uint64_t, double>> report(
      double eps, double norm,
      const std::vector<std::uint64_t>& candidates) const {
    std::vector<std::pair<std::uint64_t, double>> out;
    for (std::uint64_t item : candidates) {
      const double est = estimate(item);
      if (est >= eps * norm) out.emplace_back(item, est);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::uint64_t width_;
  std::uint64_t depth_;
  SeededPrf prf_;
  StateMeter* meter_;
  std::vector<std::uint64_t> table_;
};

}  // namespace wesketch
