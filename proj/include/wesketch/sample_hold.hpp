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

#include <cstdint>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wesketch/meter.hpp"
#include "wesketch/morris.hpp"
#include "wesketch/params.hpp"
#include "wesketch/prf.hpp"

namespace wesketch {

// Held per-item counter: Morris by default, exact in test mode. Counts the
// promoting occurrence and everything after it, so in exact mode the count
// can never exceed the item's true frequency.
class HeldCounter {
 public:
  HeldCounter(bool exact, double eps, double delta, std::uint64_t seed)
      : exact_(exact), morris_(eps, delta, seed) {}

  bool increment() {
    if (exact_) {
      ++exact_count_;
      return true;
    }
    return morris_.increment();
  }

  double estimate() const {
    return exact_ ? static_cast<double>(exact_count_) : morris_.estimate();
  }

  std::uint64_t morris_level_changes() const { return morris_.level_changes(); }

 private:
  bool exact_;
  std::uint64_t exact_count_ = 0;
  MorrisCounter morris_;
};

// Reservoir sampler over stream positions with held counters for re-seen
// items. Counters compete for survival only against counters of similar
// age (dyadic classes by time since initialization); a global-smallest
// pruning policy is available as an ablation.
class SampleHold {
 public:
  SampleHold(const SketchParams& params, const SeededPrf& prf,
             StateMeter* meter);
  SampleHold(SampleHold&&) = default;
  SampleHold& operator=(SampleHold&&) = default;

  // Top-level entry: processes one update and commits the meter.
  void process(std::uint64_t t, std::uint64_t item) {
    ingest(t, item);
    meter_->commit_update();
  }

  // Composition entry: same work, no meter commit (the owner commits).
  void ingest(std::uint64_t t, std::uint64_t item);

  // Current estimates of all tracked items, sorted by item id.
  std::vector<std::pair<std::uint64_t, double>> report() const;

  double estimate(std::uint64_t item) const;
  bool is_tracked(std::uint64_t item) const {
    return tracked_.find(item) != tracked_.end();
  }

  std::uint64_t reservoir_size() const { return slots_.size(); }
  std::size_t tracked_count() const { return tracked_.size(); }
  std::uint64_t maintenance_events() const { return maintenance_events_; }
  const SketchParams& params() const { return params_; }
  // Per-age-class counter occupancy (index = class z).
  const std::vector<std::uint32_t>& class_counts() const {
    return class_counts_;
  }

 private:
  struct Tracked {
    HeldCounter counter;
    std::uint64_t init_time;  // counts cover occurrences strictly after it
    int age_class;            // floor(log2(t - init_time)); 0 is exempt
  };

  struct Migration {
    std::uint64_t when;
    std::uint64_t item;
    int from_class;
    bool operator>(const Migration& other) const { return when > other.when; }
  };

  std::uint64_t draw_reservoir_size();
  void advance_ages(std::uint64_t t);
  void resize_reservoir(std::uint64_t new_k);
  void run_maintenance(std::uint64_t t);
  void prune_group(std::vector<std::pair<double, std::uint64_t>>& members,
                   std::size_t retain);
  void remove_tracked(std::uint64_t item);

  SketchParams params_;
  SeededPrf prf_;
  StateMeter* meter_;
  Rng tape_;

  std::vector<std::uint64_t> slots_;  // 0 = empty
  std::unordered_map<std::uint64_t, std::uint32_t> slot_members_;
  std::unordered_map<std::uint64_t, Tracked> tracked_;
  std::vector<std::uint32_t> class_counts_;
  std::priority_queue<Migration, std::vector<Migration>, std::greater<>>
      migrations_;
  std::uint64_t maintenance_events_ = 0;
};

}  // namespace wesketch
