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

#include "wesketch/sample_hold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wesketch {

namespace {
constexpr std::uint64_t kMaxReservoirSlots = std::uint64_t{1} << 24;
}  // namespace

SampleHold::SampleHold(const SketchParams& params, const SeededPrf& prf,
                       StateMeter* meter)
    : params_(params),
      prf_(prf),
      meter_(meter),
      tape_(prf.derive("tape").key()) {
  const std::uint64_t k = draw_reservoir_size();
  slots_.assign(k, 0);
  meter_->add_words(k);
  class_counts_.assign(64, 0);
}

std::uint64_t SampleHold::draw_reservoir_size() {
  const double lo_d = params_.k_lo;
  const double hi_d = params_.k_hi;
  if (!(hi_d >= lo_d) || hi_d > static_cast<double>(kMaxReservoirSlots))
    throw std::invalid_argument(
        "SampleHold: reservoir size range is not materializable at this "
        "scale; the paper-faithful preset is audit-only");
  const std::uint64_t lo = static_cast<std::uint64_t>(std::llround(lo_d));
  const std::uint64_t hi = static_cast<std::uint64_t>(std::llround(hi_d));
  return lo + tape_.next_below(hi - lo + 1);
}

void SampleHold::advance_ages(std::uint64_t t) {
  while (!migrations_.empty() && migrations_.top().when <= t) {
    const Migration mig = migrations_.top();
    migrations_.pop();
    auto it = tracked_.find(mig.item);
    if (it == tracked_.end()) continue;  // pruned since scheduling
    Tracked& tr = it->second;
    if (tr.age_class != mig.from_class ||
        tr.init_time + (std::uint64_t{1} << (mig.from_class + 1)) != mig.when)
      continue;  // stale entry for a re-created counter
    --class_counts_[static_cast<std::size_t>(tr.age_class)];
    ++tr.age_class;
    ++class_counts_[static_cast<std::size_t>(tr.age_class)];
    migrations_.push(Migration{
        tr.init_time + (std::uint64_t{1} << (tr.age_class + 1)), mig.item,
        tr.age_class});
  }
}

void SampleHold::ingest(std::uint64_t t, std::uint64_t item) {
  advance_ages(t);

  if (auto it = tracked_.find(item); it != tracked_.end()) {
    if (it->second.counter.increment()) meter_->mark_dirty();
  } else if (auto slot_it = slot_members_.find(item);
             slot_it != slot_members_.end() && slot_it->second > 0) {
    // Item occupies a reservoir slot: promote it to a held counter. The
    // promoting occurrence itself is counted, so counting effectively
    // starts one occurrence after first sight.
    Tracked tr{HeldCounter(params_.exact_counters, params_.counter_eps,
                           params_.counter_delta, prf_.word2(item, t)),
               t - 1, 0};
    tr.counter.increment();
    ++class_counts_[0];
    migrations_.push(Migration{tr.init_time + 2, item, 0});
    tracked_.emplace(item, std::move(tr));
    meter_->add_words(1);
    meter_->mark_dirty();
  } else if (tape_.next_double() < params_.rho) {
    const std::uint64_t slot = tape_.next_below(slots_.size());
    const std::uint64_t old = slots_[slot];
    if (old != 0) {
      auto old_it = slot_members_.find(old);
      if (--old_it->second == 0) slot_members_.erase(old_it);
    }
    slots_[slot] = item;
    ++slot_members_[item];
    meter_->mark_dirty();
  }

  run_maintenance(t);
}

void SampleHold::resize_reservoir(std::uint64_t new_k) {
  const std::uint64_t old_k = slots_.size();
  if (new_k < old_k) {
    for (std::uint64_t i = old_k; i > new_k; --i) {
      const std::uint64_t victim = tape_.next_below(i);
      const std::uint64_t evicted = slots_[victim];
      if (evicted != 0) {
        auto it = slot_members_.find(evicted);
        if (--it->second == 0) slot_members_.erase(it);
      }
      slots_[victim] = slots_[i - 1];
      slots_.pop_back();
    }
    meter_->release_words(old_k - new_k);
  } else if (new_k > old_k) {
    slots_.resize(new_k, 0);
    meter_->add_words(new_k - old_k);
  }
}

void SampleHold::remove_tracked(std::uint64_t item) {
  auto it = tracked_.find(item);
  --class_counts_[static_cast<std::size_t>(it->second.age_class)];
  tracked_.erase(it);
  meter_->release_words(1);
}

void SampleHold::prune_group(
    std::vector<std::pair<double, std::uint64_t>>& members,
    std::size_t retain) {
  if (members.size() <= retain) return;
  // Largest approximate frequency first; item id breaks ties for
  // determinism.
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (std::size_t i = retain; i < members.size(); ++i)
    remove_tracked(members[i].second);
  meter_->mark_dirty();
}

void SampleHold::run_maintenance(std::uint64_t t) {
  const std::uint64_t k = slots_.size();

  bool triggered = false;
  if (params_.prune_policy == PrunePolicy::kAgeBucketed) {
    for (std::size_t z = 1; z < class_counts_.size() && !triggered; ++z)
      triggered = class_counts_[z] >= k;
  } else {
    triggered = tracked_.size() >= k;
  }
  if (!triggered) return;

  ++maintenance_events_;
  const std::uint64_t new_k = draw_reservoir_size();
  resize_reservoir(new_k);
  meter_->mark_dirty();
  const std::size_t retain = static_cast<std::size_t>((new_k + 1) / 2);

  if (params_.prune_policy == PrunePolicy::kAgeBucketed) {
    // Bucket counters by age class and keep the top half of each class.
    std::vector<std::vector<std::pair<double, std::uint64_t>>> buckets(
        class_counts_.size());
    for (const auto& [item, tr] : tracked_)
      if (tr.age_class >= 1)
        buckets[static_cast<std::size_t>(tr.age_class)].emplace_back(
            tr.counter.estimate(), item);
    for (auto& bucket : buckets) prune_group(bucket, retain);
  } else {
    std::vector<std::pair<double, std::uint64_t>> all;
    all.reserve(tracked_.size());
    for (const auto& [item, tr] : tracked_)
      all.emplace_back(tr.counter.estimate(), item);
    prune_group(all, retain);
  }
  (void)t;
}

double SampleHold::estimate(std::uint64_t item) const {
  auto it = tracked_.find(item);
  return it == tracked_.end() ? 0.0 : it->second.counter.estimate();
}

std::vector<std::pair<std::uint64_t, double>> SampleHold::report() const {
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(tracked_.size());
  for (const auto& [item, tr] : tracked_)
    out.emplace_back(item, tr.counter.estimate());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wesketch
