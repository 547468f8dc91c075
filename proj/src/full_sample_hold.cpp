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

#include "wesketch/full_sample_hold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wesketch {

namespace {

// Parameters for the instance at time level x: the universe is unchanged,
// the expected induced length halves per level.
SketchParams scaled_params(const SketchParams& base, int x) {
  const double scaled_m =
      std::ceil(static_cast<double>(base.m_bound) * subsample_rate(x));
  const std::uint64_t m_x =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(scaled_m));
  SketchParams sp = derive_params(base.n, m_x, base.eps, base.delta, base.p,
                                  base.preset, base.tuning);
  sp.exact_counters = base.exact_counters;
  sp.prune_policy = base.prune_policy;
  sp.estimate_mode = base.estimate_mode;
  return sp;
}

}  // namespace

FullSampleHold::FullSampleHold(const SketchParams& params,
                               const SeededPrf& prf, StateMeter* meter)
    : params_(params),
      meter_(meter),
      rows_(params.r_rows),
      levels_(params.y_levels) {
  row_prfs_.reserve(static_cast<std::size_t>(rows_));
  instances_.reserve(static_cast<std::size_t>(rows_ * levels_));
  length_counters_.reserve(static_cast<std::size_t>(rows_ * levels_));
  local_time_.assign(static_cast<std::size_t>(rows_ * levels_), 0);
  for (int r = 0; r < rows_; ++r) {
    row_prfs_.push_back(prf.derive("time-subsample", static_cast<std::uint64_t>(r)));
    for (int x = 1; x <= levels_; ++x) {
      const SeededPrf child =
          prf.derive("instance", static_cast<std::uint64_t>(r) * 1000 +
                                     static_cast<std::uint64_t>(x));
      instances_.emplace_back(scaled_params(params_, x), child, meter_);
      length_counters_.push_back(MorrisCounter::with_base(
          params_.length_counter_base, params_.length_counter_copies,
          child.derive("length").key()));
      meter_->add_words(1);
    }
  }
}

void FullSampleHold::ingest(std::uint64_t t, std::uint64_t item) {
  for (int r = 0; r < rows_; ++r) {
    const int deepest =
        deepest_member_level(row_prfs_[static_cast<std::size_t>(r)], t, levels_);
    for (int x = 1; x <= deepest; ++x) {
      const std::size_t idx = index(r, x);
      const std::uint64_t local_t = ++local_time_[idx];
      instances_[idx].ingest(local_t, item);
      if (length_counters_[idx].increment()) meter_->mark_dirty();
    }
  }
}

std::vector<double> FullSampleHold::level_length_estimates() const {
  std::vector<double> out(static_cast<std::size_t>(levels_));
  std::vector<double> per_row(static_cast<std::size_t>(rows_));
  for (int x = 1; x <= levels_; ++x) {
    for (int r = 0; r < rows_; ++r)
      per_row[static_cast<std::size_t>(r)] =
          length_counters_[index(r, x)].estimate();
    out[static_cast<std::size_t>(x - 1)] = lower_median(per_row);
  }
  return out;
}

double FullSampleHold::estimate_with(
    std::uint64_t item, const std::vector<double>& length_est) const {
  std::vector<double> per_row(static_cast<std::size_t>(rows_));
  std::vector<double> medians(static_cast<std::size_t>(levels_));
  for (int x = 1; x <= levels_; ++x) {
    for (int r = 0; r < rows_; ++r)
      per_row[static_cast<std::size_t>(r)] = instances_[index(r, x)].estimate(item);
    medians[static_cast<std::size_t>(x - 1)] = lower_median(per_row);
  }

  if (params_.estimate_mode == EstimateMode::kMaxRescaled) {
    double best = 0.0;
    for (int x = 1; x <= levels_; ++x)
      best = std::max(best, medians[static_cast<std::size_t>(x - 1)] /
                                subsample_rate(x));
    return best;
  }

  // Shallowest level whose (approximate) induced length covers the p-th
  // power of the level's median estimate; the deepest level is the
  // fallback when none qualifies.
  int selected = levels_;
  for (int x = 1; x <= levels_; ++x) {
    const double f = medians[static_cast<std::size_t>(x - 1)];
    if (length_est[static_cast<std::size_t>(x - 1)] >= std::pow(f, params_.p)) {
      selected = x;
      break;
    }
  }
  const double f = medians[static_cast<std::size_t>(selected - 1)];
  if (params_.estimate_mode == EstimateMode::kLiteral) return f;
  return f / subsample_rate(selected);
}

double FullSampleHold::estimate(std::uint64_t item) const {
  return estimate_with(item, level_length_estimates());
}

std::vector<std::uint64_t> FullSampleHold::tracked_union() const {
  std::vector<std::uint64_t> items;
  for (const SampleHold& sh : instances_)
    for (const auto& [item, est] : sh.report()) items.push_back(item);
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::vector<std::pair<std::uint64_t, double>> FullSampleHold::report_all()
    const {
  const std::vector<double> lengths = level_length_estimates();
  std::vector<std::pair<std::uint64_t, double>> out;
  for (std::uint64_t item : tracked_union())
    out.emplace_back(item, estimate_with(item, lengths));
  return out;
}

std::vector<std::pair<std::uint64_t, double>> FullSampleHold::report_heavy(
    double norm, double eps) const {
  if (!(norm > 0.0))
    throw std::invalid_argument(
        "report_heavy: a positive norm value is required");
  const double threshold = 0.75 * eps * norm;
  std::vector<std::pair<std::uint64_t, double>> out;
  for (const auto& [item, est] : report_all())
    if (est >= threshold) out.emplace_back(item, est);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace wesketch
