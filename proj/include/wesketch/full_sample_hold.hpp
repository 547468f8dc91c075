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
#include <utility>
#include <vector>

#include "wesketch/meter.hpp"
#include "wesketch/morris.hpp"
#include "wesketch/params.hpp"
#include "wesketch/prf.hpp"
#include "wesketch/sample_hold.hpp"
#include "wesketch/stream.hpp"

namespace wesketch {

// Heavy-hitter front end: an R x Y grid of SampleHold instances over nested
// time-subsampled substreams. Per-item estimates take the median across the
// R copies of each level, select the shallowest level whose (approximate)
// induced length covers the p-th power of the estimate, and rescale by the
// inverse sampling rate.
class FullSampleHold {
 public:
  FullSampleHold(const SketchParams& params, const SeededPrf& prf,
                 StateMeter* meter);
  FullSampleHold(FullSampleHold&&) = default;
  FullSampleHold& operator=(FullSampleHold&&) = default;

  void process(std::uint64_t t, std::uint64_t item) {
    ingest(t, item);
    meter_->commit_update();
  }
  void ingest(std::uint64_t t, std::uint64_t item);

  double estimate(std::uint64_t item) const;

  // All items tracked anywhere with estimate >= (3 eps / 4) * norm, sorted
  // by estimate (descending), then item id.
  std::vector<std::pair<std::uint64_t, double>> report_heavy(double norm,
                                                             double eps) const;

  // All items tracked anywhere with their estimates, no threshold.
  std::vector<std::pair<std::uint64_t, double>> report_all() const;

  int rows() const { return rows_; }
  int levels() const { return levels_; }
  const SampleHold& instance(int r, int x) const {
    return instances_[index(r, x)];
  }
  bool row_time_member(int r, std::uint64_t t, int x) const {
    return time_member(row_prfs_[static_cast<std::size_t>(r)], t, x);
  }
  std::uint64_t forwarded_count(int r, int x) const {
    return local_time_[index(r, x)];
  }
  // Lower median over rows of the Morris induced-length estimates.
  std::vector<double> level_length_estimates() const;

  const SketchParams& params() const { return params_; }

 private:
  std::size_t index(int r, int x) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(levels_) +
           static_cast<std::size_t>(x - 1);
  }
  std::vector<std::uint64_t> tracked_union() const;
  double estimate_with(std::uint64_t item,
                       const std::vector<double>& length_est) const;

  SketchParams params_;
  StateMeter* meter_;
  int rows_;
  int levels_;
  std::vector<SeededPrf> row_prfs_;
  std::vector<SampleHold> instances_;     // row-major [r][x]
  std::vector<MorrisCounter> length_counters_;
  std::vector<std::uint64_t> local_time_;
};

}  // namespace wesketch
