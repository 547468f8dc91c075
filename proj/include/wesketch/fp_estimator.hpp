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
#include <vector>

#include "wesketch/full_sample_hold.hpp"
#include "wesketch/meter.hpp"
#include "wesketch/params.hpp"
#include "wesketch/prf.hpp"

namespace wesketch {

// Geometric band index i in [1, levels] whose half-open interval
// [lambda*m_tilde/2^i, 2*lambda*m_tilde/2^i) contains fhat^p, or 0 when the
// value is zero, below the deepest band, or at/above lambda*m_tilde.
int band_of(double fhat, double lambda, double m_tilde, double p, int levels);

// Smallest power of two M with m^p <= M < 2 m^p.
double moment_cap(std::uint64_t m, double p);

// Moment estimator for p >= 1: L x R universe-subsampled heavy-hitter grids;
// per-band contributions are read from the grid at a shifted subsample
// level, median-combined across the R copies, rescaled by the inverse
// sampling rate, and summed.
class FpEstimator {
 public:
  FpEstimator(const SketchParams& params, const SeededPrf& prf,
              StateMeter* meter);

  void process(std::uint64_t t, std::uint64_t item) {
    ingest(t, item);
    meter_->commit_update();
  }
  void ingest(std::uint64_t t, std::uint64_t item);

  double estimate() const;

  double lambda() const { return lambda_; }
  int levels() const { return levels_; }
  int rows() const { return rows_; }
  int band_shift() const { return shift_; }
  std::uint64_t processed() const { return processed_; }
  const FullSampleHold& instance(int level, int r) const {
    return instances_[index(level, r)];
  }
  // Subsample level feeding band i.
  int level_for_band(int band) const;

 private:
  std::size_t index(int level, int r) const {
    return static_cast<std::size_t>(level - 1) * static_cast<std::size_t>(rows_) +
           static_cast<std::size_t>(r);
  }

  SketchParams params_;
  StateMeter* meter_;
  int levels_;
  int rows_;
  int shift_;
  double lambda_;
  std::vector<SeededPrf> row_prfs_;
  std::vector<FullSampleHold> instances_;  // level-major [ell][r]
  std::vector<std::uint64_t> local_time_;
  std::uint64_t processed_ = 0;
};

}  // namespace wesketch
