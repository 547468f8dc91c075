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

#include "wesketch/meter.hpp"
#include "wesketch/morris.hpp"
#include "wesketch/prf.hpp"

namespace wesketch {

// Draw from the p-stable distribution via the trigonometric generation
// formula, with theta uniform on (-pi/2, pi/2) and r uniform on (0, 1].
// Rejects r = 0 and |theta| = pi/2.
double sample_p_stable(double p, double r, double theta);

// Median of |X| for X p-stable, computed by quadrature over theta of the
// closed-form conditional tail in r, plus bisection. Deterministic; no
// Monte Carlo.
double stable_abs_median(double p);

// Moment sketch for p in (0, 2]: k rows of p-stable entries generated on
// demand from the PRF; the positive and negative halves of each row's inner
// product are tracked by monotone approximate accumulators, so insertion
// streams change state only on accumulator level bumps.
class StableFpSketch {
 public:
  struct Options {
    int rows = 64;
    double accumulator_base = 0.02;
    bool exact_accumulators = false;
  };

  StableFpSketch(double p, const Options& options, const SeededPrf& entry_prf,
                 std::uint64_t accumulator_seed, StateMeter* meter);

  void process(std::uint64_t t, std::uint64_t item) {
    (void)t;
    ingest(item);
    meter_->commit_update();
  }
  void ingest(std::uint64_t item);

  // median_i |<D_i, x>| / median(|D_p|); the moment estimate is scale^p.
  double scale_estimate() const;
  double estimate() const;

  double entry(int row, std::uint64_t item) const;
  double row_value(int row) const;
  double plus_value(int row) const;
  double minus_value(int row) const;
  int rows() const { return static_cast<int>(plus_.size()); }
  double p() const { return p_; }
  double abs_median() const { return abs_median_; }

  // Total level-change events and the mean per accumulator (both halves of
  // every row count as separate accumulators).
  std::uint64_t accumulator_level_changes() const;
  double mean_changes_per_accumulator() const;

 private:
  double p_;
  Options options_;
  SeededPrf entry_prf_;
  StateMeter* meter_;
  double abs_median_;
  std::vector<ApproxAccumulator> plus_;
  std::vector<ApproxAccumulator> minus_;
  std::vector<long double> exact_plus_;
  std::vector<long double> exact_minus_;
};

}  // namespace wesketch
