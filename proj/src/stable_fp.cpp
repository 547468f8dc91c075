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

#include "wesketch/stable_fp.hpp"

#include <cmath>
#include <stdexcept>

namespace wesketch {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Theta-dependent factor: X = A(theta) * W^(-(1/p - 1)) with W ~ Exp(1).
double theta_factor(double p, double theta) {
  const double e = 1.0 / p - 1.0;
  return std::sin(p * theta) / std::pow(std::cos(theta), 1.0 / p) *
         std::pow(std::cos(theta * (1.0 - p)), e);
}

// P(|X| <= q) given theta, integrating out the exponential W.
double conditional_cdf(double p, double theta, double q) {
  const double e = 1.0 / p - 1.0;
  const double a = std::fabs(theta_factor(p, theta));
  if (a == 0.0) return 1.0;
  if (e == 0.0) return a <= q ? 1.0 : 0.0;  // p = 1: |X| = |tan(theta)|
  if (e > 0.0) return std::exp(-std::pow(a / q, 1.0 / e));
  return 1.0 - std::exp(-std::pow(q / a, -1.0 / e));
}

// (2/pi) * integral over theta in (0, pi/2) of the conditional CDF,
// composite Simpson on a fixed grid (endpoints approached from inside).
double abs_cdf(double p, double q) {
  constexpr int kIntervals = 1 << 12;
  const double h = (kPi / 2.0) / kIntervals;
  double sum = 0.0;
  for (int i = 0; i <= kIntervals; ++i) {
    double theta = i * h;
    if (i == 0) theta = h * 1e-6;
    if (i == kIntervals) theta = kPi / 2.0 - h * 1e-6;
    const double w = (i == 0 || i == kIntervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * conditional_cdf(p, theta, q);
  }
  return (2.0 / kPi) * sum * h / 3.0;
}

}  // namespace

double sample_p_stable(double p, double r, double theta) {
  if (!(p > 0.0 && p <= 2.0))
    throw std::invalid_argument("sample_p_stable: p must be in (0,2]");
  if (!(r > 0.0 && r <= 1.0))
    throw std::invalid_argument("sample_p_stable: r must be in (0,1]");
  if (!(std::fabs(theta) < kPi / 2.0))
    throw std::invalid_argument("sample_p_stable: |theta| must be < pi/2");
  const double e = 1.0 / p - 1.0;
  return std::sin(p * theta) / std::pow(std::cos(theta), 1.0 / p) *
         std::pow(std::cos(theta * (1.0 - p)) / std::log(1.0 / r), e);
}

double stable_abs_median(double p) {
  if (!(p > 0.0 && p <= 2.0))
    throw std::invalid_argument("stable_abs_median: p must be in (0,2]");
  if (p == 1.0) return 1.0;  // |Cauchy| median is tan(pi/4)
  double lo = 1e-9, hi = 1e9;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * hi; ++iter) {
    const double mid = std::sqrt(lo * hi);
    if (abs_cdf(p, mid) < 0.5)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

StableFpSketch::StableFpSketch(double p, const Options& options,
                               const SeededPrf& entry_prf,
                               std::uint64_t accumulator_seed,
                               StateMeter* meter)
    : p_(p),
      options_(options),
      entry_prf_(entry_prf),
      meter_(meter),
      abs_median_(stable_abs_median(p)) {
  if (options.rows < 1)
    throw std::invalid_argument("StableFpSketch: need at least one row");
  Rng seeder(accumulator_seed);
  plus_.reserve(static_cast<std::size_t>(options.rows));
  minus_.reserve(static_cast<std::size_t>(options.rows));
  for (int i = 0; i < options.rows; ++i) {
    plus_.emplace_back(options.accumulator_base, seeder.next_u64());
    minus_.emplace_back(options.accumulator_base, seeder.next_u64());
  }
  if (options.exact_accumulators) {
    exact_plus_.assign(static_cast<std::size_t>(options.rows), 0.0L);
    exact_minus_.assign(static_cast<std::size_t>(options.rows), 0.0L);
  }
  meter_->add_words(2 * static_cast<std::uint64_t>(options.rows));
}

double StableFpSketch::entry(int row, std::uint64_t item) const {
  const std::uint64_t ri = static_cast<std::uint64_t>(row);
  const double r = entry_prf_.uniform_open2(2 * ri, item);
  const double theta =
      kPi * (entry_prf_.uniform_open2(2 * ri + 1, item) - 0.5);
  return sample_p_stable(p_, r, theta);
}

void StableFpSketch::ingest(std::uint64_t item) {
  const int k = rows();
  for (int i = 0; i < k; ++i) {
    const double d = entry(i, item);
    const std::size_t idx = static_cast<std::size_t>(i);
    if (options_.exact_accumulators) {
      if (d > 0.0)
        exact_plus_[idx] += static_cast<long double>(d);
      else
        exact_minus_[idx] -= static_cast<long double>(d);
      meter_->mark_dirty();
    } else if (d > 0.0) {
      if (plus_[idx].add(d)) meter_->mark_dirty();
    } else if (d < 0.0) {
      if (minus_[idx].add(-d)) meter_->mark_dirty();
    }
  }
}

double StableFpSketch::row_value(int row) const {
  return plus_value(row) - minus_value(row);
}

double StableFpSketch::plus_value(int row) const {
  const std::size_t idx = static_cast<std::size_t>(row);
  return options_.exact_accumulators ? static_cast<double>(exact_plus_[idx])
                                     : plus_[idx].value();
}

double StableFpSketch::minus_value(int row) const {
  const std::size_t idx = static_cast<std::size_t>(row);
  return options_.exact_accumulators ? static_cast<double>(exact_minus_[idx])
                                     : minus_[idx].value();
}

double StableFpSketch::scale_estimate() const {
  std::vector<double> mags;
  mags.reserve(plus_.size());
  for (int i = 0; i < rows(); ++i) mags.push_back(std::fabs(row_value(i)));
  return lower_median(std::move(mags)) / abs_median_;
}

double StableFpSketch::estimate() const {
  return std::pow(scale_estimate(), p_);
}

std::uint64_t StableFpSketch::accumulator_level_changes() const {
  std::uint64_t total = 0;
  for (const ApproxAccumulator& a : plus_) total += a.level_changes();
  for (const ApproxAccumulator& a : minus_) total += a.level_changes();
  return total;
}

double StableFpSketch::mean_changes_per_accumulator() const {
  return static_cast<double>(accumulator_level_changes()) /
         static_cast<double>(2 * rows());
}

}  // namespace wesketch
