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

#include "wesketch/fp_estimator.hpp"

#include <algorithm>
#include <cmath>

namespace wesketch {

namespace {

SketchParams level_params(const SketchParams& base, int level) {
  const double rate = subsample_rate(level);
  const std::uint64_t n_l = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(
             std::ceil(static_cast<double>(base.n) * rate)));
  const std::uint64_t m_l = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(
             std::ceil(static_cast<double>(base.m_bound) * rate)));
  SketchParams sp = derive_params(n_l, m_l, base.eps, base.delta, base.p,
                                  base.preset, base.tuning);
  sp.exact_counters = base.exact_counters;
  sp.prune_policy = base.prune_policy;
  sp.estimate_mode = base.estimate_mode;
  return sp;
}

}  // namespace

int band_of(double fhat, double lambda, double m_tilde, double p, int levels) {
  if (!(fhat > 0.0)) return 0;
  const double v = std::pow(fhat, p);
  const double top = lambda * m_tilde;
  if (v >= top || v < std::ldexp(top, -levels)) return 0;
  const int candidate = static_cast<int>(std::ceil(std::log2(top / v)));
  for (int i = candidate - 1; i <= candidate + 1; ++i) {
    if (i < 1 || i > levels) continue;
    const double lo = std::ldexp(top, -i);
    if (v >= lo && v < 2.0 * lo) return i;
  }
  return 0;
}

double moment_cap(std::uint64_t m, double p) {
  const double exact = p * std::log2(static_cast<double>(m));
  double cap = std::exp2(std::ceil(exact));
  const double mp = std::pow(static_cast<double>(m), p);
  // Floating guards around the power-of-two constraint m^p <= cap < 2 m^p.
  while (cap < mp) cap *= 2.0;
  while (cap >= 2.0 * mp) cap /= 2.0;
  return cap;
}

FpEstimator::FpEstimator(const SketchParams& params, const SeededPrf& prf,
                         StateMeter* meter)
    : params_(params),
      meter_(meter),
      levels_(params.l_levels),
      rows_(params.r_fp) {
  const double shift_arg = params_.gamma * params_.gamma *
                           log2_nm(params_.n, params_.m_bound) /
                           (params_.eps * params_.eps);
  shift_ = std::max(0, static_cast<int>(std::floor(std::log2(shift_arg))));
  lambda_ = 0.5 + 0.5 * prf.uniform(0xBAD5EEDULL);

  row_prfs_.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    row_prfs_.push_back(
        prf.derive("universe-subsample", static_cast<std::uint64_t>(r)));

  instances_.reserve(static_cast<std::size_t>(levels_ * rows_));
  local_time_.assign(static_cast<std::size_t>(levels_ * rows_), 0);
  for (int level = 1; level <= levels_; ++level)
    for (int r = 0; r < rows_; ++r)
      instances_.emplace_back(
          level_params(params_, level),
          prf.derive("hh-grid", static_cast<std::uint64_t>(level) * 1000 +
                                    static_cast<std::uint64_t>(r)),
          meter_);
}

void FpEstimator::ingest(std::uint64_t t, std::uint64_t item) {
  (void)t;
  ++processed_;
  for (int r = 0; r < rows_; ++r) {
    const int deepest = deepest_member_level(
        row_prfs_[static_cast<std::size_t>(r)], item, levels_);
    for (int level = 1; level <= deepest; ++level) {
      const std::size_t idx = index(level, r);
      instances_[idx].ingest(++local_time_[idx], item);
    }
  }
}

int FpEstimator::level_for_band(int band) const {
  return std::max(1, band - shift_);
}

double FpEstimator::estimate() const {
  if (processed_ == 0) return 0.0;
  const double m_tilde = moment_cap(processed_, params_.p);

  // Tracked-item estimates per needed grid, gathered once.
  std::vector<std::vector<std::pair<std::uint64_t, double>>> reports(
      instances_.size());
  std::vector<bool> have(instances_.size(), false);

  double total = 0.0;
  std::vector<double> per_row(static_cast<std::size_t>(rows_));
  for (int band = 1; band <= levels_; ++band) {
    const int level = level_for_band(band);
    for (int r = 0; r < rows_; ++r) {
      const std::size_t idx = index(level, r);
      if (!have[idx]) {
        reports[idx] = instances_[idx].report_all();
        have[idx] = true;
      }
      double sum = 0.0;
      for (const auto& [item, est] : reports[idx])
        if (band_of(est, lambda_, m_tilde, params_.p, levels_) == band)
          sum += std::pow(est, params_.p);
      per_row[static_cast<std::size_t>(r)] = sum;
    }
    total += lower_median(per_row) / subsample_rate(level);
  }
  return total;
}

}  // namespace wesketch
