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
#include <string>

namespace wesketch {

enum class Preset { kPaperFaithful, kPractical };

enum class PrunePolicy { kAgeBucketed, kGlobalSmallest };

enum class EstimateMode { kRescaled, kLiteral, kMaxRescaled };

// Small constants used by the practical preset in place of the huge
// paper-faithful factors. Each formula keeps its shape in n, m and p; only
// the constant in front changes.
struct PracticalTuning {
  double gamma = 1.0;    // band-shift constant
  double c_rho = 12.0;   // sampling probability multiplier
  double c_kappa = 4.0;  // counter budget multiplier
  double c_k = 8.0;      // reservoir size multiplier (times p * kappa)
  int r_rows = 5;        // median copies per time level
  int r_fp = 5;          // median copies per universe level
  double counter_eps = 0.1;     // tracked-counter accuracy
  double counter_delta = 0.05;  // tracked-counter failure probability
  double length_counter_base = 0.25;  // induced-length counter base
  int length_counter_copies = 5;
};

// All derived constants shared by the sketches. The paper-faithful preset
// evaluates the published formulas verbatim (they are astronomically large
// at desk scale and exist for auditing); the practical preset keeps the
// n/m shapes with small constants and is what experiments run on.
struct SketchParams {
  std::uint64_t n = 0;
  std::uint64_t m_bound = 0;
  double eps = 0;
  double delta = 0;
  double p = 1;
  Preset preset = Preset::kPractical;

  double gamma = 0;
  double kappa = 0;       // counter budget
  double rho = 0;         // per-update sampling probability, clamped to 1
  bool rho_clamped = false;
  double k_lo = 0;        // reservoir size range
  double k_hi = 0;
  int r_rows = 0;         // median copies over time-subsampled instances
  int y_levels = 0;       // time subsampling depth
  int l_levels = 0;       // universe subsampling depth
  int r_fp = 0;           // median copies over universe-subsampled instances

  double counter_eps = 0;
  double counter_delta = 0;
  double length_counter_base = 0;
  int length_counter_copies = 0;

  bool exact_counters = false;  // test mode: exact instead of Morris
  PrunePolicy prune_policy = PrunePolicy::kAgeBucketed;
  EstimateMode estimate_mode = EstimateMode::kRescaled;

  PracticalTuning tuning;
};

// log base 2 of (n * m) as a double; all polylog factors use base 2.
inline double log2_nm(std::uint64_t n, std::uint64_t m) {
  return std::log2(static_cast<double>(n) * static_cast<double>(m));
}

inline SketchParams derive_params(std::uint64_t n, std::uint64_t m_bound,
                                  double eps, double delta, double p,
                                  Preset preset,
                                  const PracticalTuning& tuning = {}) {
  if (n < 2) throw std::invalid_argument("derive_params: n must be >= 2");
  if (m_bound < 1)
    throw std::invalid_argument("derive_params: m_bound must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("derive_params: eps must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("derive_params: delta must lie in (0,1)");
  if (p < 1.0) throw std::invalid_argument("derive_params: p must be >= 1");

  SketchParams sp;
  sp.n = n;
  sp.m_bound = m_bound;
  sp.eps = eps;
  sp.delta = delta;
  sp.p = p;
  sp.preset = preset;
  sp.tuning = tuning;

  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m_bound);
  const double lg = log2_nm(n, m_bound);
  // The m >= n and m < n branches swap the base of the power laws.
  const double base = (m_bound >= n) ? nd : md;

  if (preset == Preset::kPaperFaithful) {
    sp.gamma = std::ldexp(1.0, 20) * p;
    const double kappa1 = std::pow(lg, 11.0 + 3.0 * p) / std::pow(eps, 4.0 + 4.0 * p);
    const double kappa2 = std::pow(base, 1.0 - 2.0 / p) *
                          std::pow(lg, 11.0 + 3.0 * p) /
                          std::pow(eps, 4.0 + 4.0 * p);
    sp.kappa = (p < 2.0) ? kappa1 : kappa2;
    const double rho_raw = sp.gamma * sp.gamma * std::pow(base, 1.0 - 1.0 / p) *
                           std::pow(lg, 4.0) / (eps * eps * md);
    sp.rho_clamped = rho_raw > 1.0;
    sp.rho = std::min(1.0, rho_raw);
    sp.k_lo = 200.0 * p * sp.kappa * lg * lg;
    sp.k_hi = 202.0 * p * sp.kappa * lg * lg;
    sp.r_rows = static_cast<int>(std::ceil(std::log2(nd)));
    sp.r_fp = std::max(2, static_cast<int>(std::ceil(std::log2(std::log2(nd)))));
    sp.counter_eps = eps / (8.0 * lg);
    sp.counter_delta = 1.0 / (nd * md * nd * md);
    sp.length_counter_base = tuning.length_counter_base;
    sp.length_counter_copies = tuning.length_counter_copies;
  } else {
    sp.gamma = tuning.gamma;
    const double kappa1 = tuning.c_kappa;
    const double kappa2 = tuning.c_kappa * std::pow(base, 1.0 - 2.0 / p);
    sp.kappa = std::max(1.0, (p < 2.0) ? kappa1 : kappa2);
    const double rho_raw = tuning.c_rho * std::pow(base, 1.0 - 1.0 / p) / md;
    sp.rho_clamped = rho_raw > 1.0;
    sp.rho = std::min(1.0, rho_raw);
    sp.k_lo = std::max(4.0, std::ceil(tuning.c_k * p * sp.kappa));
    sp.k_hi = std::max(sp.k_lo + 1.0, std::ceil(1.01 * sp.k_lo));
    sp.r_rows = tuning.r_rows;
    sp.r_fp = tuning.r_fp;
    sp.counter_eps = tuning.counter_eps;
    sp.counter_delta = tuning.counter_delta;
    sp.length_counter_base = tuning.length_counter_base;
    sp.length_counter_copies = tuning.length_counter_copies;
  }

  sp.y_levels = std::max(1, static_cast<int>(std::ceil(std::log2(md))) + 1);
  sp.l_levels =
      std::max(1, static_cast<int>(std::ceil(p * std::log2(nd * md))));
  return sp;
}

}  // namespace wesketch
