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
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wesketch/stream.hpp"

namespace wesketch {

// Exact frequency vector and derived exact statistics, built from a full
// pass over the stream. Linear space by design; this is the verification
// side of every estimate in the library.
class FrequencyOracle {
 public:
  explicit FrequencyOracle(const Stream& s) : n_(s.n), m_(s.m()) {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    counts.reserve(s.items.size());
    for (std::uint64_t item : s.items) ++counts[item];
    sorted_.assign(counts.begin(), counts.end());
    std::sort(sorted_.begin(), sorted_.end());
    lookup_ = std::move(counts);
  }

  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t distinct() const { return sorted_.size(); }

  std::uint64_t frequency(std::uint64_t item) const {
    auto it = lookup_.find(item);
    return it == lookup_.end() ? 0 : it->second;
  }

  // Sorted by item id; counts are all >= 1 and sum to m.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& counts() const {
    return sorted_;
  }

  // Most frequent item, smallest id on ties.
  std::uint64_t top_item() const {
    std::uint64_t best = 0, best_count = 0;
    for (const auto& [item, count] : sorted_) {
      if (count > best_count) {
        best = item;
        best_count = count;
      }
    }
    return best;
  }

  // Sum of p-th powers of the frequencies, extended precision.
  long double exact_fp(double p) const {
    if (!(p > 0.0)) throw std::invalid_argument("exact_fp: p must be > 0");
    long double sum = 0.0L;
    for (const auto& [item, count] : sorted_)
      sum += powl(static_cast<long double>(count), static_cast<long double>(p));
    return sum;
  }

  // Exact set {j : f_j >= eps * (F_p)^(1/p)}, sorted by item id.
  std::vector<std::uint64_t> exact_heavy_hitters(double p, double eps) const {
    if (!(eps > 0.0 && eps <= 1.0))
      throw std::invalid_argument("exact_heavy_hitters: eps must be in (0,1]");
    const long double threshold =
        static_cast<long double>(eps) *
        powl(exact_fp(p), 1.0L / static_cast<long double>(p));
    std::vector<std::uint64_t> out;
    for (const auto& [item, count] : sorted_)
      if (static_cast<long double>(count) >= threshold) out.push_back(item);
    return out;
  }

  // Shannon entropy in bits of the empirical distribution f_i / m.
  double exact_entropy() const {
    if (m_ == 0) throw std::invalid_argument("exact_entropy: empty stream");
    long double h = 0.0L;
    const long double md = static_cast<long double>(m_);
    for (const auto& [item, count] : sorted_) {
      const long double x = static_cast<long double>(count) / md;
      h -= x * log2l(x);
    }
    return static_cast<double>(h);
  }

  struct LevelContributions {
    std::vector<long double> contribution;  // C_i per band, 1-based in [1,L]
    std::vector<long double> fraction;      // phi_i = C_i / F_p
    long double remainder = 0.0L;           // F_p mass outside all bands
    long double fp = 0.0L;
  };

  // Exact per-band F_p mass for bands [lambda*M/2^i, 2*lambda*M/2^i),
  // i in [1, L]. Bands are scanned linearly per item, independently of the
  // closed-form band lookup used by the estimator.
  LevelContributions exact_level_contributions(double p, double lambda,
                                               long double m_tilde,
                                               int levels) const {
    if (!(lambda >= 0.5 && lambda <= 1.0))
      throw std::invalid_argument("level contributions: lambda outside [1/2,1]");
    LevelContributions out;
    out.contribution.assign(static_cast<std::size_t>(levels) + 1, 0.0L);
    out.fraction.assign(static_cast<std::size_t>(levels) + 1, 0.0L);
    out.fp = exact_fp(p);
    for (const auto& [item, count] : sorted_) {
      const long double v =
          powl(static_cast<long double>(count), static_cast<long double>(p));
      bool placed = false;
      for (int i = 1; i <= levels; ++i) {
        const long double lo =
            static_cast<long double>(lambda) * m_tilde / powl(2.0L, i);
        if (v >= lo && v < 2.0L * lo) {
          out.contribution[static_cast<std::size_t>(i)] += v;
          placed = true;
          break;
        }
      }
      if (!placed) out.remainder += v;
    }
    if (out.fp > 0.0L)
      for (int i = 1; i <= levels; ++i)
        out.fraction[static_cast<std::size_t>(i)] =
            out.contribution[static_cast<std::size_t>(i)] / out.fp;
    return out;
  }

  // A band is significant when its fractional contribution reaches
  // eps / (2 p log2(nm)).
  double significance_threshold(double eps, double p) const {
    return eps / (2.0 * p * log2_nm_value());
  }

 private:
  double log2_nm_value() const {
    return std::log2(static_cast<double>(n_) * static_cast<double>(m_));
  }

  std::uint64_t n_;
  std::uint64_t m_;
  std::unordered_map<std::uint64_t, std::uint64_t> lookup_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_;
};

}  // namespace wesketch
