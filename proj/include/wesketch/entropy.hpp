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
#include <memory>
#include <vector>

#include "wesketch/meter.hpp"
#include "wesketch/prf.hpp"
#include "wesketch/stable_fp.hpp"

namespace wesketch {

// Moment orders clustered around 1 at Chebyshev abscissas: p_i = 1 + g(z_i)
// with z_i = cos(i*pi/k). Shannon entropy is recovered by interpolating
// Renyi entropies over z and evaluating at the algebraic p = 1 point
// z* = 1 - 1/k^2 (the unique zero of g's inner linear form).
struct EntropyNodes {
  int k = 0;
  double ell = 0;        // 1 / (2 (k+1) log2 m)
  double eps_prime = 0;  // per-node moment accuracy eps / (12 (k+1)^3 log2 m)
  std::vector<double> z;
  std::vector<double> p;

  double z_star() const {
    return 1.0 - 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  }
};

EntropyNodes build_nodes(double eps, std::uint64_t m);

// Degree-k barycentric Lagrange interpolation of the values at the nodes'
// z-abscissas, evaluated at z*.
double interpolate_at_p1(const EntropyNodes& nodes,
                         const std::vector<double>& values);

// Entropy in bits from per-node moment values (exact or estimated) plus the
// exact stream length. Rejects non-positive moments.
double entropy_from_moments(const EntropyNodes& nodes,
                            const std::vector<double>& moments,
                            std::uint64_t m);

inline double entropy_to_h(double entropy_bits) {
  return std::exp2(entropy_bits);
}

// One-pass estimator: a p-stable sketch per node plus a p = 1 control
// sketch, all sharing one entry tape so their sampling noise varies
// smoothly in p and cancels in the Renyi ratios.
class EntropyEstimator {
 public:
  struct Options {
    int rows = 512;
    bool exact_accumulators = true;
    double accumulator_base = 1e-4;
  };

  EntropyEstimator(double eps, std::uint64_t m_bound, const Options& options,
                   const SeededPrf& prf, StateMeter* meter);

  void process(std::uint64_t t, std::uint64_t item) {
    (void)t;
    ingest(item);
    meter_->commit_update();
  }
  void ingest(std::uint64_t item);

  double estimate() const;  // bits
  double estimate_h() const { return entropy_to_h(estimate()); }

  // Self-normalized per-node moment estimates (for inspection/tests).
  std::vector<double> moment_estimates() const;

  const EntropyNodes& nodes() const { return nodes_; }
  std::uint64_t processed() const { return processed_; }

 private:
  EntropyNodes nodes_;
  StateMeter* meter_;
  std::vector<StableFpSketch> node_sketches_;
  std::unique_ptr<StableFpSketch> control_;
  std::uint64_t processed_ = 0;
};

}  // namespace wesketch
