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

#include "wesketch/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace wesketch {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EntropyNodes build_nodes(double eps, std::uint64_t m) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("build_nodes: eps must lie in (0,1)");
  if (m < 4) throw std::invalid_argument("build_nodes: m must be >= 4");

  EntropyNodes nodes;
  const double log2m = std::log2(static_cast<double>(m));
  nodes.k = std::max(
      1, static_cast<int>(std::ceil(std::log2(1.0 / eps) + std::log2(log2m))));
  const double k = nodes.k;
  nodes.ell = 1.0 / (2.0 * (k + 1.0) * log2m);
  nodes.eps_prime = eps / (12.0 * std::pow(k + 1.0, 3.0) * log2m);

  const double denom = 2.0 * k * k + 1.0;
  for (int i = 0; i <= nodes.k; ++i) {
    const double z = std::cos(i * kPi / k);
    const double g = nodes.ell * (k * k * (z - 1.0) + 1.0) / denom;
    const double p = 1.0 + g;
    if (!(p > 0.0 && p < 2.0) || p == 1.0)
      throw std::invalid_argument(
          "build_nodes: node order outside (0,2) or equal to 1");
    nodes.z.push_back(z);
    nodes.p.push_back(p);
  }
  return nodes;
}

double interpolate_at_p1(const EntropyNodes& nodes,
                         const std::vector<double>& values) {
  const std::size_t count = nodes.z.size();
  if (values.size() != count)
    throw std::invalid_argument("interpolate_at_p1: value count mismatch");

  std::vector<double> weights(count, 1.0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (j != i) weights[i] /= (nodes.z[i] - nodes.z[j]);

  const double x = nodes.z_star();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double dx = x - nodes.z[i];
    if (dx == 0.0) return values[i];
    const double c = weights[i] / dx;
    num += c * values[i];
    den += c;
  }
  return num / den;
}

double entropy_from_moments(const EntropyNodes& nodes,
                            const std::vector<double>& moments,
                            std::uint64_t m) {
  if (moments.size() != nodes.p.size())
    throw std::invalid_argument("entropy_from_moments: moment count mismatch");
  const double log2m = std::log2(static_cast<double>(m));
  std::vector<double> renyi(moments.size());
  for (std::size_t i = 0; i < moments.size(); ++i) {
    if (!(moments[i] > 0.0))
      throw std::invalid_argument(
          "entropy_from_moments: moment estimates must be positive");
    const double y = std::log2(moments[i]) - nodes.p[i] * log2m;
    renyi[i] = y / (1.0 - nodes.p[i]);
  }
  return interpolate_at_p1(nodes, renyi);
}

EntropyEstimator::EntropyEstimator(double eps, std::uint64_t m_bound,
                                   const Options& options,
                                   const SeededPrf& prf, StateMeter* meter)
    : nodes_(build_nodes(eps, m_bound)), meter_(meter) {
  StableFpSketch::Options sk;
  sk.rows = options.rows;
  sk.exact_accumulators = options.exact_accumulators;
  sk.accumulator_base = options.accumulator_base;

  // One shared entry tape: node sketches see the same underlying uniforms,
  // so per-row values vary smoothly in the moment order.
  const SeededPrf entry_prf = prf.derive("stable-entries");
  node_sketches_.reserve(nodes_.p.size());
  for (std::size_t i = 0; i < nodes_.p.size(); ++i)
    node_sketches_.emplace_back(nodes_.p[i], sk, entry_prf,
                                prf.word2(0xACC, i), meter);
  control_ = std::make_unique<StableFpSketch>(1.0, sk, entry_prf,
                                              prf.word(0xC0117801), meter);
}

void EntropyEstimator::ingest(std::uint64_t item) {
  ++processed_;
  for (StableFpSketch& sketch : node_sketches_) sketch.ingest(item);
  control_->ingest(item);
}

std::vector<double> EntropyEstimator::moment_estimates() const {
  const double md = static_cast<double>(processed_);
  const double control_scale = control_->scale_estimate();
  std::vector<double> moments;
  moments.reserve(node_sketches_.size());
  for (std::size_t i = 0; i < node_sketches_.size(); ++i) {
    const double scale = node_sketches_[i].scale_estimate();
    moments.push_back(std::pow(scale * md / control_scale, nodes_.p[i]));
  }
  return moments;
}

double EntropyEstimator::estimate() const {
  if (processed_ == 0)
    throw std::invalid_argument("EntropyEstimator: empty stream");
  return entropy_from_moments(nodes_, moment_estimates(), processed_);
}

}  // namespace wesketch
