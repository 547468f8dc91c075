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
#include <string>
#include <vector>

#include "wesketch/generators.hpp"
#include "wesketch/params.hpp"

namespace wesketch {

// A config plus the code version determines every output byte. Wall-clock
// timing is opt-in because it is the one inherently non-reproducible
// column; with timing off the column holds zeros.
struct ExperimentConfig {
  StreamSpec stream;
  std::string stream_path;  // when set, the stream is read from this file

  std::string algo = "fp";  // sample-hold | full-sample-hold | fp |
                            // stable-fp | entropy | mg | ss | cm
  double p = 2.0;
  double eps = 0.2;
  double delta = 0.05;
  Preset preset = Preset::kPractical;
  PracticalTuning tuning;

  int trials = 1;
  std::uint64_t seed = 1;
  std::string out_path;
  bool timing = false;
  int threads = 0;  // 0 = hardware concurrency

  bool exact_counters = false;
  PrunePolicy prune_policy = PrunePolicy::kAgeBucketed;
  EstimateMode estimate_mode = EstimateMode::kRescaled;

  int stable_rows = 1600;
  double stable_base = 0.02;
  int entropy_rows = 512;

  std::uint64_t mg_k = 64;
  std::uint64_t ss_k = 64;
  std::uint64_t cm_width = 2048;
  std::uint64_t cm_depth = 5;
};

struct TrialResult {
  int trial = 0;
  std::uint64_t seed = 0;
  double estimate = 0;
  double oracle = 0;
  double rel_err = 0;
  std::uint64_t state_changes = 0;
  std::uint64_t peak_words = 0;
  double wall_ms = 0;
};

struct RunResult {
  std::vector<TrialResult> rows;
  std::string csv;  // header + one line per trial, deterministic bytes
};

struct SweepPoint {
  double value = 0;
  double mean_state_changes = 0;
  std::vector<TrialResult> rows;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double slope = 0;
  double slope_stderr = 0;
  std::string csv;
};

extern const char kCsvHeader[];

// Runs config.trials independent seeded trials (in parallel worker threads,
// results ordered by trial index) and renders the CSV.
RunResult run_experiment(const ExperimentConfig& config);

// Re-runs the experiment for each value of the varied field ("n", "m" or
// "eps", at least 4 values) and least-squares fits the log-log slope of the
// mean state-change count against the varied value.
SweepResult sweep_experiment(const ExperimentConfig& config,
                             const std::string& vary,
                             const std::vector<double>& values);

// "kind:key=value,key=value" descriptions, e.g. "zipf:n=16384,m=131072,s=1.1".
StreamSpec parse_stream_spec(const std::string& text);

// Flat key=value config file; '#' starts a comment.
ExperimentConfig parse_config_file(const std::string& path);

// Applies one key=value override; throws std::invalid_argument on unknown
// keys or bad values.
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

// Least-squares slope of log(y) on log(x) plus its standard error.
std::pair<double, double> loglog_slope(const std::vector<double>& x,
                                       const std::vector<double>& y);

}  // namespace wesketch
