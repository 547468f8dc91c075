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

#include "wesketch/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wesketch/baselines.hpp"
#include "wesketch/entropy.hpp"
#include "wesketch/fp_estimator.hpp"
#include "wesketch/full_sample_hold.hpp"
#include "wesketch/oracle.hpp"
#include "wesketch/sample_hold.hpp"
#include "wesketch/stable_fp.hpp"

namespace wesketch {

const char kCsvHeader[] =
    "trial,seed,algo,n,m,p,eps,estimate,oracle,rel_err,state_changes,"
    "peak_words,wall_ms";

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

double relative_error(double estimate, double oracle) {
  if (oracle == 0.0) return std::fabs(estimate);
  return std::fabs(estimate - oracle) / std::fabs(oracle);
}

SketchParams params_for(const ExperimentConfig& config, const Stream& stream) {
  SketchParams sp =
      derive_params(stream.n, stream.m(), config.eps, config.delta, config.p,
                    config.preset, config.tuning);
  sp.exact_counters = config.exact_counters;
  sp.prune_policy = config.prune_policy;
  sp.estimate_mode = config.estimate_mode;
  return sp;
}

TrialResult run_trial(const ExperimentConfig& config, const Stream& stream,
                      const FrequencyOracle& oracle, int trial) {
  TrialResult result;
  result.trial = trial;
  result.seed = config.seed + static_cast<std::uint64_t>(trial);

  StateMeter meter;
  const SeededPrf prf(result.seed, config.algo);
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t top = oracle.top_item();
  if (config.algo == "sample-hold") {
    SampleHold sketch(params_for(config, stream), prf, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate(top);
    result.oracle = static_cast<double>(oracle.frequency(top));
  } else if (config.algo == "full-sample-hold") {
    FullSampleHold sketch(params_for(config, stream), prf, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate(top);
    result.oracle = static_cast<double>(oracle.frequency(top));
  } else if (config.algo == "fp") {
    FpEstimator sketch(params_for(config, stream), prf, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate();
    result.oracle = static_cast<double>(oracle.exact_fp(config.p));
  } else if (config.algo == "stable-fp") {
    StableFpSketch::Options options;
    options.rows = config.stable_rows;
    options.accumulator_base = config.stable_base;
    StableFpSketch sketch(config.p, options, prf.derive("entries"),
                          prf.word(0xACC), &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate();
    result.oracle = static_cast<double>(oracle.exact_fp(config.p));
  } else if (config.algo == "entropy") {
    EntropyEstimator::Options options;
    options.rows = config.entropy_rows;
    EntropyEstimator sketch(config.eps, stream.m(), options, prf, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate();
    result.oracle = oracle.exact_entropy();
  } else if (config.algo == "mg") {
    MisraGries sketch(config.mg_k, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate(top);
    result.oracle = static_cast<double>(oracle.frequency(top));
  } else if (config.algo == "ss") {
    SpaceSaving sketch(config.ss_k, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate(top);
    result.oracle = static_cast<double>(oracle.frequency(top));
  } else if (config.algo == "cm") {
    CountMin sketch(config.cm_width, config.cm_depth, result.seed, &meter);
    std::uint64_t t = 0;
    for (std::uint64_t item : stream.items) sketch.process(++t, item);
    result.estimate = sketch.estimate(top);
    result.oracle = static_cast<double>(oracle.frequency(top));
  } else {
    throw std::invalid_argument("unknown algorithm '" + config.algo + "'");
  }

  const auto stop = std::chrono::steady_clock::now();
  result.rel_err = relative_error(result.estimate, result.oracle);
  result.state_changes = meter.total_state_changes();
  result.peak_words = meter.peak_words();
  result.wall_ms =
      config.timing
          ? std::chrono::duration<double, std::milli>(stop - start).count()
          : 0.0;
  return result;
}

Stream materialize_stream(const ExperimentConfig& config) {
  if (!config.stream_path.empty()) return read_stream(config.stream_path);
  StreamSpec spec = config.stream;
  if (spec.seed == 0) spec.seed = config.seed;
  return generate(spec);
}

void append_rows(std::string& csv, const ExperimentConfig& config,
                 const Stream& stream, const std::vector<TrialResult>& rows) {
  for (const TrialResult& r : rows) {
    csv += std::to_string(r.trial);
    csv += ',';
    csv += std::to_string(r.seed);
    csv += ',';
    csv += config.algo;
    csv += ',';
    csv += std::to_string(stream.n);
    csv += ',';
    csv += std::to_string(stream.m());
    csv += ',';
    csv += format_double(config.p);
    csv += ',';
    csv += format_double(config.eps);
    csv += ',';
    csv += format_double(r.estimate);
    csv += ',';
    csv += format_double(r.oracle);
    csv += ',';
    csv += format_double(r.rel_err);
    csv += ',';
    csv += std::to_string(r.state_changes);
    csv += ',';
    csv += std::to_string(r.peak_words);
    csv += ',';
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
    csv += wall;
    csv += '\n';
  }
}

std::vector<TrialResult> run_trials(const ExperimentConfig& config,
                                    const Stream& stream,
                                    const FrequencyOracle& oracle) {
  std::vector<TrialResult> rows(static_cast<std::size_t>(config.trials));
  int workers = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, config.trials));

  if (workers == 1) {
    for (int trial = 0; trial < config.trials; ++trial)
      rows[static_cast<std::size_t>(trial)] =
          run_trial(config, stream, oracle, trial);
    return rows;
  }

  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int trial = next.fetch_add(1);
        if (trial >= config.trials || failed.load()) return;
        try {
          rows[static_cast<std::size_t>(trial)] =
              run_trial(config, stream, oracle, trial);
        } catch (...) {
          failed.store(true);
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failed.load())
    throw std::runtime_error("run_experiment: a trial failed");
  return rows;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("run_experiment: trials must be >= 1");
  const Stream stream = materialize_stream(config);
  const FrequencyOracle oracle(stream);

  RunResult out;
  out.rows = run_trials(config, stream, oracle);
  out.csv = kCsvHeader;
  out.csv += '\n';
  append_rows(out.csv, config, stream, out.rows);

  if (!config.out_path.empty()) {
    std::ofstream f(config.out_path);
    if (!f)
      throw StreamIoError(StreamIoError::Kind::kTruncated,
                          "cannot open output file " + config.out_path);
    f << out.csv;
  }
  return out;
}

std::pair<double, double> loglog_slope(const std::vector<double>& x,
                                       const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n)
    throw std::invalid_argument("loglog_slope: need matching x/y, >= 2 points");
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double slope = sxy / sxx;
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = my + slope * (lx[i] - mx);
    ss_res += (ly[i] - fit) * (ly[i] - fit);
  }
  const double se =
      n > 2 ? std::sqrt(ss_res / static_cast<double>(n - 2) / sxx) : 0.0;
  return {slope, se};
}

SweepResult sweep_experiment(const ExperimentConfig& config,
                             const std::string& vary,
                             const std::vector<double>& values) {
  if (values.size() < 4)
    throw std::invalid_argument("sweep_experiment: need at least 4 points");
  if (vary != "n" && vary != "m" && vary != "eps")
    throw std::invalid_argument("sweep_experiment: vary must be n, m or eps");

  SweepResult out;
  out.csv = kCsvHeader;
  out.csv += '\n';

  std::vector<double> mean_changes;
  for (double value : values) {
    ExperimentConfig point = config;
    point.out_path.clear();
    if (vary == "n") {
      point.stream.n = static_cast<std::uint64_t>(value);
      if (point.stream.kind == StreamKind::kZipf && point.stream.m == 0)
        point.stream.m = point.stream.n;
    } else if (vary == "m") {
      point.stream.m = static_cast<std::uint64_t>(value);
      if (point.stream.kind != StreamKind::kZipf)
        point.stream.n = static_cast<std::uint64_t>(value);
    } else {
      point.eps = value;
    }

    const Stream stream = materialize_stream(point);
    const FrequencyOracle oracle(stream);
    SweepPoint sp;
    sp.value = value;
    sp.rows = run_trials(point, stream, oracle);
    double total = 0;
    for (const TrialResult& r : sp.rows)
      total += static_cast<double>(r.state_changes);
    sp.mean_state_changes = total / static_cast<double>(sp.rows.size());
    append_rows(out.csv, point, stream, sp.rows);
    mean_changes.push_back(std::max(1.0, sp.mean_state_changes));
    out.points.push_back(std::move(sp));
  }

  auto [slope, se] = loglog_slope(values, mean_changes);
  out.slope = slope;
  out.slope_stderr = se;

  if (!config.out_path.empty()) {
    std::ofstream f(config.out_path);
    if (!f)
      throw StreamIoError(StreamIoError::Kind::kTruncated,
                          "cannot open output file " + config.out_path);
    f << out.csv;
  }
  return out;
}

StreamSpec parse_stream_spec(const std::string& text) {
  StreamSpec spec;
  const std::size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (kind == "permutation")
    spec.kind = StreamKind::kPermutation;
  else if (kind == "zipf")
    spec.kind = StreamKind::kZipf;
  else if (kind == "planted-hh")
    spec.kind = StreamKind::kPlantedHh;
  else if (kind == "lowerbound-s1")
    spec.kind = StreamKind::kLowerboundS1;
  else if (kind == "lowerbound-s2")
    spec.kind = StreamKind::kLowerboundS2;
  else if (kind == "pseudoheavy")
    spec.kind = StreamKind::kPseudoheavy;
  else
    throw std::invalid_argument("unknown stream kind '" + kind + "'");

  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string pair;
  while (std::getline(rest, pair, ',')) {
    if (pair.empty()) continue;
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad stream spec entry '" + pair + "'");
    const std::string key = pair.substr(0, eq);
    const std::string value = pair.substr(eq + 1);
    try {
      if (key == "n")
        spec.n = std::stoull(value);
      else if (key == "m")
        spec.m = std::stoull(value);
      else if (key == "p")
        spec.p = std::stod(value);
      else if (key == "s")
        spec.zipf_s = std::stod(value);
      else if (key == "eps")
        spec.eps = std::stod(value);
      else if (key == "seed")
        spec.seed = std::stoull(value);
      else
        throw std::invalid_argument("unknown stream spec key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value for stream spec key '" + key +
                                  "'");
    }
  }
  return spec;
}

void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value) {
  try {
    if (key == "stream") {
      // Values with a ':' or a bare kind name are specs; anything else is
      // a file path (missing files surface as io errors at read time).
      static const char* kKinds[] = {"permutation",   "zipf",
                                     "planted-hh",    "lowerbound-s1",
                                     "lowerbound-s2", "pseudoheavy"};
      bool is_spec = value.find(':') != std::string::npos;
      for (const char* kind : kKinds) is_spec = is_spec || value == kind;
      if (is_spec) {
        config.stream = parse_stream_spec(value);
        config.stream_path.clear();
      } else {
        config.stream_path = value;
      }
    } else if (key == "algo") {
      config.algo = value;
    } else if (key == "p") {
      config.p = std::stod(value);
    } else if (key == "eps") {
      config.eps = std::stod(value);
    } else if (key == "delta") {
      config.delta = std::stod(value);
    } else if (key == "preset") {
      if (value == "paper")
        config.preset = Preset::kPaperFaithful;
      else if (value == "practical")
        config.preset = Preset::kPractical;
      else
        throw std::invalid_argument("preset must be paper or practical");
    } else if (key == "trials") {
      config.trials = std::stoi(value);
    } else if (key == "seed") {
      config.seed = std::stoull(value);
    } else if (key == "out") {
      config.out_path = value;
    } else if (key == "timing") {
      config.timing = value == "1" || value == "on" || value == "true";
    } else if (key == "threads") {
      config.threads = std::stoi(value);
    } else if (key == "exact_counters") {
      config.exact_counters = value == "1" || value == "on" || value == "true";
    } else if (key == "prune") {
      if (value == "age")
        config.prune_policy = PrunePolicy::kAgeBucketed;
      else if (value == "global")
        config.prune_policy = PrunePolicy::kGlobalSmallest;
      else
        throw std::invalid_argument("prune must be age or global");
    } else if (key == "estimate_mode") {
      if (value == "rescaled")
        config.estimate_mode = EstimateMode::kRescaled;
      else if (value == "literal")
        config.estimate_mode = EstimateMode::kLiteral;
      else if (value == "max")
        config.estimate_mode = EstimateMode::kMaxRescaled;
      else
        throw std::invalid_argument("estimate_mode must be rescaled, literal or max");
    } else if (key == "stable_rows") {
      config.stable_rows = std::stoi(value);
    } else if (key == "stable_base") {
      config.stable_base = std::stod(value);
    } else if (key == "entropy_rows") {
      config.entropy_rows = std::stoi(value);
    } else if (key == "mg_k") {
      config.mg_k = std::stoull(value);
    } else if (key == "ss_k") {
      config.ss_k = std::stoull(value);
    } else if (key == "cm_width") {
      config.cm_width = std::stoull(value);
    } else if (key == "cm_depth") {
      config.cm_depth = std::stoull(value);
    } else if (key == "c_rho") {
      config.tuning.c_rho = std::stod(value);
    } else if (key == "c_kappa") {
      config.tuning.c_kappa = std::stod(value);
    } else if (key == "c_k") {
      config.tuning.c_k = std::stod(value);
    } else if (key == "gamma") {
      config.tuning.gamma = std::stod(value);
    } else if (key == "r_rows") {
      config.tuning.r_rows = std::stoi(value);
    } else if (key == "r_fp") {
      config.tuning.r_fp = std::stoi(value);
    } else if (key == "counter_eps") {
      config.tuning.counter_eps = std::stod(value);
    } else if (key == "counter_delta") {
      config.tuning.counter_delta = std::stod(value);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for config key '" + key + "'");
  }
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw StreamIoError(StreamIoError::Kind::kTruncated,
                        "cannot open config file " + path);
  ExperimentConfig config;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const std::size_t eq = line.find('=', start);
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    apply_config_entry(config, line.substr(start, eq - start),
                       line.substr(eq + 1));
  }
  return config;
}

}  // namespace wesketch
