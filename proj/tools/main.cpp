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

// Experiment CLI: generates streams, runs metered sketches and baselines,
// sweeps parameters, and emits CSV for slope fitting and comparisons.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wesketch/experiment.hpp"
#include "wesketch/generators.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> algos;
  std::string stream;
  std::string out;
  double p = -1, eps = -1, delta = -1;
  std::string preset;
  int trials = -1;
  long long seed = -1;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->config_path, "key=value config file");
  cmd->add_option("--algo", flags->algos,
                  "algorithm: sample-hold|full-sample-hold|fp|stable-fp|"
                  "entropy|mg|ss|cm (repeat to compare)");
  cmd->add_option("--stream", flags->stream,
                  "stream file or spec, e.g. zipf:n=16384,m=131072,s=1.1");
  cmd->add_option("--out", flags->out, "output CSV path");
  cmd->add_option("--p", flags->p, "moment order");
  cmd->add_option("--eps", flags->eps, "accuracy parameter");
  cmd->add_option("--delta", flags->delta, "failure probability");
  cmd->add_option("--preset", flags->preset, "paper|practical");
  cmd->add_option("--trials", flags->trials, "independent trials");
  cmd->add_option("--seed", flags->seed, "base seed");
  cmd->add_option("--set", flags->overrides,
                  "extra key=value overrides (tuning constants etc.)");
}

wesketch::ExperimentConfig build_config(const CommonFlags& flags) {
  wesketch::ExperimentConfig config;
  if (!flags.config_path.empty())
    config = wesketch::parse_config_file(flags.config_path);
  if (!flags.algos.empty()) config.algo = flags.algos.front();
  if (!flags.stream.empty())
    wesketch::apply_config_entry(config, "stream", flags.stream);
  if (!flags.out.empty()) config.out_path = flags.out;
  if (flags.p >= 0) config.p = flags.p;
  if (flags.eps >= 0) config.eps = flags.eps;
  if (flags.delta >= 0) config.delta = flags.delta;
  if (!flags.preset.empty())
    wesketch::apply_config_entry(config, "preset", flags.preset);
  if (flags.trials >= 0) config.trials = flags.trials;
  if (flags.seed >= 0)
    config.seed = static_cast<std::uint64_t>(flags.seed);
  for (const std::string& entry : flags.overrides) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set needs key=value, got '" + entry + "'");
    wesketch::apply_config_entry(config, entry.substr(0, eq),
                                 entry.substr(eq + 1));
  }
  return config;
}

void emit(const wesketch::ExperimentConfig& config, const std::string& csv) {
  if (config.out_path.empty()) std::fputs(csv.c_str(), stdout);
}

int do_gen(const CommonFlags& flags) {
  if (flags.stream.empty() || flags.out.empty())
    throw std::invalid_argument("gen requires --stream <spec> and --out");
  wesketch::StreamSpec spec = wesketch::parse_stream_spec(flags.stream);
  if (spec.seed == 0 && flags.seed >= 0)
    spec.seed = static_cast<std::uint64_t>(flags.seed);
  wesketch::write_stream(flags.out, wesketch::generate(spec));
  return kExitOk;
}

int do_run(const CommonFlags& flags) {
  const wesketch::ExperimentConfig config = build_config(flags);
  const wesketch::RunResult result = wesketch::run_experiment(config);
  emit(config, result.csv);
  return kExitOk;
}

int do_sweep(const CommonFlags& flags, const std::string& vary,
             const std::vector<double>& values) {
  const wesketch::ExperimentConfig config = build_config(flags);
  const wesketch::SweepResult result =
      wesketch::sweep_experiment(config, vary, values);
  emit(config, result.csv);
  std::fprintf(config.out_path.empty() ? stderr : stdout,
               "slope=%.6f stderr=%.6f\n", result.slope, result.slope_stderr);
  return kExitOk;
}

int do_compare(const CommonFlags& flags) {
  if (flags.algos.size() < 2)
    throw std::invalid_argument("compare requires at least two --algo values");
  wesketch::ExperimentConfig config = build_config(flags);
  std::string csv;
  for (std::size_t i = 0; i < flags.algos.size(); ++i) {
    config.algo = flags.algos[i];
    config.out_path.clear();
    const wesketch::RunResult result = wesketch::run_experiment(config);
    if (i == 0)
      csv = result.csv;
    else
      csv += result.csv.substr(result.csv.find('\n') + 1);
  }
  const wesketch::ExperimentConfig base = build_config(flags);
  if (!base.out_path.empty()) {
    std::ofstream f(base.out_path);
    if (!f) throw wesketch::StreamIoError(
        wesketch::StreamIoError::Kind::kTruncated,
        "cannot open output file " + base.out_path);
    f << csv;
  } else {
    std::fputs(csv.c_str(), stdout);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"write-efficient streaming sketches: experiment runner"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string vary = "n";
  std::vector<double> values;

  CLI::App* gen = app.add_subcommand("gen", "generate a stream file");
  add_common(gen, &flags);
  CLI::App* run = app.add_subcommand("run", "run trials, emit CSV");
  add_common(run, &flags);
  CLI::App* sweep = app.add_subcommand("sweep", "sweep a parameter, fit slope");
  add_common(sweep, &flags);
  sweep->add_option("--vary", vary, "n|m|eps");
  sweep->add_option("--values", values, "sweep points (>= 4)")->delimiter(',');
  CLI::App* compare =
      app.add_subcommand("compare", "run several algorithms on one stream");
  add_common(compare, &flags);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return do_gen(flags);
    if (run->parsed()) return do_run(flags);
    if (sweep->parsed()) return do_sweep(flags, vary, values);
    if (compare->parsed()) return do_compare(flags);
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const wesketch::StreamIoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
