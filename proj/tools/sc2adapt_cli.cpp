// Copyright 2026 The sc2adapt Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sc2adapt/version.hpp"
#include "sc2adapt/workflow.hpp"

namespace {

using sc2adapt::OutputFormat;
using sc2adapt::RunRecord;
using sc2adapt::WorkflowConfig;

constexpr int kExitOk = 0;
constexpr int kExitStageFailure = 1;
constexpr int kExitConfigError = 2;

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::string mode;
  std::optional<double> delta;
  std::optional<double> epsilon;
  std::vector<double> couplings;
  std::optional<int> max_volume;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
};

void add_common_options(CLI::App* app, CliOptions& opts) {
  app->add_option("--config", opts.config_path, "JSON workflow config file");
  app->add_option("--out", opts.out_dir, "output directory for the run record");
  app->add_option("--mode", opts.mode,
                  "sc2_fixed_ansatz or full_singles_per_volume");
  app->add_option("--delta", opts.delta, "pool cutoff");
  app->add_option("--epsilon", opts.epsilon, "ADAPT gradient threshold");
  app->add_option("--couplings", opts.couplings, "a*g values")->delimiter(',');
  app->add_option("--max-volume", opts.max_volume,
                  "surrogate and ADAPT volume");
  app->add_option("--seed", opts.seed, "seed for the Lanczos fallback start");
  app->add_option("--format", opts.format, "emit format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

WorkflowConfig resolve_config(const CliOptions& opts) {
  WorkflowConfig config;
  if (opts.couplings.empty() && opts.config_path.empty()) {
    throw std::invalid_argument(
        "either --config or --couplings must be given");
  }
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      throw std::invalid_argument("cannot open config file '" +
                                  opts.config_path + "'");
    }
    nlohmann::json j;
    in >> j;
    config = WorkflowConfig::from_json(j);
  }
  if (!opts.couplings.empty()) config.couplings = opts.couplings;
  if (!opts.mode.empty()) {
    config.mode = sc2adapt::workflow_mode_from_string(opts.mode);
  }
  if (opts.delta) config.delta = *opts.delta;
  if (opts.epsilon) config.epsilon = *opts.epsilon;
  if (opts.max_volume) {
    config.surrogate_volume = *opts.max_volume;
    config.adapt_volume = *opts.max_volume;
  }
  if (opts.seed) config.seed = *opts.seed;
  if (!opts.out_dir.empty()) config.output_dir = opts.out_dir;
  config.validate();
  return config;
}

std::filesystem::path record_path(const WorkflowConfig& config) {
  return std::filesystem::path(config.output_dir) / "record.json";
}

RunRecord load_or_init(const WorkflowConfig& config) {
  const auto path = record_path(config);
  if (std::filesystem::exists(path)) {
    RunRecord record = sc2adapt::load_record(path);
    record.config.output_dir = config.output_dir;
    return record;
  }
  return sc2adapt::init_record(config);
}

void save(RunRecord& record) {
  std::filesystem::create_directories(record.config.output_dir);
  sc2adapt::save_record(record, record_path(record.config));
}

int report(const RunRecord& record) {
  for (const auto& c : record.couplings) {
    if (!c.ok()) {
      std::cerr << "ag=" << c.ag << ": " << c.error << '\n';
    }
  }
  if (!record.continuum_error.empty()) {
    std::cerr << "continuum: " << record.continuum_error << '\n';
  }
  return record.ok() ? kExitOk : kExitStageFailure;
}

OutputFormat format_of(const CliOptions& opts) {
  return opts.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Surrogate-truncated scalable-circuits ADAPT-VQE for the lattice "
      "Schwinger model"};
  app.set_version_flag("--version", sc2adapt::kVersion);
  app.require_subcommand(1);

  CliOptions opts;
  CLI::App* cmd_run = app.add_subcommand(
      "run", "full workflow: score, adapt, sweep, extrapolate, emit");
  CLI::App* cmd_score =
      app.add_subcommand("score", "surrogate ground states and pool scores");
  CLI::App* cmd_adapt =
      app.add_subcommand("adapt", "ADAPT run at the top volume");
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "per-volume optimization and observables");
  CLI::App* cmd_extrapolate = app.add_subcommand(
      "extrapolate", "infinite-volume and continuum fits, file emission");
  for (CLI::App* cmd :
       {cmd_run, cmd_score, cmd_adapt, cmd_sweep, cmd_extrapolate}) {
    add_common_options(cmd, opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  WorkflowConfig config;
  try {
    config = resolve_config(opts);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (cmd_run->parsed()) {
      RunRecord record = sc2adapt::run_workflow(config);
      sc2adapt::emit_results(record, config.output_dir, format_of(opts));
      return report(record);
    }
    RunRecord record = load_or_init(config);
    if (cmd_score->parsed()) {
      sc2adapt::stage_score(record);
    } else if (cmd_adapt->parsed()) {
      if (record.couplings.empty() ||
          record.couplings.front().scores.empty()) {
        sc2adapt::stage_score(record);
      }
      sc2adapt::stage_adapt(record);
    } else if (cmd_sweep->parsed()) {
      sc2adapt::stage_sweep(record);
    } else if (cmd_extrapolate->parsed()) {
      sc2adapt::stage_extrapolate(record);
      save(record);
      sc2adapt::emit_results(record, record.config.output_dir,
                             format_of(opts));
      return report(record);
    }
    save(record);
    return report(record);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStageFailure;
  }
}
