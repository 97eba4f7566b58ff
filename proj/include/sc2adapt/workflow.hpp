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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sc2adapt/adapt.hpp"
#include "sc2adapt/extrapolation.hpp"
#include "sc2adapt/lanczos.hpp"
#include "sc2adapt/pool.hpp"
#include "sc2adapt/scoring.hpp"

namespace sc2adapt {

enum class WorkflowMode {
  Sc2FixedAnsatz,        // one ADAPT run at the top volume, fixed-ansatz VQE
                         // at every smaller volume down to the pool minimum
  FullSinglesPerVolume,  // control: independent ADAPT per volume, no cutoff
};

const char* to_string(WorkflowMode mode);
WorkflowMode workflow_mode_from_string(std::string_view text);

struct WorkflowConfig {
  std::vector<double> couplings;  // a*g values
  double bare_mass = 0.0;
  double spacing = 1.0;
  bool improved_mass = false;
  int surrogate_volume = 16;  // where pool scores are evaluated
  int adapt_volume = 16;      // where the single ADAPT run happens
  double delta = 1e-5;        // pool cutoff
  double epsilon = 1e-3;      // ADAPT gradient threshold
  PoolConfig pool;
  int max_depth = 100;
  double optimizer_tol = 1e-8;
  double tie_tolerance = 1e-12;
  int optimizer_max_iterations = 500;
  double lanczos_tolerance = 1e-10;
  int lanczos_max_iterations = 500;
  int min_volume_full_singles = 4;  // the full pool has no minimum volume
  ThermoFitFamily thermo_family = ThermoFitFamily::InverseVolumePlusGap;
  int continuum_degree = 2;
  WorkflowMode mode = WorkflowMode::Sc2FixedAnsatz;
  std::uint64_t seed = 1;
  std::string output_dir = "out";

  AdaptConfig adapt_config() const;
  void validate() const;

  nlohmann::json to_json() const;
  static WorkflowConfig from_json(const nlohmann::json& j);
};

struct SurrogateInfo {
  int volume = 0;
  double energy = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

struct VolumeResult {
  int sites = 0;
  std::vector<PoolLabel> labels;  // circuit operators at this volume, in order
  std::vector<double> angles;
  double energy = 0.0;
  double condensate = 0.0;
  int vqe_iterations = 0;
  VqeStatus vqe_status = VqeStatus::Converged;
};

struct CouplingRecord {
  double ag = 0.0;
  SurrogateInfo surrogate;
  std::vector<PoolScore> scores;
  std::vector<PoolLabel> truncated_pool;
  int min_volume = 0;  // of the pool actually used for the sweep
  AdaptHistory adapt;
  std::vector<VolumeResult> volumes;  // descending sites
  std::optional<FitResult> thermodynamic_fit;
  std::string error;  // empty when every stage succeeded

  bool ok() const { return error.empty(); }
};

/// Self-contained outcome of one workflow run: re-running from the embedded
/// config reproduces every number (no unseeded randomness anywhere).
struct RunRecord {
  int schema_version = 0;
  WorkflowConfig config;
  std::vector<CouplingRecord> couplings;
  std::optional<FitResult> continuum_fit;
  std::string continuum_error;
  std::string software_version;
  std::string compiler_info;
  std::string started_at;
  std::string finished_at;

  bool ok() const;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

/// Individual stages; each consumes what earlier stages left in the record
/// and skips couplings already marked failed.
RunRecord init_record(const WorkflowConfig& config);
void stage_score(RunRecord& record);
void stage_adapt(RunRecord& record);
void stage_sweep(RunRecord& record);
void stage_extrapolate(RunRecord& record);

/// The whole pipeline. Per-coupling failures are recorded, not thrown; the
/// record is persisted to <output_dir>/record.json after every stage.
RunRecord run_workflow(const WorkflowConfig& config);

void save_record(const RunRecord& record, const std::filesystem::path& path);
RunRecord load_record(const std::filesystem::path& path);

enum class OutputFormat { Csv, Json };

/// Writes the tabular stage files (scores, selection grid, angle series,
/// condensate series with fit curves, continuum series) into `directory`.
/// Emission only reads the record; running it twice produces byte-identical
/// files.
std::vector<std::filesystem::path> emit_results(
    const RunRecord& record, const std::filesystem::path& directory,
    OutputFormat format = OutputFormat::Csv);

}  // namespace sc2adapt
