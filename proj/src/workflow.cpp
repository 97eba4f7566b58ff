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

#include "sc2adapt/workflow.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include "sc2adapt/schwinger.hpp"
#include "sc2adapt/version.hpp"

namespace sc2adapt {

namespace {

using nlohmann::json;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string coupling_tag(double ag) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", ag);
  return buf;
}

std::string now_iso8601() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* to_string(ThermoFitFamily family) {
  switch (family) {
    case ThermoFitFamily::InversePolynomial:
      return "inverse_polynomial";
    case ThermoFitFamily::ExponentialDecay:
      return "exponential_decay";
    case ThermoFitFamily::InverseVolumePlusGap:
      return "inverse_volume_plus_gap";
  }
  return "unknown";
}

ThermoFitFamily thermo_family_from_string(std::string_view text) {
  if (text == "inverse_polynomial") return ThermoFitFamily::InversePolynomial;
  if (text == "exponential_decay") return ThermoFitFamily::ExponentialDecay;
  if (text == "inverse_volume_plus_gap") {
    return ThermoFitFamily::InverseVolumePlusGap;
  }
  throw std::invalid_argument("unknown thermodynamic fit family '" +
                              std::string(text) + "'");
}

json fit_to_json(const FitResult& fit) {
  return json{{"model", fit.model_tag},
              {"limit", fit.limit},
              {"uncertainty", fit.uncertainty},
              {"coefficients", fit.coefficients},
              {"covariance", fit.covariance},
              {"residuals", fit.residuals}};
}

FitResult fit_from_json(const json& j) {
  FitResult fit;
  fit.model_tag = j.at("model").get<std::string>();
  fit.limit = j.at("limit").get<double>();
  fit.uncertainty = j.at("uncertainty").get<double>();
  fit.coefficients = j.at("coefficients").get<std::vector<double>>();
  fit.covariance = j.at("covariance").get<std::vector<double>>();
  fit.residuals = j.at("residuals").get<std::vector<double>>();
  return fit;
}

std::vector<std::string> labels_to_strings(std::span<const PoolLabel> labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const PoolLabel& label : labels) out.push_back(label.str());
  return out;
}

std::vector<PoolLabel> labels_from_strings(const std::vector<std::string>& in) {
  std::vector<PoolLabel> out;
  out.reserve(in.size());
  for (const std::string& s : in) out.push_back(PoolLabel::parse(s));
  return out;
}

LatticeParams lattice_params(const WorkflowConfig& config, double ag,
                             int sites) {
  LatticeParams params;
  params.sites = sites;
  params.spacing = config.spacing;
  params.coupling = ag / config.spacing;
  params.bare_mass = config.bare_mass;
  params.improved_mass = config.improved_mass;
  return params;
}

std::vector<PoolLabel> circuit_labels(const AdaptHistory& history) {
  std::vector<PoolLabel> labels;
  labels.reserve(history.iterations.size());
  for (const AdaptIterationRecord& it : history.iterations) {
    labels.push_back(it.selected);
  }
  return labels;
}

AnsatzCircuit circuit_from_labels(std::span<const PoolLabel> labels, int sites,
                                  const std::string& pool_id) {
  AnsatzCircuit circuit;
  circuit.sites = sites;
  circuit.pool_id = pool_id;
  for (const PoolLabel& label : labels) circuit.entries.push_back({label, 0.0});
  return circuit;
}

VolumeResult measure_volume(const WorkflowConfig& config, double ag, int sites,
                            std::span<const PoolLabel> labels,
                            std::span<const double> angles, int vqe_iterations,
                            VqeStatus status) {
  const PauliTermSum h = build_hamiltonian(lattice_params(config, ag, sites));
  const CompiledSum compiled(h);
  const AnsatzCircuit circuit = circuit_from_labels(labels, sites, "");
  const Statevector state =
      apply_ansatz(circuit, angles, reference_state(sites));
  VolumeResult result;
  result.sites = sites;
  result.labels.assign(labels.begin(), labels.end());
  result.angles.assign(angles.begin(), angles.end());
  result.energy = compiled.expectation(state);
  result.condensate = chiral_condensate(state);
  result.vqe_iterations = vqe_iterations;
  result.vqe_status = status;
  return result;
}

}  // namespace

const char* to_string(WorkflowMode mode) {
  return mode == WorkflowMode::Sc2FixedAnsatz ? "sc2_fixed_ansatz"
                                              : "full_singles_per_volume";
}

WorkflowMode workflow_mode_from_string(std::string_view text) {
  if (text == "sc2_fixed_ansatz") return WorkflowMode::Sc2FixedAnsatz;
  if (text == "full_singles_per_volume") {
    return WorkflowMode::FullSinglesPerVolume;
  }
  throw std::invalid_argument("unknown workflow mode '" + std::string(text) +
                              "'");
}

AdaptConfig WorkflowConfig::adapt_config() const {
  AdaptConfig adapt;
  adapt.epsilon = epsilon;
  adapt.max_depth = max_depth;
  adapt.optimizer_tol = optimizer_tol;
  adapt.tie_tolerance = tie_tolerance;
  adapt.optimizer_max_iterations = optimizer_max_iterations;
  return adapt;
}

void WorkflowConfig::validate() const {
  if (couplings.empty()) {
    throw std::invalid_argument("workflow config: couplings list is empty");
  }
  for (double ag : couplings) {
    if (!(ag > 0.0)) {
      throw std::invalid_argument("workflow config: couplings must be > 0");
    }
  }
  if (surrogate_volume < 2 || surrogate_volume % 2 != 0) {
    throw std::invalid_argument("workflow config: surrogate_volume must be even");
  }
  if (adapt_volume < 2 || adapt_volume % 2 != 0) {
    throw std::invalid_argument("workflow config: adapt_volume must be even");
  }
  if (min_volume_full_singles < 2 || min_volume_full_singles % 2 != 0) {
    throw std::invalid_argument(
        "workflow config: min_volume_full_singles must be even");
  }
  if (delta < 0.0) {
    throw std::invalid_argument("workflow config: delta must be >= 0");
  }
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("workflow config: spacing must be positive");
  }
  if (output_dir.empty()) {
    throw std::invalid_argument("workflow config: output_dir is empty");
  }
  adapt_config().validate();  // epsilon / optimizer_tol relation
}

json WorkflowConfig::to_json() const {
  return json{{"couplings", couplings},
              {"bare_mass", bare_mass},
              {"spacing", spacing},
              {"improved_mass", improved_mass},
              {"surrogate_volume", surrogate_volume},
              {"adapt_volume", adapt_volume},
              {"delta", delta},
              {"epsilon", epsilon},
              {"pool",
               {{"odd_span_only", pool.odd_span_only},
                {"max_surface_offset", pool.max_surface_offset},
                {"include_surface", pool.include_surface}}},
              {"max_depth", max_depth},
              {"optimizer_tol", optimizer_tol},
              {"tie_tolerance", tie_tolerance},
              {"optimizer_max_iterations", optimizer_max_iterations},
              {"lanczos_tolerance", lanczos_tolerance},
              {"lanczos_max_iterations", lanczos_max_iterations},
              {"min_volume_full_singles", min_volume_full_singles},
              {"thermo_fit_family", to_string(thermo_family)},
              {"continuum_degree", continuum_degree},
              {"mode", to_string(mode)},
              {"seed", seed},
              {"output_dir", output_dir}};
}

WorkflowConfig WorkflowConfig::from_json(const json& j) {
  WorkflowConfig config;
  config.couplings = j.value("couplings", config.couplings);
  config.bare_mass = j.value("bare_mass", config.bare_mass);
  config.spacing = j.value("spacing", config.spacing);
  config.improved_mass = j.value("improved_mass", config.improved_mass);
  config.surrogate_volume = j.value("surrogate_volume", config.surrogate_volume);
  config.adapt_volume = j.value("adapt_volume", config.adapt_volume);
  config.delta = j.value("delta", config.delta);
  config.epsilon = j.value("epsilon", config.epsilon);
  if (j.contains("pool")) {
    const json& p = j.at("pool");
    config.pool.odd_span_only =
        p.value("odd_span_only", config.pool.odd_span_only);
    config.pool.max_surface_offset =
        p.value("max_surface_offset", config.pool.max_surface_offset);
    config.pool.include_surface =
        p.value("include_surface", config.pool.include_surface);
  }
  config.max_depth = j.value("max_depth", config.max_depth);
  config.optimizer_tol = j.value("optimizer_tol", config.optimizer_tol);
  config.tie_tolerance = j.value("tie_tolerance", config.tie_tolerance);
  config.optimizer_max_iterations =
      j.value("optimizer_max_iterations", config.optimizer_max_iterations);
  config.lanczos_tolerance =
      j.value("lanczos_tolerance", config.lanczos_tolerance);
  config.lanczos_max_iterations =
      j.value("lanczos_max_iterations", config.lanczos_max_iterations);
  config.min_volume_full_singles =
      j.value("min_volume_full_singles", config.min_volume_full_singles);
  if (j.contains("thermo_fit_family")) {
    config.thermo_family =
        thermo_family_from_string(j.at("thermo_fit_family").get<std::string>());
  }
  config.continuum_degree = j.value("continuum_degree", config.continuum_degree);
  if (j.contains("mode")) {
    config.mode = workflow_mode_from_string(j.at("mode").get<std::string>());
  }
  config.seed = j.value("seed", config.seed);
  config.output_dir = j.value("output_dir", config.output_dir);
  return config;
}

bool RunRecord::ok() const {
  if (!continuum_error.empty()) return false;
  for (const CouplingRecord& c : couplings) {
    if (!c.ok()) return false;
  }
  return true;
}

json RunRecord::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["software"] = {{"name", "sc2adapt"},
                   {"version", software_version},
                   {"compiler", compiler_info}};
  j["timestamps"] = {{"started", started_at}, {"finished", finished_at}};
  j["config"] = config.to_json();
  json couplings_json = json::array();
  for (const CouplingRecord& c : couplings) {
    json cj;
    cj["ag"] = c.ag;
    cj["surrogate"] = {{"volume", c.surrogate.volume},
                       {"energy", c.surrogate.energy},
                       {"residual", c.surrogate.residual},
                       {"iterations", c.surrogate.iterations}};
    json scores_json = json::array();
    for (const PoolScore& s : c.scores) {
      scores_json.push_back({{"label", s.label.str()},
                             {"overlap", s.overlap},
                             {"ratio", s.ratio}});
    }
    cj["scores"] = scores_json;
    cj["truncated_pool"] = labels_to_strings(c.truncated_pool);
    cj["min_volume"] = c.min_volume;
    json adapt_json;
    adapt_json["depth"] = c.adapt.iterations.size();
    adapt_json["completed"] = c.adapt.completed;
    adapt_json["depth_capped"] = c.adapt.depth_capped;
    adapt_json["final_max_gradient"] = c.adapt.final_max_gradient;
    adapt_json["trotter_order"] = "ascending_site";
    json iterations_json = json::array();
    for (const AdaptIterationRecord& it : c.adapt.iterations) {
      iterations_json.push_back({{"label", it.selected.str()},
                                 {"max_gradient", it.max_gradient},
                                 {"energy", it.energy},
                                 {"angles", it.angles},
                                 {"optimizer_status",
                                  to_string(it.optimizer_status)},
                                 {"optimizer_iterations",
                                  it.optimizer_iterations}});
    }
    adapt_json["iterations"] = iterations_json;
    cj["adapt"] = adapt_json;
    json volumes_json = json::array();
    for (const VolumeResult& v : c.volumes) {
      volumes_json.push_back({{"sites", v.sites},
                              {"labels", labels_to_strings(v.labels)},
                              {"angles", v.angles},
                              {"energy", v.energy},
                              {"condensate", v.condensate},
                              {"vqe_iterations", v.vqe_iterations},
                              {"vqe_status", to_string(v.vqe_status)}});
    }
    cj["volumes"] = volumes_json;
    if (c.thermodynamic_fit) {
      cj["thermodynamic_fit"] = fit_to_json(*c.thermodynamic_fit);
    }
    cj["error"] = c.error;
    couplings_json.push_back(cj);
  }
  j["couplings"] = couplings_json;
  if (continuum_fit) j["continuum_fit"] = fit_to_json(*continuum_fit);
  j["continuum_error"] = continuum_error;
  j["analytic_reference"] = {{"ag", 0.0}, {"value", continuum_condensate()}};
  return j;
}

RunRecord RunRecord::from_json(const json& j) {
  RunRecord record;
  record.schema_version = j.at("schema_version").get<int>();
  if (record.schema_version != kRecordSchemaVersion) {
    throw std::runtime_error("unsupported record schema version " +
                             std::to_string(record.schema_version));
  }
  record.software_version = j.at("software").at("version").get<std::string>();
  record.compiler_info = j.at("software").at("compiler").get<std::string>();
  record.started_at = j.at("timestamps").at("started").get<std::string>();
  record.finished_at = j.at("timestamps").at("finished").get<std::string>();
  record.config = WorkflowConfig::from_json(j.at("config"));
  for (const json& cj : j.at("couplings")) {
    CouplingRecord c;
    c.ag = cj.at("ag").get<double>();
    const json& sj = cj.at("surrogate");
    c.surrogate = {sj.at("volume").get<int>(), sj.at("energy").get<double>(),
                   sj.at("residual").get<double>(),
                   sj.at("iterations").get<int>()};
    for (const json& s : cj.at("scores")) {
      PoolScore score;
      score.label = PoolLabel::parse(s.at("label").get<std::string>());
      score.overlap = s.at("overlap").get<double>();
      score.ratio = s.at("ratio").get<double>();
      c.scores.push_back(score);
    }
    c.truncated_pool = labels_from_strings(
        cj.at("truncated_pool").get<std::vector<std::string>>());
    c.min_volume = cj.at("min_volume").get<int>();
    const json& aj = cj.at("adapt");
    c.adapt.completed = aj.value("completed", false);
    c.adapt.depth_capped = aj.at("depth_capped").get<bool>();
    c.adapt.final_max_gradient = aj.at("final_max_gradient").get<double>();
    for (const json& it : aj.at("iterations")) {
      AdaptIterationRecord rec;
      rec.selected = PoolLabel::parse(it.at("label").get<std::string>());
      rec.max_gradient = it.at("max_gradient").get<double>();
      rec.energy = it.at("energy").get<double>();
      rec.angles = it.at("angles").get<std::vector<double>>();
      rec.optimizer_status =
          vqe_status_from_string(it.at("optimizer_status").get<std::string>());
      rec.optimizer_iterations = it.value("optimizer_iterations", 0);
      c.adapt.iterations.push_back(std::move(rec));
    }
    for (const json& vj : cj.at("volumes")) {
      VolumeResult v;
      v.sites = vj.at("sites").get<int>();
      v.labels =
          labels_from_strings(vj.at("labels").get<std::vector<std::string>>());
      v.angles = vj.at("angles").get<std::vector<double>>();
      v.energy = vj.at("energy").get<double>();
      v.condensate = vj.at("condensate").get<double>();
      v.vqe_iterations = vj.at("vqe_iterations").get<int>();
      v.vqe_status =
          vqe_status_from_string(vj.at("vqe_status").get<std::string>());
      c.volumes.push_back(std::move(v));
    }
    if (cj.contains("thermodynamic_fit")) {
      c.thermodynamic_fit = fit_from_json(cj.at("thermodynamic_fit"));
    }
    c.error = cj.value("error", std::string{});
    record.couplings.push_back(std::move(c));
  }
  if (j.contains("continuum_fit")) {
    record.continuum_fit = fit_from_json(j.at("continuum_fit"));
  }
  record.continuum_error = j.value("continuum_error", std::string{});
  return record;
}

RunRecord init_record(const WorkflowConfig& config) {
  config.validate();
  RunRecord record;
  record.schema_version = kRecordSchemaVersion;
  record.config = config;
  record.software_version = kVersion;
  record.compiler_info = __VERSION__;
  record.started_at = now_iso8601();
  for (double ag : config.couplings) {
    CouplingRecord c;
    c.ag = ag;
    record.couplings.push_back(std::move(c));
  }
  return record;
}

void stage_score(RunRecord& record) {
  const WorkflowConfig& config = record.config;
  for (CouplingRecord& c : record.couplings) {
    if (!c.ok()) continue;
    try {
      const int sv = config.surrogate_volume;
      const PauliTermSum h =
          build_hamiltonian(lattice_params(config, c.ag, sv));
      LanczosOptions options;
      options.tolerance = config.lanczos_tolerance;
      options.max_iterations = config.lanczos_max_iterations;
      options.fallback_seed = config.seed;
      const SurrogateResult surrogate = ground_state(h, options);
      c.surrogate = {sv, surrogate.energy, surrogate.residual,
                     surrogate.iterations};
      const std::vector<PoolLabel> pool = generate_full_pool(sv, config.pool);
      c.scores = score_pool(pool, surrogate.state, reference_state(sv), sv);
      if (config.mode == WorkflowMode::Sc2FixedAnsatz) {
        const TruncatedPool truncated = truncate_pool(c.scores, config.delta);
        c.truncated_pool = truncated.labels;
        c.min_volume = truncated.min_volume;
      } else {
        // The full singles pool keeps every label and has no pool-defined
        // minimum volume.
        c.truncated_pool = pool;
        c.min_volume = config.min_volume_full_singles;
      }
    } catch (const std::exception& e) {
      c.error = std::string("score stage: ") + e.what();
    }
  }
}

void stage_adapt(RunRecord& record) {
  const WorkflowConfig& config = record.config;
  for (CouplingRecord& c : record.couplings) {
    if (!c.ok()) continue;
    try {
      if (c.scores.empty()) {
        throw std::runtime_error("score stage has not run");
      }
      const int av = config.adapt_volume;
      std::vector<PoolLabel> pool;
      std::string pool_id;
      if (config.mode == WorkflowMode::Sc2FixedAnsatz) {
        pool = c.truncated_pool;
        pool_id = "truncated:delta=" + format_double(config.delta) +
                  ":ag=" + coupling_tag(c.ag);
      } else {
        pool = generate_full_pool(av, config.pool);
        pool_id = "full_singles:Ns=" + std::to_string(av);
      }
      const PauliTermSum h = build_hamiltonian(lattice_params(config, c.ag, av));
      const AdaptResult adapt =
          adapt_run(h, pool, config.adapt_config(), pool_id);
      c.adapt = adapt.history;
    } catch (const std::exception& e) {
      c.error = std::string("adapt stage: ") + e.what();
    }
  }
}

void stage_sweep(RunRecord& record) {
  const WorkflowConfig& config = record.config;
  for (CouplingRecord& c : record.couplings) {
    if (!c.ok()) continue;
    try {
      if (c.scores.empty()) {
        throw std::runtime_error("score stage has not run");
      }
      if (!c.adapt.completed) {
        throw std::runtime_error("adapt stage has not run");
      }
      c.volumes.clear();
      const int top = config.adapt_volume;
      const std::vector<PoolLabel> labels = circuit_labels(c.adapt);
      std::vector<double> angles = c.adapt.iterations.empty()
                                       ? std::vector<double>{}
                                       : c.adapt.iterations.back().angles;
      c.volumes.push_back(measure_volume(config, c.ag, top, labels, angles, 0,
                                         VqeStatus::Converged));
      if (config.mode == WorkflowMode::Sc2FixedAnsatz) {
        // Fixed ansatz, re-optimized top-down so every volume warm-starts
        // from the one above it.
        for (int sites = top - 2; sites >= c.min_volume; sites -= 2) {
          const PauliTermSum h =
              build_hamiltonian(lattice_params(config, c.ag, sites));
          const AnsatzCircuit circuit =
              circuit_from_labels(labels, sites, "fixed");
          const VqeResult vqe =
              vqe_optimize(circuit, angles, h, config.adapt_config());
          angles = vqe.angles;
          c.volumes.push_back(measure_volume(config, c.ag, sites, labels,
                                             angles, vqe.iterations,
                                             vqe.status));
        }
      } else {
        // Control workflow: an independent ADAPT run at every volume.
        for (int sites = top - 2; sites >= config.min_volume_full_singles;
             sites -= 2) {
          const PauliTermSum h =
              build_hamiltonian(lattice_params(config, c.ag, sites));
          const std::vector<PoolLabel> volume_pool =
              generate_full_pool(sites, config.pool);
          const AdaptResult adapt =
              adapt_run(h, volume_pool, config.adapt_config(),
                        "full_singles:Ns=" + std::to_string(sites));
          const std::vector<PoolLabel> volume_labels =
              circuit_labels(adapt.history);
          const std::vector<double> volume_angles =
              adapt.history.iterations.empty()
                  ? std::vector<double>{}
                  : adapt.history.iterations.back().angles;
          const VqeStatus status =
              adapt.history.iterations.empty()
                  ? VqeStatus::Converged
                  : adapt.history.iterations.back().optimizer_status;
          c.volumes.push_back(
              measure_volume(config, c.ag, sites, volume_labels, volume_angles,
                             static_cast<int>(adapt.history.iterations.size()),
                             status));
        }
      }
    } catch (const std::exception& e) {
      c.error = std::string("sweep stage: ") + e.what();
    }
  }
}

void stage_extrapolate(RunRecord& record) {
  const WorkflowConfig& config = record.config;
  for (CouplingRecord& c : record.couplings) {
    if (!c.ok()) continue;
    try {
      if (c.volumes.empty()) {
        throw std::runtime_error("sweep stage has not run");
      }
      std::vector<SeriesPoint> points;
      for (const VolumeResult& v : c.volumes) {
        points.push_back({static_cast<double>(v.sites), v.condensate, 0.0});
      }
      if (points.size() >= 3) {
        // Correlation length of the lightest state in lattice units; the
        // gap-transient term in the composite family uses it directly.
        const double decay_length = std::sqrt(M_PI) / c.ag;
        c.thermodynamic_fit =
            fit_thermodynamic(points, config.thermo_family, decay_length);
      } else if (points.size() == 2) {
        // Heavily truncated pools can leave only two volumes at or below the
        // top volume; fall back to the linear form.
        c.thermodynamic_fit = fit_thermodynamic_linear(points);
      } else {
        throw std::runtime_error("only " + std::to_string(points.size()) +
                                 " volume(s) available for the infinite-volume fit");
      }
    } catch (const std::exception& e) {
      c.error = std::string("extrapolate stage: ") + e.what();
    }
  }

  record.continuum_fit.reset();
  record.continuum_error.clear();
  const std::size_t needed =
      static_cast<std::size_t>(record.config.continuum_degree) + 2;
  std::vector<SeriesPoint> points;
  for (const CouplingRecord& c : record.couplings) {
    if (!c.ok() || !c.thermodynamic_fit) continue;
    // Dimensionless condensate: the lattice value divided by a*g.
    points.push_back({c.ag, c.thermodynamic_fit->limit / c.ag,
                      c.thermodynamic_fit->uncertainty / c.ag});
  }
  if (record.config.couplings.size() < needed) {
    // Not configured for a continuum extrapolation; nothing to fit.
    return;
  }
  if (points.size() < needed) {
    record.continuum_error =
        "continuum fit needs at least " + std::to_string(needed) +
        " thermodynamic limits, got " + std::to_string(points.size());
    return;
  }
  try {
    record.continuum_fit = fit_continuum(points, config.continuum_degree);
  } catch (const std::exception& e) {
    record.continuum_error = e.what();
  }
}

void save_record(const RunRecord& record, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() +
                             "' for writing");
  }
  out << record.to_json().dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("failed writing record to '" + path.string() +
                             "'");
  }
}

RunRecord load_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open record '" + path.string() + "'");
  }
  json j;
  in >> j;
  return RunRecord::from_json(j);
}

RunRecord run_workflow(const WorkflowConfig& config) {
  RunRecord record = init_record(config);
  const std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);
  const std::filesystem::path record_path = dir / "record.json";

  stage_score(record);
  save_record(record, record_path);
  stage_adapt(record);
  save_record(record, record_path);
  stage_sweep(record);
  save_record(record, record_path);
  stage_extrapolate(record);
  record.finished_at = now_iso8601();
  save_record(record, record_path);
  return record;
}

namespace {

class TableWriter {
 public:
  TableWriter(std::vector<std::string> columns, OutputFormat format)
      : columns_(std::move(columns)), format_(format) {}

  void add_row(std::vector<std::string> cells) {
    rows_.push_back(std::move(cells));
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
      throw std::runtime_error("cannot open '" + path.string() +
                               "' for writing");
    }
    if (format_ == OutputFormat::Csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
      }
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << row[i] << (i + 1 < row.size() ? "," : "\n");
        }
      }
    } else {
      json array = json::array();
      for (const auto& row : rows_) {
        json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
        array.push_back(obj);
      }
      out << array.dump(2) << '\n';
    }
    if (!out) {
      throw std::runtime_error("failed writing '" + path.string() + "'");
    }
  }

 private:
  std::vector<std::string> columns_;
  OutputFormat format_;
  std::vector<std::vector<std::string>> rows_;
};

const char* extension(OutputFormat format) {
  return format == OutputFormat::Csv ? ".csv" : ".json";
}

}  // namespace

std::vector<std::filesystem::path> emit_results(
    const RunRecord& record, const std::filesystem::path& directory,
    OutputFormat format) {
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;

  for (const CouplingRecord& c : record.couplings) {
    const std::string tag = "_ag" + coupling_tag(c.ag);

    // Score table with the order in which ADAPT first selected each label.
    TableWriter scores({"label", "overlap", "ratio", "selection_order"},
                       format);
    for (const PoolScore& s : c.scores) {
      std::string order;
      for (std::size_t i = 0; i < c.adapt.iterations.size(); ++i) {
        if (c.adapt.iterations[i].selected == s.label) {
          order = std::to_string(i + 1);
          break;
        }
      }
      scores.add_row({s.label.str(), format_double(s.overlap),
                      format_double(s.ratio), order});
    }
    const auto scores_path = directory / ("scores" + tag + extension(format));
    scores.write(scores_path);
    written.push_back(scores_path);

    // Per-volume selection grid.
    TableWriter selection({"volume", "position", "label"}, format);
    for (auto v = c.volumes.rbegin(); v != c.volumes.rend(); ++v) {
      for (std::size_t p = 0; p < v->labels.size(); ++p) {
        selection.add_row({std::to_string(v->sites), std::to_string(p + 1),
                           v->labels[p].str()});
      }
    }
    const auto selection_path =
        directory / ("selection" + tag + extension(format));
    selection.write(selection_path);
    written.push_back(selection_path);

    // Optimized angles against volume.
    TableWriter angles({"volume", "position", "label", "angle"}, format);
    for (auto v = c.volumes.rbegin(); v != c.volumes.rend(); ++v) {
      for (std::size_t p = 0; p < v->angles.size(); ++p) {
        angles.add_row({std::to_string(v->sites), std::to_string(p + 1),
                        v->labels[p].str(), format_double(v->angles[p])});
      }
    }
    const auto angles_path = directory / ("angles" + tag + extension(format));
    angles.write(angles_path);
    written.push_back(angles_path);

    // Condensate series with the infinite-volume fit curve.
    TableWriter condensate({"volume", "value", "fit_value", "fit_err"}, format);
    for (auto v = c.volumes.rbegin(); v != c.volumes.rend(); ++v) {
      std::string fit_value, fit_err;
      if (c.thermodynamic_fit) {
        fit_value = format_double(
            fit_predict(*c.thermodynamic_fit, static_cast<double>(v->sites)));
        fit_err = format_double(fit_prediction_se(
            *c.thermodynamic_fit, static_cast<double>(v->sites)));
      }
      condensate.add_row({std::to_string(v->sites),
                          format_double(v->condensate), fit_value, fit_err});
    }
    const auto condensate_path =
        directory / ("condensate" + tag + extension(format));
    condensate.write(condensate_path);
    written.push_back(condensate_path);
  }

  // Continuum series across couplings, with the exact massless value at
  // ag = 0 for overlay.
  TableWriter continuum({"ag", "value", "err", "fit_value", "fit_err"}, format);
  {
    std::string fit_value, fit_err;
    if (record.continuum_fit) {
      fit_value = format_double(record.continuum_fit->limit);
      fit_err = format_double(record.continuum_fit->uncertainty);
    }
    continuum.add_row({"0", format_double(continuum_condensate()), "0",
                       fit_value, fit_err});
  }
  std::vector<const CouplingRecord*> ordered;
  for (const CouplingRecord& c : record.couplings) {
    if (c.ok() && c.thermodynamic_fit) ordered.push_back(&c);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const CouplingRecord* a, const CouplingRecord* b) {
              return a->ag < b->ag;
            });
  for (const CouplingRecord* c : ordered) {
    std::string fit_value, fit_err;
    if (record.continuum_fit) {
      fit_value = format_double(fit_predict(*record.continuum_fit, c->ag));
      fit_err = format_double(fit_prediction_se(*record.continuum_fit, c->ag));
    }
    continuum.add_row({coupling_tag(c->ag),
                       format_double(c->thermodynamic_fit->limit / c->ag),
                       format_double(c->thermodynamic_fit->uncertainty / c->ag),
                       fit_value, fit_err});
  }
  const auto continuum_path = directory / (std::string("continuum") + extension(format));
  continuum.write(continuum_path);
  written.push_back(continuum_path);

  return written;
}

}  // namespace sc2adapt
