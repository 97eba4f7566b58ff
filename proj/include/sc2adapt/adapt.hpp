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

#include <span>
#include <string>
#include <vector>

#include "sc2adapt/ansatz.hpp"

namespace sc2adapt {

struct AdaptConfig {
  double epsilon = 1e-3;          // stop when every candidate gradient is below
  int max_depth = 100;
  double optimizer_tol = 1e-8;    // max-norm gradient target of the inner VQE;
                                  // must be tighter than epsilon
  double tie_tolerance = 1e-12;   // gradient ties resolve to pool order
  int optimizer_max_iterations = 500;

  void validate() const;
};

enum class VqeStatus { Converged, MaxIterations, LineSearchFailure };

const char* to_string(VqeStatus status);
VqeStatus vqe_status_from_string(std::string_view text);

struct VqeResult {
  std::vector<double> angles;
  double energy = 0.0;
  int iterations = 0;
  VqeStatus status = VqeStatus::Converged;
};

/// Quasi-Newton (BFGS) minimization of the ansatz energy with analytic
/// adjoint gradients and a backtracking line search. Deterministic for
/// identical inputs. A line-search failure is reported in the status with
/// the best-so-far point; callers may accept it with a warning.
VqeResult vqe_optimize(const AnsatzCircuit& circuit,
                       std::span<const double> initial_angles,
                       const PauliTermSum& hamiltonian,
                       const AdaptConfig& config);
VqeResult vqe_optimize(const AnsatzCircuit& circuit,
                       std::span<const double> initial_angles,
                       const CompiledSum& hamiltonian,
                       const AdaptConfig& config);

struct AdaptIterationRecord {
  PoolLabel selected;
  double max_gradient = 0.0;  // before this operator was appended
  double energy = 0.0;        // after re-optimization
  std::vector<double> angles;
  VqeStatus optimizer_status = VqeStatus::Converged;
  int optimizer_iterations = 0;
};

struct AdaptHistory {
  std::vector<AdaptIterationRecord> iterations;
  bool completed = false;         // an adaptive run produced this history
  bool depth_capped = false;      // stopped by max_depth, not by epsilon
  double final_max_gradient = 0.0;
};

struct AdaptResult {
  AnsatzCircuit circuit;  // entries carry the final optimized angles
  AdaptHistory history;
  double energy = 0.0;
};

/// The adaptive loop: score every candidate by its appended gradient, stop
/// once all fall below epsilon, otherwise append the largest (ties broken by
/// pool order), warm-start the previous angles, zero-initialize the new one,
/// and re-optimize. Throws on a stall: the same operator re-selected while
/// the optimizer no longer moves.
AdaptResult adapt_run(const PauliTermSum& hamiltonian,
                      std::span<const PoolLabel> pool,
                      const AdaptConfig& config,
                      const std::string& pool_id = "");

}  // namespace sc2adapt
