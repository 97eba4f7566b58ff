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

#include "sc2adapt/adapt.hpp"

#include <cmath>
#include <stdexcept>

#include "sc2adapt/schwinger.hpp"

namespace sc2adapt {

const char* to_string(VqeStatus status) {
  switch (status) {
    case VqeStatus::Converged:
      return "converged";
    case VqeStatus::MaxIterations:
      return "max_iterations";
    case VqeStatus::LineSearchFailure:
      return "line_search_failure";
  }
  return "unknown";
}

VqeStatus vqe_status_from_string(std::string_view text) {
  if (text == "converged") return VqeStatus::Converged;
  if (text == "max_iterations") return VqeStatus::MaxIterations;
  if (text == "line_search_failure") return VqeStatus::LineSearchFailure;
  throw std::invalid_argument("unknown VQE status '" + std::string(text) +
                              "'");
}

AdaptResult adapt_run(const PauliTermSum& hamiltonian,
                      std::span<const PoolLabel> pool,
                      const AdaptConfig& config, const std::string& pool_id) {
  config.validate();
  if (pool.empty()) {
    throw std::invalid_argument("adapt_run: the operator pool is empty");
  }
  const int sites = hamiltonian.qubit_count();
  if (min_volume(pool) > sites) {
    throw std::invalid_argument(
        "adapt_run: pool minimum volume " + std::to_string(min_volume(pool)) +
        " exceeds the Hamiltonian volume " + std::to_string(sites));
  }

  const CompiledSum compiled(hamiltonian);
  AdaptResult result;
  result.history.completed = true;
  result.circuit.sites = sites;
  result.circuit.pool_id = pool_id;
  std::vector<double> angles;
  result.energy = compiled.expectation(reference_state(sites));

  while (true) {
    const auto gradients =
        pool_gradients(result.circuit, angles, compiled, pool);
    double max_gradient = 0.0;
    for (const auto& [label, g] : gradients) {
      max_gradient = std::max(max_gradient, std::abs(g));
    }
    result.history.final_max_gradient = max_gradient;
    if (max_gradient < config.epsilon) break;
    if (static_cast<int>(result.circuit.entries.size()) >= config.max_depth) {
      result.history.depth_capped = true;
      break;
    }

    // Greedy selection; the first label within tie_tolerance of the maximum
    // wins, which is the deterministic pool order.
    std::size_t selected = gradients.size();
    for (std::size_t i = 0; i < gradients.size(); ++i) {
      if (std::abs(gradients[i].second) >=
          max_gradient - config.tie_tolerance) {
        selected = i;
        break;
      }
    }
    const PoolLabel& label = gradients[selected].first;

    result.circuit.entries.push_back({label, 0.0});
    angles.push_back(0.0);
    const std::vector<double> warm_start = angles;

    VqeResult vqe = vqe_optimize(result.circuit, angles, compiled, config);
    angles = vqe.angles;
    result.energy = vqe.energy;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      result.circuit.entries[i].angle = angles[i];
    }

    double moved = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      moved = std::max(moved, std::abs(angles[i] - warm_start[i]));
    }
    const std::size_t depth = result.circuit.entries.size();
    if (depth >= 2 &&
        result.circuit.entries[depth - 2].label == label &&
        moved < config.tie_tolerance) {
      throw std::runtime_error(
          "adapt_run stalled: operator " + label.str() +
          " re-selected with no movement from the optimizer (gradient " +
          std::to_string(max_gradient) + " above epsilon)");
    }

    AdaptIterationRecord record;
    record.selected = label;
    record.max_gradient = max_gradient;
    record.energy = vqe.energy;
    record.angles = angles;
    record.optimizer_status = vqe.status;
    record.optimizer_iterations = vqe.iterations;
    result.history.iterations.push_back(std::move(record));
  }

  return result;
}

}  // namespace sc2adapt
