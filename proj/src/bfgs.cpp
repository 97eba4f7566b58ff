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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sc2adapt/adapt.hpp"

namespace sc2adapt {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

void AdaptConfig::validate() const {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(optimizer_tol > 0.0) || optimizer_tol >= epsilon) {
    throw std::invalid_argument(
        "optimizer_tol must be positive and tighter than epsilon");
  }
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (tie_tolerance < 0.0) {
    throw std::invalid_argument("tie_tolerance must be >= 0");
  }
  if (optimizer_max_iterations < 0) {
    throw std::invalid_argument("optimizer_max_iterations must be >= 0");
  }
}

VqeResult vqe_optimize(const AnsatzCircuit& circuit,
                       std::span<const double> initial_angles,
                       const CompiledSum& hamiltonian,
                       const AdaptConfig& config) {
  config.validate();
  const std::size_t n = circuit.entries.size();
  if (initial_angles.size() != n) {
    throw std::invalid_argument("vqe_optimize: angle count mismatch");
  }

  VqeResult result;
  result.angles.assign(initial_angles.begin(), initial_angles.end());
  if (n == 0) {
    result.energy = ansatz_energy(circuit, result.angles, hamiltonian);
    return result;
  }

  EnergyGradient eg = energy_and_gradient(circuit, result.angles, hamiltonian);
  result.energy = eg.energy;

  // Inverse Hessian approximation, dense; ansatz depths stay small.
  std::vector<double> hess_inv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) hess_inv[i * n + i] = 1.0;
  bool hessian_scaled = false;

  constexpr double armijo_c1 = 1e-4;
  std::vector<double> direction(n), trial(n), s(n), y(n);

  for (int iter = 0; iter < config.optimizer_max_iterations; ++iter) {
    if (max_abs(eg.gradient) < config.optimizer_tol) {
      result.status = VqeStatus::Converged;
      result.iterations = iter;
      return result;
    }

    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        acc += hess_inv[i * n + j] * eg.gradient[j];
      }
      direction[i] = -acc;
    }
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += direction[i] * eg.gradient[i];
    if (slope >= 0.0) {
      // Curvature information went bad; restart from steepest descent.
      for (std::size_t i = 0; i < n; ++i) hess_inv[i * n + i] = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) hess_inv[i * n + j] = 0.0;
        }
      }
      for (std::size_t i = 0; i < n; ++i) direction[i] = -eg.gradient[i];
      slope = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        slope += direction[i] * eg.gradient[i];
      }
    }

    // Until curvature information exists the direction is raw steepest
    // descent; cap the first move at a fraction of a radian.
    double step = 1.0;
    if (!hessian_scaled) {
      double dnorm = 0.0;
      for (std::size_t i = 0; i < n; ++i) dnorm += direction[i] * direction[i];
      dnorm = std::sqrt(dnorm);
      if (dnorm > 0.25) step = 0.25 / dnorm;
    }
    // Near the minimum the predicted decrease falls below what double
    // precision can resolve in the energy; accept such steps outright and
    // let the gradient criterion decide convergence.
    const double noise_floor = 1e-14 * (std::abs(result.energy) + 1.0);
    double energy_new = result.energy;
    bool accepted = false;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = result.angles[i] + step * direction[i];
      }
      energy_new = ansatz_energy(circuit, trial, hamiltonian);
      if (energy_new <=
          result.energy + armijo_c1 * step * slope + noise_floor) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      result.status = VqeStatus::LineSearchFailure;
      result.iterations = iter;
      return result;
    }

    EnergyGradient eg_new = energy_and_gradient(circuit, trial, hamiltonian);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = trial[i] - result.angles[i];
      y[i] = eg_new.gradient[i] - eg.gradient[i];
    }
    result.angles = trial;
    result.energy = eg_new.energy;
    eg = std::move(eg_new);

    double ys = 0.0, yy = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ys += y[i] * s[i];
      yy += y[i] * y[i];
      ss += s[i] * s[i];
    }
    if (ys > 1e-12 * std::sqrt(yy * ss)) {
      if (!hessian_scaled && yy > 0.0) {
        // Shanno scaling of the initial inverse Hessian.
        const double scale = ys / yy;
        for (std::size_t i = 0; i < n; ++i) hess_inv[i * n + i] = scale;
        hessian_scaled = true;
      }
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / ys;
      std::vector<double> hy(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += hess_inv[i * n + j] * y[j];
        hy[i] = acc;
      }
      double yhy = 0.0;
      for (std::size_t i = 0; i < n; ++i) yhy += y[i] * hy[i];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          hess_inv[i * n + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) +
                                 rho * (1.0 + rho * yhy) * s[i] * s[j];
        }
      }
    }
  }

  result.status = VqeStatus::MaxIterations;
  result.iterations = config.optimizer_max_iterations;
  return result;
}

VqeResult vqe_optimize(const AnsatzCircuit& circuit,
                       std::span<const double> initial_angles,
                       const PauliTermSum& hamiltonian,
                       const AdaptConfig& config) {
  return vqe_optimize(circuit, initial_angles, CompiledSum(hamiltonian),
                      config);
}

}  // namespace sc2adapt
