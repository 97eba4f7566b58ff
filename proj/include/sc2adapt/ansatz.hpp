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
#include <utility>
#include <vector>

#include "sc2adapt/pauli.hpp"
#include "sc2adapt/pool.hpp"
#include "sc2adapt/statevector.hpp"

namespace sc2adapt {

struct CircuitEntry {
  PoolLabel label;
  double angle = 0.0;
};

/// Ordered product of pool-operator exponentials applied to the staggered
/// reference state. Labels are volume-independent, so the same circuit can
/// be re-optimized at any volume at or above its minimum volume. Entries may
/// repeat: re-selecting an operator compensates its Trotterization.
struct AnsatzCircuit {
  std::vector<CircuitEntry> entries;
  int sites = 0;        // volume at which the circuit was constructed
  std::string pool_id;  // provenance of the pool the labels came from

  int min_volume() const;
  std::vector<double> angles() const;
  std::size_t depth() const { return entries.size(); }
};

/// U(angles)|state>: for each entry in order, the first-order Trotter
/// product of the instantiated label, elementary generator exponentials in
/// ascending-site order.
Statevector apply_ansatz(const AnsatzCircuit& circuit,
                         std::span<const double> angles,
                         const Statevector& state);

struct EnergyGradient {
  double energy = 0.0;
  std::vector<double> gradient;
};

/// Energy <psi(angles)|H|psi(angles)> from the reference state of H's
/// volume, and its full gradient via one forward and one adjoint sweep.
EnergyGradient energy_and_gradient(const AnsatzCircuit& circuit,
                                   std::span<const double> angles,
                                   const PauliTermSum& hamiltonian);
EnergyGradient energy_and_gradient(const AnsatzCircuit& circuit,
                                   std::span<const double> angles,
                                   const CompiledSum& hamiltonian);

double ansatz_energy(const AnsatzCircuit& circuit,
                     std::span<const double> angles,
                     const CompiledSum& hamiltonian);

/// d E / d theta at theta = 0 for each candidate appended to the circuit,
/// evaluated at the current trial state. At zero angle the Trotterized and
/// exact exponentials have the same first derivative, so this equals
/// <psi| i [H, O] |psi>.
std::vector<std::pair<PoolLabel, double>> pool_gradients(
    const AnsatzCircuit& circuit, std::span<const double> angles,
    const PauliTermSum& hamiltonian, std::span<const PoolLabel> pool);
std::vector<std::pair<PoolLabel, double>> pool_gradients(
    const AnsatzCircuit& circuit, std::span<const double> angles,
    const CompiledSum& hamiltonian, std::span<const PoolLabel> pool);

/// Appended-candidate gradient for an already-instantiated operator.
double appended_gradient(const InstantiatedOperator& op,
                         const Statevector& trial_state,
                         const Statevector& h_applied);

}  // namespace sc2adapt
