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

#include "sc2adapt/ansatz.hpp"

#include <stdexcept>

#include "sc2adapt/schwinger.hpp"

namespace sc2adapt {

namespace {

struct Gate {
  MesonGenerator generator;
  std::size_t entry = 0;  // index of the circuit entry this gate belongs to
};

// The circuit flattened to elementary generator exponentials at a concrete
// volume, in application order.
std::vector<Gate> flatten(const AnsatzCircuit& circuit, int sites) {
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < circuit.entries.size(); ++j) {
    const InstantiatedOperator op =
        instantiate(circuit.entries[j].label, sites);
    for (const MesonGenerator& gen : op.generators) {
      gates.push_back({gen, j});
    }
  }
  return gates;
}

void check_angles(const AnsatzCircuit& circuit, std::span<const double> angles) {
  if (angles.size() != circuit.entries.size()) {
    throw std::invalid_argument(
        "angle count " + std::to_string(angles.size()) +
        " does not match circuit depth " +
        std::to_string(circuit.entries.size()));
  }
}

void check_volume(const AnsatzCircuit& circuit, int sites) {
  const int required = circuit.min_volume();
  if (sites < required) {
    throw std::invalid_argument("circuit requires at least " +
                                std::to_string(required) + " sites, got " +
                                std::to_string(sites));
  }
}

}  // namespace

int AnsatzCircuit::min_volume() const {
  int v = 2;
  for (const CircuitEntry& entry : entries) {
    v = std::max(v, sc2adapt::min_volume(entry.label));
  }
  return v;
}

std::vector<double> AnsatzCircuit::angles() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const CircuitEntry& entry : entries) out.push_back(entry.angle);
  return out;
}

Statevector apply_ansatz(const AnsatzCircuit& circuit,
                         std::span<const double> angles,
                         const Statevector& state) {
  check_angles(circuit, angles);
  check_volume(circuit, state.qubit_count);
  Statevector out = state;
  for (const Gate& gate : flatten(circuit, state.qubit_count)) {
    apply_generator_exponential_in_place(gate.generator, angles[gate.entry],
                                         out);
  }
  return out;
}

double ansatz_energy(const AnsatzCircuit& circuit,
                     std::span<const double> angles,
                     const CompiledSum& hamiltonian) {
  const Statevector trial = apply_ansatz(
      circuit, angles, reference_state(hamiltonian.qubit_count()));
  return hamiltonian.expectation(trial);
}

EnergyGradient energy_and_gradient(const AnsatzCircuit& circuit,
                                   std::span<const double> angles,
                                   const CompiledSum& hamiltonian) {
  check_angles(circuit, angles);
  const int sites = hamiltonian.qubit_count();
  check_volume(circuit, sites);
  const std::vector<Gate> gates = flatten(circuit, sites);

  // Forward sweep.
  Statevector phi = reference_state(sites);
  for (const Gate& gate : gates) {
    apply_generator_exponential_in_place(gate.generator, angles[gate.entry],
                                         phi);
  }

  Statevector lambda(sites);
  hamiltonian.apply_into(phi, lambda);

  EnergyGradient result;
  result.energy = inner_product(phi, lambda).real();
  result.gradient.assign(circuit.entries.size(), 0.0);

  // Adjoint sweep: un-apply each gate from both states, accumulating
  // 2 Re <lambda| (-i G) |phi> while phi still includes the gate.
  for (std::size_t m = gates.size(); m-- > 0;) {
    const Gate& gate = gates[m];
    result.gradient[gate.entry] +=
        2.0 *
        generator_derivative_bracket(gate.generator, lambda, phi).real();
    apply_generator_exponential_in_place(gate.generator, -angles[gate.entry],
                                         phi);
    apply_generator_exponential_in_place(gate.generator, -angles[gate.entry],
                                         lambda);
  }
  return result;
}

EnergyGradient energy_and_gradient(const AnsatzCircuit& circuit,
                                   std::span<const double> angles,
                                   const PauliTermSum& hamiltonian) {
  return energy_and_gradient(circuit, angles, CompiledSum(hamiltonian));
}

double appended_gradient(const InstantiatedOperator& op,
                         const Statevector& trial_state,
                         const Statevector& h_applied) {
  Complex bracket{0.0, 0.0};
  for (const MesonGenerator& gen : op.generators) {
    bracket += generator_derivative_bracket(gen, h_applied, trial_state);
  }
  return 2.0 * bracket.real();
}

std::vector<std::pair<PoolLabel, double>> pool_gradients(
    const AnsatzCircuit& circuit, std::span<const double> angles,
    const CompiledSum& hamiltonian, std::span<const PoolLabel> pool) {
  const int sites = hamiltonian.qubit_count();
  const Statevector trial =
      apply_ansatz(circuit, angles, reference_state(sites));
  Statevector h_applied(sites);
  hamiltonian.apply_into(trial, h_applied);

  std::vector<std::pair<PoolLabel, double>> gradients;
  gradients.reserve(pool.size());
  for (const PoolLabel& label : pool) {
    const InstantiatedOperator op = instantiate(label, sites);
    gradients.emplace_back(label, appended_gradient(op, trial, h_applied));
  }
  return gradients;
}

std::vector<std::pair<PoolLabel, double>> pool_gradients(
    const AnsatzCircuit& circuit, std::span<const double> angles,
    const PauliTermSum& hamiltonian, std::span<const PoolLabel> pool) {
  return pool_gradients(circuit, angles, CompiledSum(hamiltonian), pool);
}

}  // namespace sc2adapt
