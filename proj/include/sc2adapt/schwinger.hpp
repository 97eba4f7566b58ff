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

#include "sc2adapt/pauli.hpp"
#include "sc2adapt/statevector.hpp"

namespace sc2adapt {

/// One lattice problem instance. The site count must be even (staggered
/// fermions put particle and antiparticle components on alternating sites).
/// The spacing is fixed to 1 in the shipped workflow; the continuum knob is
/// the dimensionless product a*g through the coupling.
struct LatticeParams {
  int sites = 0;            // N_s, even
  double spacing = 1.0;     // a > 0
  double coupling = 1.0;    // g >= 0
  double bare_mass = 0.0;   // m0
  bool improved_mass = false;  // replace m0 -> m0 - a g^2 / 8 in the mass term

  void validate() const;
};

/// Staggering sign for site j, shared by the mass term, the electric term
/// and the chiral condensate. The sign is fixed so that |0101...01> is an
/// exact zero of the electric term and the minimum of the mass term.
inline int stagger_sign(int site) { return (site % 2 == 0) ? -1 : 1; }

/// Hamiltonian of the open-boundary lattice Schwinger model after the
/// Jordan-Wigner transformation, fully expanded into real-weighted Pauli
/// words:
///   - hopping (X_j X_{j+1} + Y_j Y_{j+1}) / 4a,
///   - staggered mass (m/2) sum_j stagger(j) Z_j,
///   - electric (a g^2/8) sum_j (sum_{k<=j} (Z_k + stagger(k)))^2,
/// with the identity weight from the electric expansion retained.
PauliTermSum build_hamiltonian(const LatticeParams& params);

/// Strong-coupling vacuum |0101...01>: site 0 empty, site 1 occupied, ...
Statevector reference_state(int sites);

/// (1 / 2 N_s) sum_j stagger(j) <sigma^z_j>; -1/2 on the reference state.
double chiral_condensate(const Statevector& state);

/// Total sigma^z operator; every meson generator commutes with it.
PauliTermSum total_z_operator(int sites);

/// Exact continuum value of the dimensionless condensate at zero mass,
/// -e^{gamma_E} / (2 pi^{3/2}) = -0.159929...
double continuum_condensate();

}  // namespace sc2adapt
