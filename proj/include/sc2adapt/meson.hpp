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

/// Hermitian meson-insertion generator
///
///   sign * (i/2) (sigma^+_n Z...Z sigma^-_{n+d} - h.c.)
///
/// with the Z string acting on the sites strictly between the endpoints
/// n = site and n + d = site + span. In the computational basis this is i
/// times a real antisymmetric matrix: it couples exactly the basis-state
/// pairs that move one excitation between the endpoints, so its exponential
/// is a real orthogonal plane rotation on each coupled pair.
struct MesonGenerator {
  int site = 0;
  int span = 1;
  int sign = 1;  // +1 or -1
  int qubit_count = 0;

  void validate() const;  // throws std::invalid_argument when out of range
};

/// exp(-i angle G)|psi>, evaluated in closed form as pairwise rotations.
/// Preserves the norm to machine precision and maps real states to real
/// states.
Statevector apply_generator_exponential(const MesonGenerator& gen,
                                        double angle,
                                        const Statevector& state);
void apply_generator_exponential_in_place(const MesonGenerator& gen,
                                          double angle, Statevector& state);

/// G|psi>.
Statevector apply_generator(const MesonGenerator& gen,
                            const Statevector& state);
void accumulate_generator_apply(const MesonGenerator& gen,
                                const Statevector& in, Statevector& out);

/// <bra|(-i G)|ket>, accumulated pairwise without materializing G|ket>.
/// This is the elementary quantity behind adjoint-mode gradients.
Complex generator_derivative_bracket(const MesonGenerator& gen,
                                     const Statevector& bra,
                                     const Statevector& ket);

/// The generator expanded to real-weighted Pauli words:
///   (sign/4) (X_n Z..Z Y_{n+d} - Y_n Z..Z X_{n+d}).
PauliTermSum generator_terms(const MesonGenerator& gen);

}  // namespace sc2adapt
