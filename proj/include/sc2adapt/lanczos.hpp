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

#include "sc2adapt/pauli.hpp"
#include "sc2adapt/statevector.hpp"

namespace sc2adapt {

/// Classical approximation of the ground state used to pre-screen the
/// operator pool. At the volumes handled here it comes from exact Lanczos
/// iteration; the scoring interface does not care how it was produced.
struct SurrogateResult {
  double energy = 0.0;
  Statevector state;
  double residual = 0.0;  // ||H psi - E psi||
  int iterations = 0;
};

struct LanczosOptions {
  double tolerance = 1e-10;
  int max_iterations = 500;
  std::uint64_t fallback_seed = 1;  // start-vector seed when the default
                                    // start exhausts its Krylov space early
};

/// Lowest eigenpair of a Hermitian term sum by Lanczos iteration with full
/// reorthogonalization. The start vector is the staggered reference state
/// (deterministic); throws on non-convergence, reporting the best residual.
SurrogateResult ground_state(const PauliTermSum& hamiltonian,
                             const LanczosOptions& options = {});
SurrogateResult ground_state(const PauliTermSum& hamiltonian, double tolerance,
                             int max_iterations);

}  // namespace sc2adapt
