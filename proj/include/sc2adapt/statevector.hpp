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

#include <complex>
#include <cstdint>
#include <vector>

namespace sc2adapt {

using Complex = std::complex<double>;

/// Full complex statevector over `qubit_count` sites.
///
/// Basis convention: bit b of a basis index holds the state of site b, so
/// site 0 is the least significant bit. A site in state |1> is an "occupied"
/// site with sigma^z eigenvalue -1.
struct Statevector {
  std::vector<Complex> amplitudes;
  int qubit_count = 0;

  Statevector() = default;

  /// Zero-filled vector of dimension 2^qubits (not a valid quantum state
  /// until populated).
  explicit Statevector(int qubits);

  /// |index> with a single unit amplitude.
  static Statevector basis_state(int qubits, std::uint64_t index);

  std::uint64_t dimension() const { return amplitudes.size(); }
  double norm() const;
  void normalize();
};

Complex inner_product(const Statevector& bra, const Statevector& ket);

/// Largest |Im(amplitude)| over the vector; zero for real states.
double max_imaginary_part(const Statevector& state);

namespace detail {
void check_qubit_count(int qubits);
void check_same_dimension(const Statevector& a, const Statevector& b,
                          const char* where);
}  // namespace detail

}  // namespace sc2adapt
