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

#include "sc2adapt/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sc2adapt {

namespace detail {

void check_qubit_count(int qubits) {
  if (qubits < 1 || qubits > 26) {
    throw std::invalid_argument("qubit count must be in [1, 26], got " +
                                std::to_string(qubits));
  }
}

void check_same_dimension(const Statevector& a, const Statevector& b,
                          const char* where) {
  if (a.qubit_count != b.qubit_count ||
      a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument(std::string(where) +
                                ": statevector dimension mismatch (" +
                                std::to_string(a.qubit_count) + " vs " +
                                std::to_string(b.qubit_count) + " qubits)");
  }
}

}  // namespace detail

Statevector::Statevector(int qubits) : qubit_count(qubits) {
  detail::check_qubit_count(qubits);
  amplitudes.assign(std::uint64_t{1} << qubits, Complex{0.0, 0.0});
}

Statevector Statevector::basis_state(int qubits, std::uint64_t index) {
  Statevector state(qubits);
  if (index >= state.dimension()) {
    throw std::invalid_argument("basis index out of range");
  }
  state.amplitudes[index] = Complex{1.0, 0.0};
  return state;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::runtime_error("cannot normalize the zero vector");
  const double inv = 1.0 / n;
  for (Complex& a : amplitudes) a *= inv;
}

Complex inner_product(const Statevector& bra, const Statevector& ket) {
  detail::check_same_dimension(bra, ket, "inner_product");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < bra.amplitudes.size(); ++i) {
    sum += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
  }
  return sum;
}

double max_imaginary_part(const Statevector& state) {
  double m = 0.0;
  for (const Complex& a : state.amplitudes) {
    m = std::max(m, std::abs(a.imag()));
  }
  return m;
}

}  // namespace sc2adapt
