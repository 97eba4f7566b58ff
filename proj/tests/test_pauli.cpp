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

#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "sc2adapt/pauli.hpp"
#include "sc2adapt/schwinger.hpp"

using namespace sc2adapt;

namespace {

Statevector random_state(int qubits, std::uint64_t seed, bool real_only = false) {
  Statevector state(qubits);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (Complex& a : state.amplitudes) {
    a = real_only ? Complex{dist(rng), 0.0} : Complex{dist(rng), dist(rng)};
  }
  state.normalize();
  return state;
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("basis state and index convention") {
  // Site 0 lives in the least significant bit.
  const Statevector s = Statevector::basis_state(3, 0b011);
  CHECK(s.amplitudes[3] == Complex{1.0, 0.0});
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(Statevector::basis_state(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(Statevector(0), std::invalid_argument);
}

TEST_CASE("term sum merges duplicate words") {
  PauliTermSum sum(2);
  sum.add("XZ", 0.5);
  sum.add("XZ", 0.25);
  sum.add("ZI", 1.0);
  CHECK(sum.size() == 2);
  CHECK(sum.terms()[0].coefficient == doctest::Approx(0.75));

  sum.add("ZI", -1.0);
  sum.compact();
  CHECK(sum.size() == 1);
  CHECK(sum.terms()[0].word() == "XZ");
}

TEST_CASE("apply_sum: identity acts trivially") {
  const Statevector psi = random_state(4, 7);
  const Statevector out = apply_sum(PauliTermSum::identity(4, 1.0), psi);
  for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
    CHECK(std::abs(out.amplitudes[i] - psi.amplitudes[i]) < 1e-15);
  }
}

TEST_CASE("apply_sum: Z eigenvalue convention") {
  // sigma^z|1> = -|1>, so Z on qubit 0 negates |0...01>.
  PauliTermSum z0(3);
  z0.add("ZII", 1.0);
  const Statevector psi = Statevector::basis_state(3, 1);
  const Statevector out = apply_sum(z0, psi);
  CHECK(out.amplitudes[1] == Complex{-1.0, 0.0});
}

TEST_CASE("apply_sum matches the dense oracle on the two-site Hamiltonian") {
  LatticeParams params;
  params.sites = 2;
  const PauliTermSum h = build_hamiltonian(params);
  const Statevector psi = reference_state(2);
  const Statevector out = apply_sum(h, psi);
  const oracle::Vector expected = oracle::dense_sum(h) * oracle::to_eigen(psi);
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
    CHECK(std::abs(out.amplitudes[i] -
                   expected(static_cast<Eigen::Index>(i))) < 1e-12);
  }
}

TEST_CASE("apply_sum: dimension mismatch is an error") {
  const Statevector psi = random_state(3, 1);
  CHECK_THROWS_AS(apply_sum(PauliTermSum::identity(4, 1.0), psi),
                  std::invalid_argument);
}

TEST_CASE("expectation: identity and eigenstates") {
  const Statevector psi = random_state(5, 3);
  CHECK(expectation(PauliTermSum::identity(5, 1.0), psi) ==
        doctest::Approx(1.0).epsilon(1e-12));

  PauliTermSum z0(2);
  z0.add("ZI", 1.0);
  CHECK(expectation(z0, Statevector::basis_state(2, 1)) ==
        doctest::Approx(-1.0));
}

TEST_CASE("expectation rejects unnormalized states") {
  Statevector psi = Statevector::basis_state(2, 0);
  psi.amplitudes[0] = Complex{2.0, 0.0};
  CHECK_THROWS_AS(expectation(PauliTermSum::identity(2, 1.0), psi),
                  std::invalid_argument);
}

TEST_CASE("expectation of the massless Hamiltonian on the reference state") {
  for (int sites : {2, 4, 6}) {
    LatticeParams params;
    params.sites = sites;
    const PauliTermSum h = build_hamiltonian(params);
    CHECK(expectation(h, reference_state(sites)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("CompiledSum agrees with apply_sum") {
  LatticeParams params;
  params.sites = 6;
  params.coupling = 0.8;
  params.bare_mass = 0.3;
  const PauliTermSum h = build_hamiltonian(params);
  const CompiledSum compiled(h);
  const Statevector psi = random_state(6, 11);
  const Statevector direct = apply_sum(h, psi);
  const Statevector fused = compiled.apply(psi);
  for (std::size_t i = 0; i < direct.amplitudes.size(); ++i) {
    CHECK(std::abs(direct.amplitudes[i] - fused.amplitudes[i]) < 1e-13);
  }
  CHECK(compiled.expectation(psi) ==
        doctest::Approx(expectation(h, psi)).epsilon(1e-12));
}

TEST_CASE("apply_sum matches the dense oracle on random sums") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> axis(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int sites : {2, 4, 6}) {
    PauliTermSum sum(sites);
    for (int t = 0; t < 8; ++t) {
      PauliString term;
      term.axes.resize(sites);
      for (int q = 0; q < sites; ++q) {
        term.axes[q] = static_cast<PauliAxis>(axis(rng));
      }
      term.coefficient = coeff(rng);
      sum.add(term);
    }
    const Statevector psi = random_state(sites, 100 + sites);
    const Statevector out = apply_sum(sum, psi);
    const oracle::Vector expected =
        oracle::dense_sum(sum) * oracle::to_eigen(psi);
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
      CHECK(std::abs(out.amplitudes[i] -
                     expected(static_cast<Eigen::Index>(i))) < 1e-12);
    }
  }
}

}  // TEST_SUITE
