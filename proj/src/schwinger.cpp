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

#include "sc2adapt/schwinger.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sc2adapt {

namespace {

void check_even_sites(int sites) {
  if (sites < 2 || sites % 2 != 0) {
    throw std::invalid_argument("site count must be a positive even integer, got " +
                                std::to_string(sites));
  }
}

PauliString z_word(int sites, int site, double coeff) {
  PauliString term;
  term.axes.assign(sites, PauliAxis::I);
  term.axes[site] = PauliAxis::Z;
  term.coefficient = coeff;
  return term;
}

PauliString zz_word(int sites, int a, int b, double coeff) {
  PauliString term;
  term.axes.assign(sites, PauliAxis::I);
  term.axes[a] = PauliAxis::Z;
  term.axes[b] = PauliAxis::Z;
  term.coefficient = coeff;
  return term;
}

}  // namespace

void LatticeParams::validate() const {
  check_even_sites(sites);
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("lattice spacing must be positive");
  }
  if (coupling < 0.0) {
    throw std::invalid_argument("coupling must be non-negative");
  }
  if (!std::isfinite(bare_mass)) {
    throw std::invalid_argument("bare mass must be finite");
  }
}

PauliTermSum build_hamiltonian(const LatticeParams& params) {
  params.validate();
  const int n = params.sites;
  PauliTermSum h(n);

  // Hopping: (sigma^+_j sigma^-_{j+1} + h.c.) / 2a = (XX + YY) / 4a.
  const double hop = 1.0 / (4.0 * params.spacing);
  for (int j = 0; j + 1 < n; ++j) {
    PauliString xx;
    xx.axes.assign(n, PauliAxis::I);
    xx.axes[j] = PauliAxis::X;
    xx.axes[j + 1] = PauliAxis::X;
    xx.coefficient = hop;
    PauliString yy = xx;
    yy.axes[j] = PauliAxis::Y;
    yy.axes[j + 1] = PauliAxis::Y;
    h.add(xx);
    h.add(yy);
  }

  // Staggered mass.
  double mass = params.bare_mass;
  if (params.improved_mass) {
    mass -= params.spacing * params.coupling * params.coupling / 8.0;
  }
  for (int j = 0; j < n; ++j) {
    h.add(z_word(n, j, 0.5 * mass * stagger_sign(j)));
  }

  // Electric term (a g^2 / 8) sum_{j} L_j^2 with
  // L_j = sum_{k<=j} (Z_k + stagger(k)), expanded into ZZ, Z and identity
  // words (Z^2 collapses to identity).
  const double electric =
      params.spacing * params.coupling * params.coupling / 8.0;
  if (electric != 0.0) {
    double identity_weight = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
      double stagger_partial = 0.0;
      for (int k = 0; k <= j; ++k) stagger_partial += stagger_sign(k);
      // (sum Z)^2 -> (j+1) identities + 2 sum_{k<l} Z_k Z_l
      identity_weight += electric * (j + 1 + stagger_partial * stagger_partial);
      for (int k = 0; k <= j; ++k) {
        for (int l = k + 1; l <= j; ++l) {
          h.add(zz_word(n, k, l, 2.0 * electric));
        }
        // cross term 2 * stagger_partial * Z_k
        h.add(z_word(n, k, 2.0 * electric * stagger_partial));
      }
    }
    PauliString id;
    id.axes.assign(n, PauliAxis::I);
    id.coefficient = identity_weight;
    h.add(id);
  }

  h.compact();
  return h;
}

Statevector reference_state(int sites) {
  check_even_sites(sites);
  std::uint64_t index = 0;
  for (int j = 1; j < sites; j += 2) index |= std::uint64_t{1} << j;
  return Statevector::basis_state(sites, index);
}

double chiral_condensate(const Statevector& state) {
  const int n = state.qubit_count;
  check_even_sites(n);
  std::uint64_t even_mask = 0;
  std::uint64_t odd_mask = 0;
  for (int j = 0; j < n; j += 2) even_mask |= std::uint64_t{1} << j;
  for (int j = 1; j < n; j += 2) odd_mask |= std::uint64_t{1} << j;
  // Per basis state: sum_j stagger(j) <Z_j> = -2 (n_odd_set - n_even_set)
  // because sum_j stagger(j) = 0 for even site counts.
  double acc = 0.0;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const double p = std::norm(state.amplitudes[i]);
    if (p == 0.0) continue;
    const int set_odd = std::popcount(i & odd_mask);
    const int set_even = std::popcount(i & even_mask);
    acc += p * -2.0 * static_cast<double>(set_odd - set_even);
  }
  return acc / (2.0 * n);
}

PauliTermSum total_z_operator(int sites) {
  detail::check_qubit_count(sites);
  PauliTermSum sum(sites);
  for (int j = 0; j < sites; ++j) sum.add(z_word(sites, j, 1.0));
  return sum;
}

double continuum_condensate() {
  constexpr double euler_gamma = 0.57721566490153286;
  return -std::exp(euler_gamma) / (2.0 * std::pow(M_PI, 1.5));
}

}  // namespace sc2adapt
