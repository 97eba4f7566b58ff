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

#include "sc2adapt/meson.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sc2adapt {

namespace {

struct GeneratorMasks {
  std::uint64_t lo;       // endpoint bit at `site`
  std::uint64_t hi;       // endpoint bit at `site + span`
  std::uint64_t flip;     // lo | hi
  std::uint64_t between;  // Z-string sites strictly between the endpoints
};

GeneratorMasks masks_of(const MesonGenerator& gen) {
  GeneratorMasks m;
  m.lo = std::uint64_t{1} << gen.site;
  m.hi = std::uint64_t{1} << (gen.site + gen.span);
  m.flip = m.lo | m.hi;
  m.between = (m.hi - 1) & ~((m.lo << 1) - 1);
  return m;
}

}  // namespace

void MesonGenerator::validate() const {
  if (span < 1) {
    throw std::invalid_argument("meson generator span must be >= 1");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("meson generator sign must be +1 or -1");
  }
  if (site < 0 || site + span > qubit_count - 1) {
    throw std::invalid_argument(
        "meson generator (site " + std::to_string(site) + ", span " +
        std::to_string(span) + ") does not fit in " +
        std::to_string(qubit_count) + " sites");
  }
  detail::check_qubit_count(qubit_count);
}

void apply_generator_exponential_in_place(const MesonGenerator& gen,
                                          double angle, Statevector& state) {
  gen.validate();
  if (state.qubit_count != gen.qubit_count) {
    throw std::invalid_argument(
        "apply_generator_exponential: dimension mismatch");
  }
  const GeneratorMasks m = masks_of(gen);
  const double half = 0.5 * angle * gen.sign;
  const double c = std::cos(half);
  const double s = std::sin(half);
  std::vector<Complex>& amp = state.amplitudes;
  const std::uint64_t dim = amp.size();
  // Each coupled pair (excitation at `site`) <-> (excitation at
  // `site + span`) is visited exactly once, keyed by the lo-occupied member.
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & m.lo) && !(i & m.hi)) {
      const std::uint64_t j = i ^ m.flip;
      const double se = (std::popcount(i & m.between) & 1) ? -s : s;
      const Complex a = amp[i];
      const Complex b = amp[j];
      amp[i] = c * a - se * b;
      amp[j] = se * a + c * b;
    }
  }
}

Statevector apply_generator_exponential(const MesonGenerator& gen,
                                        double angle,
                                        const Statevector& state) {
  Statevector out = state;
  apply_generator_exponential_in_place(gen, angle, out);
  return out;
}

void accumulate_generator_apply(const MesonGenerator& gen,
                                const Statevector& in, Statevector& out) {
  gen.validate();
  detail::check_same_dimension(in, out, "accumulate_generator_apply");
  if (in.qubit_count != gen.qubit_count) {
    throw std::invalid_argument("apply_generator: dimension mismatch");
  }
  const GeneratorMasks m = masks_of(gen);
  const std::uint64_t dim = in.amplitudes.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & m.lo) && !(i & m.hi)) {
      const std::uint64_t j = i ^ m.flip;
      const double f =
          (std::popcount(i & m.between) & 1) ? -0.5 * gen.sign : 0.5 * gen.sign;
      // G|i> = (i f)|j>, G|j> = -(i f)|i>
      const Complex a = in.amplitudes[i];
      const Complex b = in.amplitudes[j];
      out.amplitudes[j] += Complex{-f * a.imag(), f * a.real()};
      out.amplitudes[i] -= Complex{-f * b.imag(), f * b.real()};
    }
  }
}

Statevector apply_generator(const MesonGenerator& gen,
                            const Statevector& state) {
  Statevector out(state.qubit_count);
  accumulate_generator_apply(gen, state, out);
  return out;
}

Complex generator_derivative_bracket(const MesonGenerator& gen,
                                     const Statevector& bra,
                                     const Statevector& ket) {
  gen.validate();
  detail::check_same_dimension(bra, ket, "generator_derivative_bracket");
  if (bra.qubit_count != gen.qubit_count) {
    throw std::invalid_argument(
        "generator_derivative_bracket: dimension mismatch");
  }
  const GeneratorMasks m = masks_of(gen);
  const std::uint64_t dim = bra.amplitudes.size();
  Complex acc{0.0, 0.0};
  // (-i G)|i> = f|j> and (-i G)|j> = -f|i> with f = +-sign/2.
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & m.lo) && !(i & m.hi)) {
      const std::uint64_t j = i ^ m.flip;
      const double f =
          (std::popcount(i & m.between) & 1) ? -0.5 * gen.sign : 0.5 * gen.sign;
      acc += f * (std::conj(bra.amplitudes[j]) * ket.amplitudes[i] -
                  std::conj(bra.amplitudes[i]) * ket.amplitudes[j]);
    }
  }
  return acc;
}

PauliTermSum generator_terms(const MesonGenerator& gen) {
  gen.validate();
  PauliTermSum sum(gen.qubit_count);
  PauliString xy;
  xy.axes.assign(gen.qubit_count, PauliAxis::I);
  for (int q = gen.site + 1; q < gen.site + gen.span; ++q) {
    xy.axes[q] = PauliAxis::Z;
  }
  PauliString yx = xy;
  xy.axes[gen.site] = PauliAxis::X;
  xy.axes[gen.site + gen.span] = PauliAxis::Y;
  xy.coefficient = 0.25 * gen.sign;
  yx.axes[gen.site] = PauliAxis::Y;
  yx.axes[gen.site + gen.span] = PauliAxis::X;
  yx.coefficient = -0.25 * gen.sign;
  sum.add(xy);
  sum.add(yx);
  return sum;
}

}  // namespace sc2adapt
