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

#include "sc2adapt/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sc2adapt {

namespace {

struct WordMasks {
  std::uint64_t x_mask = 0;  // set where the word has X or Y
  std::uint64_t z_mask = 0;  // set where the word has Z or Y
  int y_count = 0;
};

WordMasks masks_of(const PauliString& term) {
  WordMasks m;
  for (std::size_t q = 0; q < term.axes.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (term.axes[q]) {
      case PauliAxis::I:
        break;
      case PauliAxis::X:
        m.x_mask |= bit;
        break;
      case PauliAxis::Y:
        m.x_mask |= bit;
        m.z_mask |= bit;
        ++m.y_count;
        break;
      case PauliAxis::Z:
        m.z_mask |= bit;
        break;
    }
  }
  return m;
}

void check_term(const PauliString& term, int qubit_count) {
  if (static_cast<int>(term.axes.size()) != qubit_count) {
    throw std::invalid_argument("Pauli word length " +
                                std::to_string(term.axes.size()) +
                                " does not match qubit count " +
                                std::to_string(qubit_count));
  }
  if (!std::isfinite(term.coefficient)) {
    throw std::invalid_argument("Pauli coefficient must be finite");
  }
}

// Scatter one real-weighted Pauli word: out[i ^ x] += w(i) * in[i], where
// w(i) = coeff * i^{#Y} * (-1)^{popcount(i & z)}. The phase is either purely
// real or purely imaginary, so both branches stay in real scalar arithmetic.
void scatter_word(std::uint64_t x_mask, std::uint64_t z_mask, double coeff,
                  bool imaginary, const std::vector<Complex>& in,
                  std::vector<Complex>& out) {
  const std::uint64_t dim = in.size();
  if (imaginary) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double w =
          (std::popcount(i & z_mask) & 1) ? -coeff : coeff;
      const Complex& a = in[i];
      out[i ^ x_mask] += Complex{-w * a.imag(), w * a.real()};
    }
  } else {
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double w =
          (std::popcount(i & z_mask) & 1) ? -coeff : coeff;
      out[i ^ x_mask] += w * in[i];
    }
  }
}

// i^{y_count} = phase_sign * (imaginary ? i : 1)
void fold_y_phase(int y_count, double& coeff, bool& imaginary) {
  switch (y_count & 3) {
    case 0:
      imaginary = false;
      break;
    case 1:
      imaginary = true;
      break;
    case 2:
      imaginary = false;
      coeff = -coeff;
      break;
    case 3:
      imaginary = true;
      coeff = -coeff;
      break;
  }
}

}  // namespace

char axis_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::I:
      return 'I';
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return '?';
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliAxis::I;
    case 'X':
      return PauliAxis::X;
    case 'Y':
      return PauliAxis::Y;
    case 'Z':
      return PauliAxis::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli axis '") + c +
                                  "'");
  }
}

PauliString::PauliString(std::string_view word, double coeff)
    : coefficient(coeff) {
  axes.reserve(word.size());
  for (char c : word) axes.push_back(axis_from_char(c));
}

std::string PauliString::word() const {
  std::string w;
  w.reserve(axes.size());
  for (PauliAxis a : axes) w.push_back(axis_char(a));
  return w;
}

PauliTermSum::PauliTermSum(int qubit_count) : qubit_count_(qubit_count) {
  detail::check_qubit_count(qubit_count);
}

PauliTermSum PauliTermSum::identity(int qubit_count, double weight) {
  PauliTermSum sum(qubit_count);
  PauliString id;
  id.axes.assign(qubit_count, PauliAxis::I);
  id.coefficient = weight;
  sum.add(id);
  return sum;
}

void PauliTermSum::add(const PauliString& term) {
  check_term(term, qubit_count_);
  const WordMasks m = masks_of(term);
  const auto key = std::make_pair(m.x_mask, m.z_mask);
  auto it = index_.find(key);
  if (it != index_.end()) {
    terms_[it->second].coefficient += term.coefficient;
  } else {
    index_.emplace(key, terms_.size());
    terms_.push_back(term);
  }
}

void PauliTermSum::add(std::string_view word, double coefficient) {
  add(PauliString(word, coefficient));
}

void PauliTermSum::compact(double threshold) {
  std::vector<PauliString> kept;
  kept.reserve(terms_.size());
  for (const PauliString& t : terms_) {
    if (std::abs(t.coefficient) > threshold) kept.push_back(t);
  }
  terms_ = std::move(kept);
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const WordMasks m = masks_of(terms_[i]);
    index_.emplace(std::make_pair(m.x_mask, m.z_mask), i);
  }
}

Statevector apply_sum(const PauliTermSum& op, const Statevector& state) {
  if (op.qubit_count() != state.qubit_count) {
    throw std::invalid_argument(
        "apply_sum: operator acts on " + std::to_string(op.qubit_count()) +
        " qubits but state has " + std::to_string(state.qubit_count));
  }
  Statevector out(state.qubit_count);
  for (const PauliString& term : op.terms()) {
    WordMasks m = masks_of(term);
    double coeff = term.coefficient;
    bool imaginary = false;
    fold_y_phase(m.y_count, coeff, imaginary);
    scatter_word(m.x_mask, m.z_mask, coeff, imaginary, state.amplitudes,
                 out.amplitudes);
  }
  return out;
}

double expectation(const PauliTermSum& op, const Statevector& state) {
  const double n = state.norm();
  if (std::abs(n - 1.0) > 1e-8) {
    throw std::invalid_argument("expectation: state is not normalized (norm " +
                                std::to_string(n) + ")");
  }
  const Statevector applied = apply_sum(op, state);
  const Complex value = inner_product(state, applied);
  const double tol = 1e-12 * std::max(1.0, std::abs(value.real()));
  if (std::abs(value.imag()) > tol) {
    throw std::runtime_error(
        "expectation: imaginary residue " + std::to_string(value.imag()) +
        " exceeds the Hermiticity tolerance");
  }
  return value.real();
}

CompiledSum::CompiledSum(const PauliTermSum& op)
    : qubit_count_(op.qubit_count()) {
  const std::uint64_t dim = std::uint64_t{1} << qubit_count_;
  for (const PauliString& term : op.terms()) {
    WordMasks m = masks_of(term);
    double coeff = term.coefficient;
    bool imaginary = false;
    fold_y_phase(m.y_count, coeff, imaginary);
    if (m.x_mask == 0) {
      // Diagonal word (only Z and I): fold into the weight table.
      if (diagonal_.empty()) diagonal_.assign(dim, 0.0);
      for (std::uint64_t i = 0; i < dim; ++i) {
        diagonal_[i] += (std::popcount(i & m.z_mask) & 1) ? -coeff : coeff;
      }
    } else {
      off_diagonal_.push_back({m.x_mask, m.z_mask, coeff, imaginary});
    }
  }
}

void CompiledSum::apply_into(const Statevector& in, Statevector& out) const {
  if (in.qubit_count != qubit_count_) {
    throw std::invalid_argument("CompiledSum::apply_into: dimension mismatch");
  }
  if (out.qubit_count != qubit_count_) {
    out = Statevector(qubit_count_);
  } else {
    std::fill(out.amplitudes.begin(), out.amplitudes.end(), Complex{0.0, 0.0});
  }
  if (!diagonal_.empty()) {
    for (std::uint64_t i = 0; i < in.amplitudes.size(); ++i) {
      out.amplitudes[i] = diagonal_[i] * in.amplitudes[i];
    }
  }
  for (const MaskTerm& t : off_diagonal_) {
    scatter_word(t.x_mask, t.z_mask, t.coefficient, t.imaginary, in.amplitudes,
                 out.amplitudes);
  }
}

Statevector CompiledSum::apply(const Statevector& in) const {
  Statevector out(qubit_count_);
  apply_into(in, out);
  return out;
}

double CompiledSum::expectation(const Statevector& state) const {
  Statevector applied(qubit_count_);
  apply_into(state, applied);
  return inner_product(state, applied).real();
}

}  // namespace sc2adapt
