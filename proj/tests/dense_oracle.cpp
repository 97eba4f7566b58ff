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

#include "dense_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace oracle {

using sc2adapt::Complex;
using sc2adapt::MesonGenerator;
using sc2adapt::PauliAxis;
using sc2adapt::PauliString;
using sc2adapt::PauliTermSum;
using sc2adapt::Statevector;

Matrix pauli_matrix(PauliAxis axis) {
  Matrix m(2, 2);
  const Complex i{0.0, 1.0};
  switch (axis) {
    case PauliAxis::I:
      m << 1, 0, 0, 1;
      break;
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, -i, i, 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

namespace {

// kron(a, b) where `a` indexes the more significant bits.
Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Site 0 is the least significant bit, so the chain multiplies down from the
// highest site.
Matrix chain(int sites, const std::vector<std::pair<int, Matrix>>& locals) {
  Matrix out = Matrix::Identity(1, 1);
  for (int site = sites - 1; site >= 0; --site) {
    Matrix local = Matrix::Identity(2, 2);
    for (const auto& [s, m] : locals) {
      if (s == site) local = m;
    }
    out = kron(out, local);
  }
  return out;
}

}  // namespace

Matrix site_operator(int sites, int site, const Matrix& local) {
  return chain(sites, {{site, local}});
}

Matrix dense_term(const PauliString& term) {
  const int sites = static_cast<int>(term.axes.size());
  std::vector<std::pair<int, Matrix>> locals;
  for (int q = 0; q < sites; ++q) {
    if (term.axes[q] != PauliAxis::I) {
      locals.emplace_back(q, pauli_matrix(term.axes[q]));
    }
  }
  return term.coefficient * chain(sites, locals);
}

Matrix dense_sum(const PauliTermSum& sum) {
  const Eigen::Index dim = Eigen::Index{1} << sum.qubit_count();
  Matrix out = Matrix::Zero(dim, dim);
  for (const PauliString& term : sum.terms()) out += dense_term(term);
  return out;
}

Matrix dense_generator(const MesonGenerator& gen) {
  Matrix raising(2, 2), lowering(2, 2);
  raising << 0, 1, 0, 0;   // |0><1|
  lowering << 0, 0, 1, 0;  // |1><0|
  std::vector<std::pair<int, Matrix>> locals;
  locals.emplace_back(gen.site, raising);
  locals.emplace_back(gen.site + gen.span, lowering);
  for (int q = gen.site + 1; q < gen.site + gen.span; ++q) {
    locals.emplace_back(q, pauli_matrix(PauliAxis::Z));
  }
  const Matrix term = chain(gen.qubit_count, locals);
  const Complex half_i{0.0, 0.5};
  return static_cast<double>(gen.sign) *
         (half_i * (term - term.adjoint().eval())).eval();
}

Matrix expm(const Matrix& a) {
  // Scale so the Taylor series converges quickly, then square back.
  const double norm = a.cwiseAbs().sum();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Matrix b = scale * a;
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix power = Matrix::Identity(a.rows(), a.cols());
  for (int k = 1; k <= 30; ++k) {
    power = (power * b).eval() / static_cast<double>(k);
    result += power;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

Vector to_eigen(const Statevector& state) {
  Vector v(state.amplitudes.size());
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = state.amplitudes[i];
  }
  return v;
}

Statevector from_eigen(const Vector& v, int qubits) {
  Statevector state(qubits);
  if (v.size() != static_cast<Eigen::Index>(state.amplitudes.size())) {
    throw std::invalid_argument("from_eigen: dimension mismatch");
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    state.amplitudes[static_cast<std::size_t>(i)] = v(i);
  }
  return state;
}

DenseGround dense_ground_state(const PauliTermSum& hamiltonian) {
  const Matrix h = dense_sum(hamiltonian);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense diagonalization failed");
  }
  DenseGround ground{solver.eigenvalues()(0),
                     from_eigen(solver.eigenvectors().col(0),
                                hamiltonian.qubit_count())};
  return ground;
}

}  // namespace oracle
