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

#include "sc2adapt/lanczos.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "sc2adapt/schwinger.hpp"

namespace sc2adapt {

namespace {

// Smallest eigenvalue of the symmetric tridiagonal matrix (alpha, beta) by
// Sturm-sequence bisection.
double tridiagonal_lowest_eigenvalue(const std::vector<double>& alpha,
                                     const std::vector<double>& beta) {
  const std::size_t k = alpha.size();
  double lo = alpha[0];
  double hi = alpha[0];
  for (std::size_t i = 0; i < k; ++i) {
    const double b_prev = (i > 0) ? std::abs(beta[i - 1]) : 0.0;
    const double b_next = (i + 1 < k) ? std::abs(beta[i]) : 0.0;
    lo = std::min(lo, alpha[i] - b_prev - b_next);
    hi = std::max(hi, alpha[i] + b_prev + b_next);
  }
  const auto count_below = [&](double x) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double b2 = (i > 0) ? beta[i - 1] * beta[i - 1] : 0.0;
      d = alpha[i] - x - b2 / d;
      if (d == 0.0) d = 1e-300;
      if (d < 0.0) ++count;
    }
    return count;
  };
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo));
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Eigenvector of the tridiagonal matrix for an isolated eigenvalue, by
// inverse iteration with a partially pivoted banded solve.
std::vector<double> tridiagonal_eigenvector(const std::vector<double>& alpha,
                                            const std::vector<double>& beta,
                                            double eigenvalue) {
  const std::size_t k = alpha.size();
  std::vector<double> v(k, 1.0 / std::sqrt(static_cast<double>(k)));
  if (k == 1) return {1.0};
  const double shift = eigenvalue + 1e-12 * (1.0 + std::abs(eigenvalue));
  for (int pass = 0; pass < 3; ++pass) {
    // LU with partial pivoting of (T - shift I); one superdiagonal fills in.
    std::vector<double> d(k), e(k, 0.0), f(k, 0.0), rhs = v;
    for (std::size_t i = 0; i < k; ++i) d[i] = alpha[i] - shift;
    for (std::size_t i = 0; i + 1 < k; ++i) e[i] = beta[i];
    std::vector<double> sub(k, 0.0);
    for (std::size_t i = 0; i + 1 < k; ++i) sub[i + 1] = beta[i];
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (std::abs(sub[i + 1]) > std::abs(d[i])) {
        std::swap(d[i], sub[i + 1]);
        std::swap(e[i], d[i + 1]);
        std::swap(f[i], e[i + 1]);
        std::swap(rhs[i], rhs[i + 1]);
      }
      if (d[i] == 0.0) d[i] = 1e-300;
      const double mult = sub[i + 1] / d[i];
      d[i + 1] -= mult * e[i];
      e[i + 1] -= mult * f[i];
      rhs[i + 1] -= mult * rhs[i];
    }
    if (d[k - 1] == 0.0) d[k - 1] = 1e-300;
    v[k - 1] = rhs[k - 1] / d[k - 1];
    if (k >= 2) v[k - 2] = (rhs[k - 2] - e[k - 2] * v[k - 1]) / d[k - 2];
    for (std::size_t ii = k; ii-- > 2;) {
      const std::size_t i = ii - 2;
      v[i] = (rhs[i] - e[i] * v[i + 1] - f[i] * v[i + 2]) / d[i];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

Statevector seeded_random_state(int qubits, std::uint64_t seed) {
  Statevector state(qubits);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (Complex& a : state.amplitudes) a = Complex{dist(rng), 0.0};
  state.normalize();
  return state;
}

Statevector default_start_vector(int qubits) {
  if (qubits % 2 == 0) return reference_state(qubits);
  return Statevector::basis_state(qubits, 0);
}

struct LanczosRun {
  bool converged = false;
  bool exhausted = false;  // Krylov space closed before reaching tolerance
  SurrogateResult result;
};

LanczosRun run_lanczos(const CompiledSum& h, const Statevector& start,
                       const LanczosOptions& options) {
  LanczosRun run;
  std::vector<Statevector> basis;
  std::vector<double> alpha, beta;
  basis.push_back(start);

  Statevector w(h.qubit_count());
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const Statevector& v = basis.back();
    h.apply_into(v, w);
    alpha.push_back(inner_product(v, w).real());
    // Full reorthogonalization, two passes for determinism at tight
    // tolerances.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Statevector& u : basis) {
        const Complex proj = inner_product(u, w);
        for (std::size_t i = 0; i < w.amplitudes.size(); ++i) {
          w.amplitudes[i] -= proj * u.amplitudes[i];
        }
      }
    }
    const double b = w.norm();

    const double theta = tridiagonal_lowest_eigenvalue(alpha, beta);
    const std::vector<double> s = tridiagonal_eigenvector(alpha, beta, theta);
    const double residual_estimate = b * std::abs(s.back());

    if (residual_estimate < options.tolerance || b < 1e-14 ||
        iter == options.max_iterations) {
      Statevector ritz(h.qubit_count());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < ritz.amplitudes.size(); ++i) {
          ritz.amplitudes[i] += s[j] * basis[j].amplitudes[i];
        }
      }
      ritz.normalize();
      h.apply_into(ritz, w);
      double res = 0.0;
      for (std::size_t i = 0; i < w.amplitudes.size(); ++i) {
        res += std::norm(w.amplitudes[i] - theta * ritz.amplitudes[i]);
      }
      res = std::sqrt(res);
      run.result.energy = theta;
      run.result.state = std::move(ritz);
      run.result.residual = res;
      run.result.iterations = iter;
      run.converged = res < options.tolerance;
      run.exhausted = b < 1e-14;
      return run;
    }

    beta.push_back(b);
    const double inv = 1.0 / b;
    for (Complex& a : w.amplitudes) a *= inv;
    basis.push_back(w);
  }
  return run;  // not reached
}

}  // namespace

SurrogateResult ground_state(const PauliTermSum& hamiltonian,
                             const LanczosOptions& options) {
  const CompiledSum h(hamiltonian);
  LanczosRun run =
      run_lanczos(h, default_start_vector(hamiltonian.qubit_count()), options);
  if (run.converged) return run.result;
  if (run.exhausted) {
    // The start vector spanned an invariant subspace that may miss the
    // ground sector; retry from a seeded random vector.
    LanczosRun retry = run_lanczos(
        h, seeded_random_state(hamiltonian.qubit_count(), options.fallback_seed),
        options);
    if (retry.converged) return retry.result;
    run = std::move(retry);
  }
  throw std::runtime_error(
      "Lanczos did not converge within " +
      std::to_string(options.max_iterations) + " iterations (best residual " +
      std::to_string(run.result.residual) + ")");
}

SurrogateResult ground_state(const PauliTermSum& hamiltonian, double tolerance,
                             int max_iterations) {
  LanczosOptions options;
  options.tolerance = tolerance;
  options.max_iterations = max_iterations;
  return ground_state(hamiltonian, options);
}

}  // namespace sc2adapt
