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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sc2adapt/statevector.hpp"

namespace sc2adapt {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis axis);
PauliAxis axis_from_char(char c);

/// One Pauli word with a real weight.
///
/// Every operator in this library is stored as a sum of real-weighted Pauli
/// words (ladder operators are expanded at construction time), so all term
/// sums are Hermitian by construction.
struct PauliString {
  std::vector<PauliAxis> axes;  // one entry per site, axes[q] acts on site q
  double coefficient = 0.0;

  PauliString() = default;
  PauliString(std::string_view word, double coeff);

  /// Word form with site 0 first, e.g. "XZY" is X on site 0, Z on 1, Y on 2.
  std::string word() const;
};

/// Canonicalized sum of real-weighted Pauli words: no two terms share the
/// same axes, and terms keep their first-insertion order.
class PauliTermSum {
 public:
  explicit PauliTermSum(int qubit_count);

  static PauliTermSum identity(int qubit_count, double weight = 1.0);

  /// Merges into an existing term with the same axes if present.
  void add(const PauliString& term);
  void add(std::string_view word, double coefficient);

  /// Removes terms with |coefficient| <= threshold.
  void compact(double threshold = 1e-15);

  const std::vector<PauliString>& terms() const { return terms_; }
  int qubit_count() const { return qubit_count_; }
  std::size_t size() const { return terms_.size(); }

 private:
  int qubit_count_;
  std::vector<PauliString> terms_;
  // (x_mask, z_mask) -> index into terms_; Y sets both mask bits.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index_;
};

/// op|psi>. The result is generally not normalized; the input is unchanged.
Statevector apply_sum(const PauliTermSum& op, const Statevector& state);

/// Re<psi|op|psi> for a normalized state. Throws if the imaginary residue
/// exceeds the Hermiticity tolerance, which cannot happen for inputs built
/// through this library and signals a broken operator otherwise.
double expectation(const PauliTermSum& op, const Statevector& state);

/// Preprocessed form of a PauliTermSum for repeated application. All
/// diagonal terms (Z/I words) collapse into a single per-basis-state weight
/// table; off-diagonal words keep their bit masks.
class CompiledSum {
 public:
  explicit CompiledSum(const PauliTermSum& op);

  void apply_into(const Statevector& in, Statevector& out) const;
  Statevector apply(const Statevector& in) const;
  double expectation(const Statevector& state) const;

  int qubit_count() const { return qubit_count_; }

 private:
  struct MaskTerm {
    std::uint64_t x_mask;
    std::uint64_t z_mask;
    double coefficient;  // phase i^{#Y} folded in; `imaginary` tracks i
    bool imaginary;
  };

  int qubit_count_;
  std::vector<double> diagonal_;  // empty when there are no diagonal terms
  std::vector<MaskTerm> off_diagonal_;
};

}  // namespace sc2adapt
