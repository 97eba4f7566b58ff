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

#include <span>
#include <vector>

#include "sc2adapt/pool.hpp"
#include "sc2adapt/statevector.hpp"

namespace sc2adapt {

/// Surrogate score of one pool operator: the squared transition matrix
/// element |<ref| O |surrogate>|^2 and its ratio to the pool maximum.
struct PoolScore {
  PoolLabel label;
  double overlap = 0.0;  // |<ref| O |sur>|^2
  double ratio = 0.0;    // overlap / max overlap over the scored pool
};

/// |<ref| O_label |surrogate>|^2 at the given volume. One operator
/// application and one inner product; both states must be normalized.
double overlap_score(const PoolLabel& label, const Statevector& surrogate_state,
                     const Statevector& reference, int sites);

/// Scores for every label, with ratios normalized so the maximal element has
/// ratio exactly 1.
std::vector<PoolScore> score_pool(std::span<const PoolLabel> pool,
                                  const Statevector& surrogate_state,
                                  const Statevector& reference, int sites);

struct TruncatedPool {
  std::vector<PoolLabel> labels;  // in the original pool order
  int min_volume = 2;             // max over the kept labels
};

/// Keeps labels whose score ratio meets the cutoff. Ratios are recomputed
/// from the overlaps, so scaling every overlap by a positive constant leaves
/// the result unchanged. Throws when every overlap is zero (the surrogate is
/// orthogonal to every single-meson excitation of the reference).
TruncatedPool truncate_pool(std::span<const PoolScore> scores, double delta);

}  // namespace sc2adapt
