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

#include "sc2adapt/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace sc2adapt {

double overlap_score(const PoolLabel& label, const Statevector& surrogate_state,
                     const Statevector& reference, int sites) {
  detail::check_same_dimension(surrogate_state, reference, "overlap_score");
  const InstantiatedOperator op = instantiate(label, sites);
  const Statevector applied = op.apply(surrogate_state);
  const Complex amplitude = inner_product(reference, applied);
  return std::norm(amplitude);
}

std::vector<PoolScore> score_pool(std::span<const PoolLabel> pool,
                                  const Statevector& surrogate_state,
                                  const Statevector& reference, int sites) {
  std::vector<PoolScore> scores;
  scores.reserve(pool.size());
  double max_overlap = 0.0;
  for (const PoolLabel& label : pool) {
    PoolScore score;
    score.label = label;
    score.overlap = overlap_score(label, surrogate_state, reference, sites);
    max_overlap = std::max(max_overlap, score.overlap);
    scores.push_back(score);
  }
  if (max_overlap > 0.0) {
    for (PoolScore& score : scores) score.ratio = score.overlap / max_overlap;
  }
  return scores;
}

TruncatedPool truncate_pool(std::span<const PoolScore> scores, double delta) {
  if (scores.empty()) {
    throw std::invalid_argument("truncate_pool: no scores given");
  }
  if (delta < 0.0) {
    throw std::invalid_argument("truncate_pool: delta must be >= 0");
  }
  double max_overlap = 0.0;
  for (const PoolScore& score : scores) {
    max_overlap = std::max(max_overlap, std::abs(score.overlap));
  }
  if (max_overlap == 0.0) {
    throw std::runtime_error(
        "truncate_pool: every overlap is zero; the surrogate state carries no "
        "single-meson excitation of the reference");
  }
  TruncatedPool result;
  for (const PoolScore& score : scores) {
    if (std::abs(score.overlap) / max_overlap >= delta) {
      result.labels.push_back(score.label);
    }
  }
  result.min_volume = min_volume(std::span<const PoolLabel>(result.labels));
  return result;
}

}  // namespace sc2adapt
