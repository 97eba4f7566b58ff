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

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sc2adapt/meson.hpp"

namespace sc2adapt {

enum class PoolKind { Volume, Surface };

/// Volume-independent identity of a pool operator. A Volume label V(d) is an
/// alternating-sign sum of meson generators of span d over the whole lattice;
/// a Surface label S(m, d) is the symmetric pair of generators at offset m
/// from each open boundary. The same label instantiates at any volume at or
/// above its minimum volume.
struct PoolLabel {
  PoolKind kind = PoolKind::Volume;
  int span = 1;    // d >= 1
  int offset = 0;  // m >= 0, Surface only

  std::string str() const;  // "V(d)" or "S(m,d)"
  static PoolLabel parse(std::string_view text);

  friend auto operator<=>(const PoolLabel&, const PoolLabel&) = default;
};

struct PoolConfig {
  bool odd_span_only = true;      // mesons couple opposite-stagger sites
  int max_surface_offset = 1;     // keep surface operators with m <= this
  bool include_surface = true;
};

/// All pool labels defined at the given volume, in the deterministic order
/// that also serves as the ADAPT tie-breaking order: Volume labels by
/// ascending span, then Surface labels by (offset, span).
std::vector<PoolLabel> generate_full_pool(int sites,
                                          const PoolConfig& config = {});

/// A pool label made concrete at one volume: its generators in ascending
/// site order.
struct InstantiatedOperator {
  PoolLabel label;
  int sites = 0;
  std::vector<MesonGenerator> generators;

  Statevector apply(const Statevector& state) const;
  PauliTermSum terms() const;
};

/// Throws when the label is not defined at this volume, naming the minimum
/// volume in the message.
InstantiatedOperator instantiate(const PoolLabel& label, int sites);

/// Smallest even volume at which the label instantiates. For Surface labels
/// this includes the requirement that the boundary pair does not cross
/// (coinciding exactly is allowed and emits a single generator).
int min_volume(const PoolLabel& label);

/// Pool-level minimum volume: the maximum over the labels' minimum volumes.
int min_volume(std::span<const PoolLabel> labels);

}  // namespace sc2adapt
