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

#include "sc2adapt/pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc2adapt {

namespace {

int round_up_to_even(int n) { return (n % 2 == 0) ? n : n + 1; }

void validate_label(const PoolLabel& label) {
  if (label.span < 1) {
    throw std::invalid_argument("pool label span must be >= 1");
  }
  if (label.kind == PoolKind::Surface && label.offset < 0) {
    throw std::invalid_argument("surface label offset must be >= 0");
  }
}

}  // namespace

std::string PoolLabel::str() const {
  if (kind == PoolKind::Volume) {
    return "V(" + std::to_string(span) + ")";
  }
  return "S(" + std::to_string(offset) + "," + std::to_string(span) + ")";
}

PoolLabel PoolLabel::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("cannot parse pool label '" +
                                std::string(text) + "'");
  };
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') fail();
  const std::string body(text.substr(2, text.size() - 3));
  PoolLabel label;
  try {
    if (text[0] == 'V') {
      label.kind = PoolKind::Volume;
      std::size_t used = 0;
      label.span = std::stoi(body, &used);
      if (used != body.size()) fail();
    } else if (text[0] == 'S') {
      label.kind = PoolKind::Surface;
      const auto comma = body.find(',');
      if (comma == std::string::npos) fail();
      std::size_t used = 0;
      label.offset = std::stoi(body.substr(0, comma), &used);
      if (used != comma) fail();
      label.span = std::stoi(body.substr(comma + 1), &used);
      if (used != body.size() - comma - 1) fail();
    } else {
      fail();
    }
  } catch (const std::invalid_argument&) {
    fail();
  } catch (const std::out_of_range&) {
    fail();
  }
  validate_label(label);
  return label;
}

int min_volume(const PoolLabel& label) {
  validate_label(label);
  if (label.kind == PoolKind::Volume) {
    return std::max(2, round_up_to_even(label.span + 1));
  }
  // Bounds require m + d <= N_s - 1; the non-crossing requirement
  // m <= N_s - m - 1 - d dominates it.
  return std::max(2, round_up_to_even(2 * label.offset + label.span + 1));
}

int min_volume(std::span<const PoolLabel> labels) {
  if (labels.empty()) {
    throw std::invalid_argument("min_volume of an empty pool is undefined");
  }
  int v = 2;
  for (const PoolLabel& label : labels) v = std::max(v, min_volume(label));
  return v;
}

std::vector<PoolLabel> generate_full_pool(int sites, const PoolConfig& config) {
  if (sites < 2 || sites % 2 != 0) {
    throw std::invalid_argument("pool volume must be a positive even integer");
  }
  if (config.max_surface_offset < 0) {
    throw std::invalid_argument("max_surface_offset must be >= 0");
  }
  const int step = config.odd_span_only ? 2 : 1;
  std::vector<PoolLabel> pool;
  for (int d = 1; d <= sites - 1; d += step) {
    PoolLabel label{PoolKind::Volume, d, 0};
    if (min_volume(label) <= sites) pool.push_back(label);
  }
  if (config.include_surface) {
    for (int m = 0; m <= config.max_surface_offset; ++m) {
      for (int d = 1; d <= sites - 1; d += step) {
        PoolLabel label{PoolKind::Surface, d, m};
        if (min_volume(label) <= sites) pool.push_back(label);
      }
    }
  }
  return pool;
}

InstantiatedOperator instantiate(const PoolLabel& label, int sites) {
  const int required = min_volume(label);
  if (sites < required || sites % 2 != 0) {
    throw std::invalid_argument("pool label " + label.str() +
                                " is undefined at volume " +
                                std::to_string(sites) + " (minimum volume " +
                                std::to_string(required) + ")");
  }
  InstantiatedOperator op;
  op.label = label;
  op.sites = sites;
  if (label.kind == PoolKind::Volume) {
    for (int n = 0; n <= sites - 1 - label.span; ++n) {
      op.generators.push_back(
          MesonGenerator{n, label.span, (n % 2 == 0) ? 1 : -1, sites});
    }
  } else {
    const int first = label.offset;
    const int second = sites - label.offset - 1 - label.span;
    op.generators.push_back(MesonGenerator{first, label.span, 1, sites});
    if (second != first) {
      op.generators.push_back(MesonGenerator{second, label.span, 1, sites});
    }
  }
  return op;
}

Statevector InstantiatedOperator::apply(const Statevector& state) const {
  Statevector out(state.qubit_count);
  for (const MesonGenerator& gen : generators) {
    accumulate_generator_apply(gen, state, out);
  }
  return out;
}

PauliTermSum InstantiatedOperator::terms() const {
  PauliTermSum sum(sites);
  for (const MesonGenerator& gen : generators) {
    const PauliTermSum gen_terms = generator_terms(gen);
    for (const PauliString& term : gen_terms.terms()) {
      sum.add(term);
    }
  }
  sum.compact();
  return sum;
}

}  // namespace sc2adapt
