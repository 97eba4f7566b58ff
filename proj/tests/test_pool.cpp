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

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "dense_oracle.hpp"
#include "sc2adapt/pool.hpp"

using namespace sc2adapt;

TEST_SUITE("pool") {

TEST_CASE("label strings round-trip") {
  const PoolLabel v{PoolKind::Volume, 3, 0};
  const PoolLabel s{PoolKind::Surface, 5, 1};
  CHECK(v.str() == "V(3)");
  CHECK(s.str() == "S(1,5)");
  CHECK(PoolLabel::parse("V(3)") == v);
  CHECK(PoolLabel::parse("S(1,5)") == s);
  CHECK_THROWS_AS(PoolLabel::parse("Q(1)"), std::invalid_argument);
  CHECK_THROWS_AS(PoolLabel::parse("V(0)"), std::invalid_argument);
  CHECK_THROWS_AS(PoolLabel::parse("S(1)"), std::invalid_argument);
}

TEST_CASE("full pool at four sites") {
  const std::vector<PoolLabel> pool = generate_full_pool(4);
  REQUIRE(pool.size() == 5);
  CHECK(pool[0] == PoolLabel{PoolKind::Volume, 1, 0});
  CHECK(pool[1] == PoolLabel{PoolKind::Volume, 3, 0});
  CHECK(pool[2] == PoolLabel{PoolKind::Surface, 1, 0});
  CHECK(pool[3] == PoolLabel{PoolKind::Surface, 3, 0});
  CHECK(pool[4] == PoolLabel{PoolKind::Surface, 1, 1});
}

TEST_CASE("smallest volume pool") {
  const std::vector<PoolLabel> pool = generate_full_pool(2);
  REQUIRE(pool.size() == 2);
  CHECK(pool[0] == PoolLabel{PoolKind::Volume, 1, 0});
  CHECK(pool[1] == PoolLabel{PoolKind::Surface, 1, 0});
}

TEST_CASE("pool grows monotonically with volume") {
  for (int sites = 2; sites <= 14; sites += 2) {
    const auto small = generate_full_pool(sites);
    const auto large = generate_full_pool(sites + 2);
    const std::set<PoolLabel> large_set(large.begin(), large.end());
    for (const PoolLabel& label : small) {
      CHECK(large_set.count(label) == 1);
    }
  }
}

TEST_CASE("even spans appear when odd_span_only is off") {
  PoolConfig config;
  config.odd_span_only = false;
  const auto pool = generate_full_pool(4, config);
  const auto has = [&](const PoolLabel& label) {
    return std::find(pool.begin(), pool.end(), label) != pool.end();
  };
  CHECK(has(PoolLabel{PoolKind::Volume, 2, 0}));
  CHECK(has(PoolLabel{PoolKind::Surface, 2, 0}));
}

TEST_CASE("volume instantiation alternates signs") {
  const InstantiatedOperator op =
      instantiate(PoolLabel{PoolKind::Volume, 1, 0}, 4);
  REQUIRE(op.generators.size() == 3);
  CHECK(op.generators[0].site == 0);
  CHECK(op.generators[0].sign == 1);
  CHECK(op.generators[1].site == 1);
  CHECK(op.generators[1].sign == -1);
  CHECK(op.generators[2].site == 2);
  CHECK(op.generators[2].sign == 1);
}

TEST_CASE("surface instantiation is the symmetric boundary pair") {
  const InstantiatedOperator op =
      instantiate(PoolLabel{PoolKind::Surface, 1, 0}, 4);
  REQUIRE(op.generators.size() == 2);
  CHECK(op.generators[0].site == 0);
  CHECK(op.generators[1].site == 2);
  CHECK(op.generators[0].sign == 1);
  CHECK(op.generators[1].sign == 1);
}

TEST_CASE("coinciding surface pair emits one generator, not two") {
  const InstantiatedOperator op =
      instantiate(PoolLabel{PoolKind::Surface, 3, 0}, 4);
  REQUIRE(op.generators.size() == 1);
  CHECK(op.generators[0].site == 0);
  // Emitting the pair twice would double the operator norm.
  const oracle::Matrix once = oracle::dense_generator(op.generators[0]);
  const oracle::Matrix summed = oracle::dense_sum(op.terms());
  CHECK((summed - once).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("instantiation below the minimum volume names it in the error") {
  try {
    instantiate(PoolLabel{PoolKind::Volume, 9, 0}, 8);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}

TEST_CASE("minimum volumes") {
  CHECK(min_volume(PoolLabel{PoolKind::Volume, 1, 0}) == 2);
  CHECK(min_volume(PoolLabel{PoolKind::Volume, 9, 0}) == 10);
  CHECK(min_volume(PoolLabel{PoolKind::Surface, 1, 0}) == 2);
  CHECK(min_volume(PoolLabel{PoolKind::Surface, 1, 1}) == 4);
  CHECK(min_volume(PoolLabel{PoolKind::Surface, 7, 1}) == 10);
  // Every pool label instantiates at its own minimum volume.
  for (const PoolLabel& label : generate_full_pool(12)) {
    CHECK_NOTHROW(instantiate(label, min_volume(label)));
  }
}

TEST_CASE("instantiated operators are Hermitian charge-conserving i*(real antisymmetric)") {
  for (int sites : {4, 6}) {
    for (const PoolLabel& label : generate_full_pool(sites)) {
      const InstantiatedOperator op = instantiate(label, sites);
      const oracle::Matrix dense = oracle::dense_sum(op.terms());
      CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
      // i * real antisymmetric: purely imaginary entries, A^T = -A.
      CHECK(dense.real().cwiseAbs().maxCoeff() < 1e-14);
      CHECK((dense.transpose() + dense).cwiseAbs().maxCoeff() < 1e-14);
      // Commutes with total charge: no matrix element changes the
      // excitation number.
      for (Eigen::Index row = 0; row < dense.rows(); ++row) {
        for (Eigen::Index col = 0; col < dense.cols(); ++col) {
          if (std::abs(dense(row, col)) > 1e-14) {
            CHECK(std::popcount(static_cast<std::uint64_t>(row)) ==
                  std::popcount(static_cast<std::uint64_t>(col)));
          }
        }
      }
    }
  }
}

}  // TEST_SUITE
