// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "resgerm/chardir.hpp"
#include "resgerm/errors.hpp"

using namespace resgerm;

namespace {

Shadow example() {
  return planar_shadow(1, Poly{{MultiIndex{1, 1}, 2.0}}, Poly{{MultiIndex{0, 2}, 3.0}});
}

}  // namespace

TEST_CASE("classification of the degenerate-direction example") {
  const auto dirs = find_characteristic_directions(example());
  REQUIRE(dirs.size() == 2);
  const auto& a = dirs[0];
  CHECK(a.chart == Chart::First);
  CHECK(std::abs(a.coord) < 1e-14);
  CHECK(a.degenerate);
  CHECK(a.type == DirectionType::Fuchsian);
  CHECK(a.mu1 == 1);
  CHECK(a.mu2 == 2);
  CHECK(std::abs(a.index - Complex(2.0)) < 1e-10);
  const auto& b = dirs[1];
  CHECK(b.chart == Chart::Second);
  CHECK_FALSE(b.degenerate);
  CHECK(std::abs(b.index - Complex(-3.0)) < 1e-10);
  REQUIRE(b.directors.size() == 1);
  CHECK(std::abs(b.directors[0] - Complex(-1.0 / 3.0)) < 1e-10);
}

TEST_CASE("dicritical shadows are rejected") {
  const Shadow s = planar_shadow(1, Poly{{MultiIndex{2, 0}, 1.0}, {MultiIndex{1, 1}, 2.0}},
                                 Poly{{MultiIndex{1, 1}, 1.0}, {MultiIndex{0, 2}, 2.0}});
  try {
    find_characteristic_directions(s);
    FAIL("expected Dicritical");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dicritical);
  }
}

TEST_CASE("index agrees with contour integration") {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Shadow s = gen::random_shadow(rng, 1 + trial % 2);
    const auto polys = chart_polys(s, Chart::First);
    for (const auto& d : find_characteristic_directions(s)) {
      if (d.chart != Chart::First || d.near_multiple) continue;
      const Complex want = oracle::contour_residue(polys.g1, polys.g2, d.coord, 1e-3);
      CHECK(std::abs(d.index - want) < 1e-6 * (1.0 + std::abs(want)));
      ++compared;
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("indices sum to -1") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Shadow s = gen::random_shadow(rng, 1 + trial % 2, trial % 3 == 0);
    Complex sum = 0.0;
    bool flagged = false;
    for (const auto& d : find_characteristic_directions(s)) {
      sum += d.index;
      flagged |= d.near_multiple;
    }
    if (!flagged) CHECK(std::abs(sum + 1.0) < 1e-7);
  }
}

TEST_CASE("director times k0 times index is one at simple Fuchsian directions") {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Shadow s = gen::random_shadow(rng, 1 + trial % 2);
    for (const auto& d : find_characteristic_directions(s)) {
      if (d.degenerate || d.type != DirectionType::Fuchsian || d.near_multiple) continue;
      REQUIRE(d.directors.size() == 1);
      CHECK(std::abs(d.directors[0] * static_cast<double>(s.k0) * d.index - 1.0) < 1e-8);
      ++seen;
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("normalized direction satisfies H(v) = -v/k0") {
  std::mt19937_64 rng(43);
  const Shadow s = gen::random_shadow(rng, 2);
  for (const auto& d : find_characteristic_directions(s)) {
    if (d.degenerate) continue;
    const Vec2 v = normalize_direction(s, d.rep);
    const Vec2 h = evaluate_H(s, v);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(h[i] + v[i] / 2.0) < 1e-9 * (1.0 + std::abs(v[i])));
  }
}

TEST_CASE("classify picks a chart from the representative") {
  const Shadow s = example();
  const auto d = classify(s, Vec2{Complex(0.0), Complex(5.0)});
  CHECK(d.chart == Chart::Second);
  CHECK(std::abs(d.index - Complex(-3.0)) < 1e-10);
  CHECK(std::abs(index_of(s, Vec2{Complex(2.0), Complex(0.0)}) - Complex(2.0)) < 1e-10);
  CHECK_THROWS_AS(classify(s, Vec2{Complex(1.0), Complex(1.0)}), Error);
  CHECK_THROWS_AS(normalize_direction(s, Vec2{Complex(1.0), Complex(0.0)}), Error);
}

TEST_CASE("irregular direction") {
  // In the first chart g1 = -1 and g2 = u^3.
  const Shadow s = planar_shadow(2, Poly{{MultiIndex{3, 0}, -1.0}},
                                 Poly{{MultiIndex{2, 1}, -1.0}, {MultiIndex{0, 3}, 1.0}});
  const auto d = classify_in_chart(s, Chart::First, 0.0);
  CHECK(d.type == DirectionType::Irregular);
  CHECK(d.mu1 == 0);
  CHECK(d.mu2 == 3);
}
