// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "resgerm/roots.hpp"

using namespace resgerm;

namespace {

UPoly from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
  UPoly p{lead};
  for (auto r : roots) {
    UPoly q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = q;
  }
  return p;
}

}  // namespace

TEST_CASE("simple roots are recovered") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> want;
    for (int i = 0; i < 4; ++i) want.emplace_back(g(rng), g(rng));
    const auto got = polynomial_roots(from_roots(want, Complex(g(rng), g(rng))));
    int total = 0;
    for (const auto& r : got) total += r.multiplicity;
    CHECK(total == 4);
    for (auto w : want) {
      double best = 1e300;
      for (const auto& r : got) best = std::min(best, std::abs(r.value - w));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("multiple roots cluster") {
  const auto got = polynomial_roots(from_roots({0.5, 0.5, 0.5, Complex(0, 2)}));
  REQUIRE(got.size() == 2);
  // Sorted by real part: 2i comes first.
  CHECK(got[0].multiplicity == 1);
  CHECK(got[1].multiplicity == 3);
  CHECK(std::abs(got[1].value - Complex(0.5)) < 1e-9);
}

TEST_CASE("higher multiplicities away from the origin") {
  const auto got = polynomial_roots(from_roots({Complex(0.3, -0.7), Complex(0.3, -0.7), Complex(0.3, -0.7),
                                                Complex(0.3, -0.7), -1.0}));
  REQUIRE(got.size() == 2);
  CHECK(got[1].multiplicity == 4);
  CHECK(std::abs(got[1].value - Complex(0.3, -0.7)) < 1e-8);
}

TEST_CASE("near-multiple roots are flagged") {
  const auto got = polynomial_roots(from_roots({1.0, 1.0 + 1e-4}));
  REQUIRE(got.size() == 2);
  CHECK(got[0].near_multiple);
  CHECK(got[1].near_multiple);
}

TEST_CASE("helpers") {
  const UPoly p{1.0, 2.0, 3.0};
  CHECK(evaluate(p, 2.0) == Complex(17.0));
  CHECK(derivative(p) == UPoly{2.0, 6.0});
  const UPoly q = taylor_shift(p, 1.0);
  CHECK(evaluate(q, 0.5) == evaluate(p, 1.5));
  CHECK(vanishing_order(UPoly{0.0, 0.0, 1.0}, 1e-12) == 2);
  CHECK_FALSE(vanishing_order(UPoly{0.0}, 1e-12));
  UPoly t{1.0, 2.0, 1e-20};
  trim_top(t, 1e-12, 2.0);
  CHECK(t.size() == 2);
}
