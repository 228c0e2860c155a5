// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "resgerm/errors.hpp"
#include "resgerm/io.hpp"
#include "resgerm/philox.hpp"
#include "resgerm/pipeline.hpp"

using namespace resgerm;

namespace {

PolyGerm load(const std::string& name) { return load_germ_spec(std::string(RESGERM_SPEC_DIR) + "/" + name).germ; }

}  // namespace

TEST_CASE("philox known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate(B{0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::generate(B{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
        B{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::generate(B{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
        B{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("philox streams are independent of consumption order") {
  PhiloxStream a(5, 3), b(5, 3), c(5, 4);
  for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
  PhiloxStream a2(5, 3);
  CHECK(a2.next_u64() != c.next_u64());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("iteration verdicts") {
  const Spectrum contracting({{0.5, RationalTurn(0, 1)}}, 0);
  const auto lin = PolyGerm::linear(contracting, 2);
  IterateConfig cfg;
  cfg.max_iter = 1000;
  auto t = iterate(lin, {0.1}, cfg);
  CHECK(t.verdict == Verdict::Converged);
  CHECK(t.iterations < 100);

  const Spectrum rot({{1.0, RationalTurn(1, 7)}}, 1);
  t = iterate(PolyGerm::linear(rot, 2), {0.1}, cfg);
  CHECK(t.verdict == Verdict::BoundedNonconvergent);
  CHECK(t.iterations == 1000);

  const Spectrum one({{1.0, RationalTurn(0, 1)}}, 1);
  const PolyGerm quad(one, 2, {{0, MultiIndex{2}, 1.0}});
  t = iterate(quad, {0.5}, cfg);
  CHECK(t.verdict == Verdict::Escaped);

  // z - z^2 approaches 0 like 1/n: still decreasing at the budget.
  const PolyGerm flower(one, 2, {{0, MultiIndex{2}, -1.0}});
  t = iterate(flower, {0.1}, cfg);
  CHECK(t.verdict == Verdict::BudgetExhausted);
  CHECK(t.points.size() > 10);
}

TEST_CASE("probe config validation") {
  BasinProbeConfig cfg;
  validate(cfg);
  cfg.smax = 20.0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = BasinProbeConfig{};
  cfg.samples = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = BasinProbeConfig{};
  cfg.beta = -1.0;
  CHECK_THROWS_AS(validate(cfg), Error);
}

TEST_CASE("seed curve lies in the probed region") {
  const PolyGerm f = load("attracting_family.json");
  const Analysis a = run_analysis(f, AnalysisOptions{});
  REQUIRE(a.shadow);
  const auto& dir = a.directions.at(0).direction;
  const BasinGeometry geom = basin_geometry(*a.shadow, dir);
  const auto expo = seed_exponent(geom);
  REQUIRE(expo.size() == 3);
  const auto& p = a.lattice.generator(0);
  int pa = 0;
  for (std::size_t i = 0; i < 3; ++i) pa += p[i] * expo[i];
  CHECK(pa > 0);
  BasinProbeConfig cfg;
  const auto pts = seed_curve(geom, {1e-2, 1e-3});
  for (const auto& z : pts) {
    const auto cc = chart_coords(geom, z);
    CHECK(std::abs(std::arg(cc.s * geom.omega)) < 1e-9);
  }
}

TEST_CASE("probe is independent of the thread count") {
  const PolyGerm f = load("attracting_family.json");
  const Analysis a = run_analysis(f, AnalysisOptions{});
  BasinProbeConfig cfg;
  cfg.samples = 6;
  cfg.max_iter = 2000;
  cfg.trace_samples = 2;
  cfg.threads = 1;
  const auto one = dump(basin_json(run_probe(a, cfg)));
  cfg.threads = 3;
  const auto three = dump(basin_json(run_probe(a, cfg)));
  CHECK(one == three);
  cfg.seed = 2;
  CHECK(dump(basin_json(run_probe(a, cfg))) != one);
}

TEST_CASE("ball survey of the no-basin germ") {
  const PolyGerm f = load("no_basin.json");
  BallSurveyConfig cfg;
  cfg.samples = 50;
  cfg.max_iter = 2000;
  cfg.watched_component = 1;
  const auto rep = survey_ball(f, cfg);
  CHECK(rep.counts.converged == 0);
  CHECK(rep.max_watched_drift < 1e-12);
  CHECK(rep.counts.converged + rep.counts.escaped + rep.counts.bounded_nonconvergent + rep.counts.budget_exhausted ==
        50);
}
