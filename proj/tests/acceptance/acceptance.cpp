// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Usage: acceptance <criterion 1-9|all> [cli path] [scratch dir]
// Prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "resgerm/errors.hpp"
#include "resgerm/io.hpp"
#include "resgerm/pipeline.hpp"

using namespace resgerm;

namespace {

std::string g_cli;
std::string g_scratch = ".";

struct Outcome {
  bool pass = false;
  std::string detail;
};

PolyGerm load(const std::string& name) { return load_germ_spec(std::string(RESGERM_SPEC_DIR) + "/" + name).germ; }

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome shadow_exactness() {
  const Analysis a = run_analysis(load("no_basin.json"), AnalysisOptions{});
  const Shadow& sh = *a.shadow;
  double err = 0.0;
  const std::vector<std::pair<MultiIndex, Complex>> h1{{MultiIndex{1, 1}, 2.0}};
  const std::vector<std::pair<MultiIndex, Complex>> h2{{MultiIndex{0, 2}, 3.0}};
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& want = j == 0 ? h1 : h2;
    for (int p = 0; p <= 2; ++p) {
      const MultiIndex k{p, 2 - p};
      Complex w = 0.0;
      for (const auto& [kk, c] : want) {
        if (kk == k) w = c;
      }
      err = std::max(err, std::abs(sh.coefficient(j, k) - w));
    }
  }
  return {sh.m == 2 && sh.k0 == 1 && err <= 1e-14, fmt("max coefficient error %.3e (tol 1e-14)", err)};
}

Outcome classification() {
  const Analysis a = run_analysis(load("no_basin.json"), AnalysisOptions{});
  if (a.directions.size() != 2) return {false, fmt("%zu directions", a.directions.size())};
  const auto& d0 = a.directions[0].direction;
  const auto& d1 = a.directions[1].direction;
  const bool first = d0.chart == Chart::First && std::abs(d0.coord) < 1e-12 && d0.degenerate &&
                     d0.type == DirectionType::Fuchsian && d0.mu1 == 1 && d0.mu2 == 2 &&
                     std::abs(d0.index - 2.0) <= 1e-10;
  const bool second = d1.chart == Chart::Second && std::abs(d1.coord) < 1e-12 && !d1.degenerate &&
                      d1.directors.size() == 1 && std::abs(d1.directors[0] + 1.0 / 3.0) <= 1e-10;
  const double dir = d1.directors.empty() ? 0.0 : d1.directors[0].real();
  return {first && second,
          fmt("[1:0] %s %s mu=(%d,%d) index %.12g; [0:1] director %.12g", d0.degenerate ? "degenerate" : "nondegenerate",
              to_string(d0.type).c_str(), d0.mu1.value_or(-1), d0.mu2, d0.index.real(), dir)};
}

struct ShadowSweep {
  int total = 0;
  int sum_ok = 0;
  int unflagged_failures = 0;
  int director_checked = 0;
  int director_failures = 0;
  double worst_sum = 0.0;
  double worst_director = 0.0;
};

ShadowSweep sweep_shadows() {
  ShadowSweep out;
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k0 = 1 + trial % 2;
    const Shadow s = gen::random_shadow(rng, k0, trial % 4 == 3);
    ++out.total;
    Complex sum = 0.0;
    bool flagged = false;
    std::vector<CharDirection> dirs;
    try {
      dirs = find_characteristic_directions(s);
    } catch (const Error&) {
      ++out.unflagged_failures;
      continue;
    }
    for (const auto& d : dirs) {
      sum += d.index;
      flagged |= d.near_multiple;
      if (d.degenerate || d.type != DirectionType::Fuchsian || d.near_multiple || d.directors.size() != 1) continue;
      const double dev = std::abs(d.directors[0] * static_cast<double>(k0) * d.index - 1.0);
      ++out.director_checked;
      out.worst_director = std::max(out.worst_director, dev);
      if (dev > 1e-8) ++out.director_failures;
    }
    const double dev = std::abs(sum + 1.0);
    if (dev <= 1e-7) {
      ++out.sum_ok;
    } else if (!flagged) {
      ++out.unflagged_failures;
    }
    if (!flagged) out.worst_sum = std::max(out.worst_sum, dev);
  }
  return out;
}

Outcome index_theorem() {
  const auto s = sweep_shadows();
  return {s.sum_ok >= 999 && s.unflagged_failures == 0,
          fmt("%d/%d sums within 1e-7, %d unflagged failures, worst unflagged deviation %.3e", s.sum_ok, s.total,
              s.unflagged_failures, s.worst_sum)};
}

Outcome director_index() {
  const auto s = sweep_shadows();
  return {s.director_checked > 0 && s.director_failures == 0,
          fmt("%d simple Fuchsian directions, %d outside 1e-8, worst %.3e", s.director_checked, s.director_failures,
              s.worst_director)};
}

// Degenerate two-resonant germs with an explicit lattice.
Outcome degenerate_property() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> entry(0, 3);
  int trials = 0, identity_ok = 0, negative = 0, skipped = 0;
  double worst = 0.0;
  while (trials < 500) {
    const std::size_t r = 2 + static_cast<std::size_t>(trials % 3);
    MultiIndex p1(r), p2(r);
    if (r == 2) {
      p1 = MultiIndex{1, 0};
      p2 = MultiIndex{0, 1};
    } else {
      for (std::size_t i = 0; i < r; ++i) {
        p1[i] = entry(rng);
        p2[i] = entry(rng);
      }
    }
    if (p1.degree() < 1 || p2.degree() < 1 || rational_rank({p1, p2}) != 2) {
      ++skipped;
      continue;
    }
    // Turns t with P t = 0 mod 1.
    std::vector<std::int64_t> num(r, 0);
    std::int64_t den = 1;
    if (r == 3) {
      num = {p1[1] * p2[2] - p1[2] * p2[1], p1[2] * p2[0] - p1[0] * p2[2], p1[0] * p2[1] - p1[1] * p2[0]};
      den = 97;
    } else if (r == 4) {
      // Two independent null vectors from 3x3 minors, combined.
      auto cross = [&](std::size_t a, std::size_t b, std::size_t c) {
        std::vector<std::int64_t> v(4, 0);
        v[a] = p1[b] * p2[c] - p1[c] * p2[b];
        v[b] = p1[c] * p2[a] - p1[a] * p2[c];
        v[c] = p1[a] * p2[b] - p1[b] * p2[a];
        return v;
      };
      const auto u = cross(0, 1, 2), w = cross(1, 2, 3);
      for (std::size_t i = 0; i < 4; ++i) num[i] = 3 * u[i] + 5 * w[i];
      den = 101;
    }
    std::vector<Eigenvalue> ev;
    for (std::size_t i = 0; i < r; ++i) ev.push_back({1.0, RationalTurn(num[i], den)});
    const Spectrum spec(ev, r);
    std::vector<MultiIndex> gens{p1, p2};
    std::sort(gens.begin(), gens.end(), [](const MultiIndex& a, const MultiIndex& b) { return LexLess{}(b, a); });
    const ResonanceLattice lat(gens, r, r);
    bool ok_turns = true;
    for (const auto& g : gens) ok_turns &= spec.turn_of(g).is_zero();
    if (!ok_turns) throw Error(ErrorKind::Validation, "lattice construction");

    // Direction v and resonant values b = sum_K c_K v^K in the null space of P.
    const Vec2 v{gen::gaussian(rng), gen::gaussian(rng)};
    std::vector<Complex> b(r, 0.0);
    if (r == 3) {
      const Complex t = gen::gaussian(rng);
      for (std::size_t i = 0; i < 3; ++i) b[i] = t * static_cast<double>(num[i]);
    } else if (r == 4) {
      // Null space of the 2x4 integer matrix through two rational vectors.
      std::vector<std::int64_t> n1(4, 0), n2(4, 0);
      auto cross = [&](std::size_t a, std::size_t bb, std::size_t c) {
        std::vector<std::int64_t> x(4, 0);
        x[a] = gens[0][bb] * gens[1][c] - gens[0][c] * gens[1][bb];
        x[bb] = gens[0][c] * gens[1][a] - gens[0][a] * gens[1][c];
        x[c] = gens[0][a] * gens[1][bb] - gens[0][bb] * gens[1][a];
        return x;
      };
      n1 = cross(0, 1, 2);
      n2 = cross(0, 1, 3);
      const Complex s1 = gen::gaussian(rng), s2 = gen::gaussian(rng);
      for (std::size_t i = 0; i < 4; ++i) b[i] = s1 * static_cast<double>(n1[i]) + s2 * static_cast<double>(n2[i]);
    }
    std::vector<GermTerm> terms;
    for (std::size_t s = 0; s < r; ++s) {
      const Complex c01 = gen::gaussian(rng);
      const Complex c10 = (b[s] - c01 * v[1]) / v[0];
      const Complex ls = spec.lambda(s);
      terms.push_back({s, lat.monomial(s, {1, 0}), 0.1 * c10 * ls});
      terms.push_back({s, lat.monomial(s, {0, 1}), 0.1 * c01 * ls});
    }
    int l = 2;
    for (const auto& t : terms) l = std::max(l, t.exponents.degree());
    const PolyGerm f(spec, l, terms);
    const Shadow sh = parabolic_shadow(f, lat);
    ObstructionReport rep;
    try {
      rep = degenerate_obstruction(f, sh, v);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    ++trials;
    double wmax = 0.0;
    for (double x : rep.w) wmax = std::max(wmax, std::abs(x));
    bool holds = rep.identity_holds;
    for (const auto& id : rep.identities) {
      const double rel = std::abs(id.value) / std::max(1.0, wmax);
      worst = std::max(worst, rel);
      holds &= rel <= 1e-9;
    }
    identity_ok += holds;
    negative += rep.all_negative;
  }
  return {identity_ok == 500 && negative == 0,
          fmt("identity held in %d/500 (worst %.3e), all-negative in %d, %d draws rejected", identity_ok, worst,
              negative, skipped)};
}

Outcome normalization_soundness() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int sound = 0, clean = 0, failed = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Eigenvalue> ev;
    oracle::Turns turns;
    for (int i = 0; i < 3; ++i) {
      std::int64_t q, p;
      if (trial % 2 == 0) {
        static const std::int64_t fam[3][2] = {{501, 800}, {233, 400}, {367, 1000}};
        p = fam[i][0];
        q = fam[i][1];
      } else {
        q = std::uniform_int_distribution<std::int64_t>(200, 1000)(rng);
        p = std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng);
      }
      ev.push_back({1.0, RationalTurn(p, q)});
      turns.num.push_back(ev.back().turn.num());
      turns.den.push_back(ev.back().turn.den());
    }
    const Spectrum spec(ev, 3);
    auto resonant = [&](std::size_t s, const oracle::Exps& e) {
      oracle::Exps unit_s(3, 0);
      unit_s[s] = 1;
      return oracle::turn_residue(turns, e) == oracle::turn_residue(turns, unit_s);
    };
    std::vector<GermTerm> terms;
    for (std::size_t s = 0; s < 3; ++s) {
      for (int d = 2; d <= 5; ++d) {
        oracle::all_of_degree(3, d, [&](const oracle::Exps& e) {
          const MultiIndex k(std::vector<int>(e.begin(), e.end()));
          const bool res = resonant(s, e);
          if (!res) {
            if (std::abs(spec.power(k) - spec.lambda(s)) < 0.05) return;
            if (std::uniform_int_distribution<int>(0, 5)(rng) != 0) return;
          }
          terms.push_back({s, k, 0.1 * Complex(unit(rng), unit(rng)) / std::sqrt(2.0)});
        });
      }
    }
    const PolyGerm f(spec, 5, terms);
    try {
      const auto nf = poincare_dulac_normalize(f, 5);
      const PolyGerm conj =
          compose_truncate(nf.record.inverse_transform, compose_truncate(f, nf.record.transform, 5), 5);
      const double err = max_abs_difference(conj.to_map(), nf.normal_form.to_map());
      worst = std::max(worst, err);
      sound += err <= 1e-10;
      bool ok = true;
      for (const auto& t : nf.normal_form.terms()) {
        ok &= resonant(t.component, oracle::Exps(t.exponents.entries().begin(), t.exponents.entries().end()));
      }
      clean += ok;
    } catch (const Error&) {
      ++failed;
    }
  }
  return {sound == 100 && clean == 100,
          fmt("conjugacy within 1e-10 in %d/100 (worst %.3e), normal form clean in %d/100, %d errors", sound, worst,
              clean, failed)};
}

Outcome family_witness() {
  const Analysis a = run_analysis(load("attracting_family.json"), AnalysisOptions{});
  BasinProbeConfig cfg;
  cfg.beta = 0.1;
  cfg.samples = 200;
  cfg.max_iter = 100000;
  const BasinReport rep = run_probe(a, cfg);
  return {rep.converged_fraction >= 0.99 && rep.monitors.decay == 0,
          fmt("converged_fraction %.3f (need 0.99); verdicts c/e/b/x = %ld/%ld/%ld/%ld; decay violations %ld; "
              "per-step decay rate mean %.7f min %.7f max %.7f",
              rep.converged_fraction, rep.counts.converged, rep.counts.escaped, rep.counts.bounded_nonconvergent,
              rep.counts.budget_exhausted, rep.monitors.decay, rep.decay.mean, rep.decay.min, rep.decay.max)};
}

Outcome no_basin_witness() {
  BallSurveyConfig cfg;
  cfg.radius = 0.1;
  cfg.samples = 10000;
  cfg.max_iter = 100000;
  cfg.watched_component = 1;
  cfg.min_watched_modulus = 1e-6;
  const auto rep = survey_ball(load("no_basin.json"), cfg);
  return {rep.counts.converged == 0 && rep.max_watched_drift < 1e-12,
          fmt("converged %ld of 10000 (escaped %ld, bounded %ld, budget %ld); max |z2| drift %.3e", rep.counts.converged,
              rep.counts.escaped, rep.counts.bounded_nonconvergent, rep.counts.budget_exhausted,
              rep.max_watched_drift)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  if (g_cli.empty()) return {false, "no CLI path given"};
  const std::string spec = std::string(RESGERM_SPEC_DIR) + "/attracting_family.json";
  std::string outs[2];
  for (int i = 0; i < 2; ++i) {
    const std::string out = g_scratch + "/determinism_" + std::to_string(i) + ".json";
    const std::string cmd = "\"" + g_cli + "\" probe \"" + spec + "\" --samples 16 --max-iter 5000 --seed 9 --threads " +
                            std::to_string(1 + 2 * i) + " --out \"" + out + "\"";
    if (std::system(cmd.c_str()) != 0) return {false, "CLI run failed: " + cmd};
    outs[i] = slurp(out);
  }
  return {!outs[0].empty() && outs[0] == outs[1], fmt("two runs, %zu and %zu bytes", outs[0].size(), outs[1].size())};
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion all[] = {
      {"shadow exactness", 1.0, shadow_exactness},
      {"classification of the degenerate example", 1.0, classification},
      {"index theorem over random shadows", 30.0, index_theorem},
      {"director-index relation", 10.0, director_index},
      {"degenerate-direction identity", 30.0, degenerate_property},
      {"normalization soundness", 60.0, normalization_soundness},
      {"attracting family basin witness", 300.0, family_witness},
      {"no-basin witness", 300.0, no_basin_witness},
      {"probe determinism", 60.0, determinism},
  };
  const std::string which = argc > 1 ? argv[1] : "all";
  if (argc > 2) g_cli = argv[2];
  if (argc > 3) g_scratch = argv[3];
  int failures = 0;
  for (int i = 0; i < 9; ++i) {
    if (which != "all" && which != std::to_string(i + 1)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < all[i].budget_s;
    failures += !pass;
    std::printf("%s %d %s: %s; %.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", i + 1, all[i].name, o.detail.c_str(),
                secs, all[i].budget_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
