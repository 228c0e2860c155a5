// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <thread>

#include "resgerm/errors.hpp"
#include "resgerm/philox.hpp"

namespace resgerm {
namespace {

double sq_norm(const std::vector<Complex>& z) {
  double s = 0.0;
  for (const auto& c : z) s += c.real() * c.real() + c.imag() * c.imag();
  return s;
}

double max_modulus(const std::vector<Complex>& z) {
  double m = 0.0;
  for (const auto& c : z) m = std::max(m, std::abs(c));
  return m;
}

std::vector<std::size_t> conserved_components(const PolyGerm& f) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < f.spectrum().r(); ++s) {
    if (f.nonlinear(s).empty() && f.spectrum()[s].modulus == 1.0) out.push_back(s);
  }
  return out;
}

struct RunResult {
  Verdict verdict = Verdict::BoundedNonconvergent;
  long iterations = 0;
  double final_norm = 0.0;
};

// Shared orbit loop. `on_step(it, z)` runs on every finite iterate.
template <class OnStep>
RunResult run_orbit(const GermEvaluator& ev, std::vector<Complex>& z, long max_iter, double eps,
                    double r_escape, const std::vector<std::size_t>& conserved, OnStep&& on_step) {
  const std::size_t n = z.size();
  std::vector<Complex> next(n);
  std::vector<Complex> scratch;
  const double eps2 = eps * eps;
  const double r2 = r_escape * r_escape;
  RunResult res;
  double sq = sq_norm(z);
  if (!std::isfinite(sq) || sq > r2) return {Verdict::Escaped, 0, std::sqrt(sq)};
  if (sq < eps2) return {Verdict::Converged, 0, std::sqrt(sq)};
  const long quarter_at = max_iter - std::max<long>(1, max_iter / 4);
  double quarter_ref = quarter_at <= 0 ? max_modulus(z) : 0.0;
  for (long it = 1; it <= max_iter; ++it) {
    ev.apply(z.data(), next.data(), scratch);
    z.swap(next);
    sq = sq_norm(z);
    if (!std::isfinite(sq) || sq > r2) return {Verdict::Escaped, it, std::sqrt(sq)};
    on_step(it, z);
    if (sq < eps2) return {Verdict::Converged, it, std::sqrt(sq)};
    if (it == quarter_at) quarter_ref = max_modulus(z);
  }
  res.iterations = max_iter;
  res.final_norm = std::sqrt(sq);
  bool conserving = false;
  for (std::size_t s : conserved) conserving |= std::abs(z[s]) >= eps;
  if (!conserving && max_modulus(z) < quarter_ref) {
    res.verdict = Verdict::BudgetExhausted;
  } else {
    res.verdict = Verdict::BoundedNonconvergent;
  }
  return res;
}

Complex lattice_monomial(const std::vector<Complex>& z, const MultiIndex& p) {
  Complex v = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int e = 0; e < p[i]; ++e) v *= z[i];
  }
  return v;
}

std::size_t along_index(const BasinGeometry& g) { return g.chart == Chart::First ? 0 : 1; }

struct MonitorState {
  bool member = false;
  bool decay_ok = false;
  double abs_s = 0.0;
  Complex s;
  std::vector<double> abs_u;
};

MonitorState evaluate_monitors(const BasinGeometry& geom, const std::vector<Complex>& z,
                               const BasinProbeConfig& cfg) {
  MonitorState st;
  const std::size_t a = along_index(geom);
  const std::size_t b = 1 - a;
  const Complex ua = lattice_monomial(z, geom.lattice.generator(a));
  const Complex ub = lattice_monomial(z, geom.lattice.generator(b));
  st.abs_u = {std::abs(a == 0 ? ua : ub), std::abs(a == 0 ? ub : ua)};
  st.s = ua;
  st.abs_s = std::abs(ua);
  if (ua == Complex(0.0, 0.0)) return st;
  const double bound = std::pow(st.abs_s, geom.k0 * cfg.beta);
  st.decay_ok = std::all_of(z.begin(), z.end(), [&](const Complex& c) { return std::abs(c) < bound; });
  const Complex ratio = ub / ua - geom.coord;
  st.member = st.abs_s < cfg.smax && std::abs(std::arg(ua * geom.omega)) < cfg.theta &&
              std::abs(ratio) < cfg.tau && st.decay_ok;
  return st;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Work>
void parallel_for(long count, int threads, Work&& work) {
  std::atomic<long> next{0};
  auto body = [&] {
    for (long i = next++; i < count; i = next++) work(i);
  };
  const int t = static_cast<int>(std::min<long>(thread_count(threads), std::max<long>(count, 1)));
  if (t <= 1) {
    body();
    return;
  }
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k) pool.emplace_back(body);
  for (auto& th : pool) th.join();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Converged: return "converged";
    case Verdict::Escaped: return "escaped";
    case Verdict::BoundedNonconvergent: return "bounded_nonconvergent";
    case Verdict::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

OrbitTrace iterate(const PolyGerm& f, const std::vector<Complex>& z0, const IterateConfig& cfg) {
  if (z0.size() != f.n()) throw Error(ErrorKind::Validation, "iterate: start point has the wrong length");
  for (const auto& c : z0) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::Validation, "iterate: start point is not finite");
    }
  }
  if (cfg.stride < 1) throw Error(ErrorKind::Validation, "iterate: stride must be positive");
  const GermEvaluator ev(f);
  std::vector<Complex> z = z0;
  OrbitTrace trace;
  if (cfg.store_points) trace.points.push_back(OrbitPoint{0, z});
  const RunResult res =
      run_orbit(ev, z, cfg.max_iter, cfg.eps_converge, cfg.r_escape, conserved_components(f),
                [&](long it, const std::vector<Complex>& cur) {
                  if (cfg.store_points && it % cfg.stride == 0) trace.points.push_back(OrbitPoint{it, cur});
                });
  if (cfg.store_points && (trace.points.empty() || trace.points.back().iter != res.iterations)) {
    trace.points.push_back(OrbitPoint{res.iterations, z});
  }
  trace.verdict = res.verdict;
  trace.iterations = res.iterations;
  trace.final_norm = res.final_norm;
  return trace;
}

void validate(const BasinProbeConfig& cfg) {
  const bool positive = cfg.beta > 0 && cfg.theta > 0 && cfg.tau > 0 && cfg.smax > 0 &&
                        cfg.eps_converge > 0 && cfg.r_escape > 0 && cfg.max_iter >= 1 &&
                        cfg.samples >= 1 && cfg.stride >= 1 && cfg.trace_samples >= 0;
  if (!positive) throw Error(ErrorKind::Validation, "probe parameters must be positive");
  if (!(cfg.eps_converge < cfg.smax && cfg.smax < cfg.r_escape)) {
    throw Error(ErrorKind::Validation, "probe parameters must satisfy eps_converge < smax < r_escape");
  }
}

BasinGeometry basin_geometry(const Shadow& shadow, const CharDirection& dir) {
  if (shadow.m != 2 || shadow.lattice.m() != 2) {
    throw Error(ErrorKind::Validation, "basin probing needs a germ shadow with m = 2");
  }
  BasinGeometry g;
  g.chart = dir.chart;
  g.coord = dir.coord;
  g.k0 = shadow.k0;
  g.lattice = shadow.lattice;
  g.degenerate = dir.degenerate || !dir.normalized_rep;
  if (!g.degenerate) {
    // v_n = t v with v the chart representative; s = t x along the direction.
    const std::size_t a = dir.chart == Chart::First ? 0 : 1;
    const Complex t = (*dir.normalized_rep)[a] / dir.rep[a];
    g.omega = std::conj(t) / std::abs(t);
  }
  return g;
}

ChartCoords chart_coords(const BasinGeometry& geom, const std::vector<Complex>& z) {
  const std::size_t a = along_index(geom);
  const Complex ua = lattice_monomial(z, geom.lattice.generator(a));
  const Complex ub = lattice_monomial(z, geom.lattice.generator(1 - a));
  if (ua == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::ChartSingular, "chart coordinate s = u_" + std::to_string(a + 1) + " vanishes");
  }
  return {ua, ub / ua - geom.coord};
}

bool membership(const BasinGeometry& geom, const std::vector<Complex>& z, const BasinProbeConfig& cfg) {
  chart_coords(geom, z);
  return evaluate_monitors(geom, z, cfg).member;
}

bool membership(const Shadow& shadow, const CharDirection& dir, const std::vector<Complex>& z,
                const BasinProbeConfig& cfg) {
  return membership(basin_geometry(shadow, dir), z, cfg);
}

std::vector<int> seed_exponent(const BasinGeometry& geom) {
  if (std::abs(geom.coord) > 1e-12) {
    throw Error(ErrorKind::NoExponent,
                "seed curves are only constructed for the coordinate directions [1:0] and [0:1]");
  }
  const std::size_t n = geom.lattice.n();
  const MultiIndex& p = geom.lattice.generator(along_index(geom));
  const MultiIndex& q = geom.lattice.generator(1 - along_index(geom));
  constexpr int kMax = 10;
  const int base = static_cast<int>(n);
  for (int extra = 0; extra <= (kMax - 1) * base; ++extra) {
    std::vector<MultiIndex> found;
    for_each_of_degree(n, extra, [&](const MultiIndex& e) {
      long pa = 0;
      long qa = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] + 1 > kMax) return;
        pa += static_cast<long>(p[i]) * (e[i] + 1);
        qa += static_cast<long>(q[i]) * (e[i] + 1);
      }
      if (qa > pa) found.push_back(e + MultiIndex(std::vector<int>(n, 1)));
    });
    if (!found.empty()) {
      const MultiIndex best = *std::min_element(found.begin(), found.end(), LexLess{});
      return std::vector<int>(best.entries().begin(), best.entries().end());
    }
  }
  throw Error(ErrorKind::NoExponent, "no exponent a in {1..10}^n with Q.a > P.a along the direction");
}

std::vector<std::vector<Complex>> seed_curve(const BasinGeometry& geom, const std::vector<double>& epsilons,
                                             double target_phase) {
  const std::vector<int> a = seed_exponent(geom);
  const MultiIndex& p = geom.lattice.generator(along_index(geom));
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  // Arg(s omega) = P_k phi_k + Arg(omega) with phi_j = 0 for j != k.
  const double phi = (target_phase - std::arg(geom.omega)) / static_cast<double>(p[k]);
  std::vector<std::vector<Complex>> out;
  for (double eps : epsilons) {
    if (!(eps > 0.0)) throw Error(ErrorKind::Validation, "seed curve parameter must be positive");
    std::vector<Complex> z(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      z[j] = std::polar(std::pow(eps, a[j]), j == k ? phi : 0.0);
    }
    out.push_back(std::move(z));
  }
  return out;
}

BasinReport probe_basin(const PolyGerm& f, const Shadow& shadow, const CharDirection& dir,
                        const BasinProbeConfig& cfg, std::vector<std::string> warnings) {
  validate(cfg);
  BasinReport rep;
  rep.config = cfg;
  rep.geometry = basin_geometry(shadow, dir);
  rep.warnings = std::move(warnings);
  if (rep.geometry.degenerate) {
    rep.warnings.push_back("direction is degenerate; sector phase omega set to 1");
  }
  if (cfg.samples == 0) return rep;
  rep.exponent = seed_exponent(rep.geometry);
  const BasinGeometry& geom = rep.geometry;
  long pa = 0;
  const MultiIndex& p = geom.lattice.generator(along_index(geom));
  for (std::size_t i = 0; i < p.size(); ++i) pa += static_cast<long>(p[i]) * rep.exponent[i];

  const GermEvaluator ev(f);
  const auto conserved = conserved_components(f);
  rep.samples.resize(static_cast<std::size_t>(cfg.samples));
  constexpr int kMaxResample = 64;

  parallel_for(cfg.samples, cfg.threads, [&](long idx) {
    SampleResult& out = rep.samples[static_cast<std::size_t>(idx)];
    out.index = static_cast<std::size_t>(idx);
    PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(idx));
    std::vector<Complex> z;
    for (int attempt = 0; attempt <= kMaxResample; ++attempt) {
      const double u = rng.uniform(0.05, 0.5);
      const double eps = std::pow(cfg.smax * u, 1.0 / static_cast<double>(pa));
      const double phase = rng.uniform(-cfg.theta / 2, cfg.theta / 2);
      z = seed_curve(geom, {eps}, phase).front();
      for (auto& c : z) c *= rng.uniform(0.9, 1.1);
      out.resamples = attempt;
      if (evaluate_monitors(geom, z, cfg).member) {
        out.start_member = true;
        break;
      }
    }
    out.z0 = z;
    const bool traced = idx < cfg.trace_samples;
    auto record = [&](long it, const std::vector<Complex>& cur, const MonitorState& st) {
      TraceRow row;
      row.iter = it;
      row.z = cur;
      row.abs_u = st.abs_u;
      row.arg_u1 = std::arg(lattice_monomial(cur, geom.lattice.generator(0)));
      row.in_region = st.member;
      row.decay_ok = st.decay_ok;
      out.trace.push_back(std::move(row));
    };
    MonitorState st = evaluate_monitors(geom, z, cfg);
    if (traced) record(0, z, st);
    double prev_s = st.abs_s;
    const double start_max = max_modulus(z);
    const RunResult res = run_orbit(
        ev, z, cfg.max_iter, cfg.eps_converge, cfg.r_escape, conserved,
        [&](long it, const std::vector<Complex>& cur) {
          st = evaluate_monitors(geom, cur, cfg);
          if (!st.member) ++out.membership_violations;
          if (!st.decay_ok) ++out.decay_violations;
          if (it > cfg.burn_in && st.abs_s > prev_s) ++out.monotonic_violations;
          prev_s = st.abs_s;
          if (traced && it % cfg.stride == 0) record(it, cur, st);
        });
    if (traced && (out.trace.empty() || out.trace.back().iter != res.iterations)) {
      record(res.iterations, z, evaluate_monitors(geom, z, cfg));
    }
    out.verdict = res.verdict;
    out.iterations = res.iterations;
    out.final_norm = res.final_norm;
    const double end_max = max_modulus(z);
    if (res.iterations > 0 && start_max > 0.0 && std::isfinite(end_max)) {
      out.decay_rate = std::pow(end_max / start_max, 1.0 / static_cast<double>(res.iterations));
    }
  });

  double log_sum = 0.0;
  long log_count = 0;
  bool first = true;
  for (const auto& s : rep.samples) {
    switch (s.verdict) {
      case Verdict::Converged: ++rep.counts.converged; break;
      case Verdict::Escaped: ++rep.counts.escaped; break;
      case Verdict::BoundedNonconvergent: ++rep.counts.bounded_nonconvergent; break;
      case Verdict::BudgetExhausted: ++rep.counts.budget_exhausted; break;
    }
    rep.monitors.membership += s.membership_violations;
    rep.monitors.decay += s.decay_violations;
    rep.monitors.monotonic += s.monotonic_violations;
    rep.monitors.samples_with_membership += s.membership_violations > 0;
    rep.monitors.samples_with_decay += s.decay_violations > 0;
    rep.monitors.samples_with_monotonic += s.monotonic_violations > 0;
    if (s.verdict != Verdict::Escaped && s.decay_rate > 0.0) {
      log_sum += std::log(s.decay_rate);
      ++log_count;
      rep.decay.min = first ? s.decay_rate : std::min(rep.decay.min, s.decay_rate);
      rep.decay.max = first ? s.decay_rate : std::max(rep.decay.max, s.decay_rate);
      first = false;
    }
  }
  if (log_count > 0) rep.decay.mean = std::exp(log_sum / static_cast<double>(log_count));
  rep.converged_fraction = static_cast<double>(rep.counts.converged) / static_cast<double>(cfg.samples);
  return rep;
}

std::vector<std::string> write_traces(const BasinReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Validation, "cannot create trace directory " + dir + ": " + ec.message());
  std::vector<std::string> paths;
  for (const auto& s : report.samples) {
    if (s.trace.empty()) continue;
    char name[64];
    std::snprintf(name, sizeof name, "sample_%06zu.csv", s.index);
    const std::string path = (fs::path(dir) / name).string();
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Validation, "cannot write trace file " + path);
    const std::size_t n = s.trace.front().z.size();
    const std::size_t m = s.trace.front().abs_u.size();
    os << "iter";
    for (std::size_t j = 1; j <= n; ++j) os << ",re_z" << j << ",im_z" << j;
    for (std::size_t i = 1; i <= m; ++i) os << ",abs_u" << i;
    os << ",arg_u1,in_region,decay_ok\n";
    char buf[64];
    for (const auto& row : s.trace) {
      os << row.iter;
      for (const auto& c : row.z) {
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", c.real(), c.imag());
        os << buf;
      }
      for (double x : row.abs_u) {
        std::snprintf(buf, sizeof buf, ",%.17g", x);
        os << buf;
      }
      std::snprintf(buf, sizeof buf, ",%.17g", row.arg_u1);
      os << buf << ',' << (row.in_region ? 1 : 0) << ',' << (row.decay_ok ? 1 : 0) << '\n';
    }
    paths.push_back(path);
  }
  return paths;
}

BallSurveyReport survey_ball(const PolyGerm& f, const BallSurveyConfig& cfg) {
  if (!(cfg.radius > 0) || cfg.samples < 0 || cfg.max_iter < 0) {
    throw Error(ErrorKind::Validation, "survey parameters must be positive");
  }
  const std::size_t n = f.n();
  if (cfg.watched_component && *cfg.watched_component >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "watched component out of range");
  }
  const GermEvaluator ev(f);
  const auto conserved = conserved_components(f);
  std::vector<Verdict> verdicts(static_cast<std::size_t>(cfg.samples));
  std::vector<double> drifts(static_cast<std::size_t>(cfg.samples), 0.0);
  parallel_for(cfg.samples, cfg.threads, [&](long idx) {
    PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(idx));
    std::vector<Complex> z(n);
    for (;;) {
      // Box-Muller directions, radius ~ U^{1/2n}.
      double sq = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double u1 = 1.0 - rng.uniform();
        const double u2 = rng.uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        z[j] = {rad * std::cos(2 * std::numbers::pi * u2), rad * std::sin(2 * std::numbers::pi * u2)};
        sq += std::norm(z[j]);
      }
      const double scale = cfg.radius * std::pow(rng.uniform(), 1.0 / (2.0 * static_cast<double>(n))) / std::sqrt(sq);
      for (auto& c : z) c *= scale;
      if (!cfg.watched_component || std::abs(z[*cfg.watched_component]) >= cfg.min_watched_modulus) break;
    }
    double drift = 0.0;
    double prev = cfg.watched_component ? std::norm(z[*cfg.watched_component]) : 0.0;
    const RunResult res = run_orbit(ev, z, cfg.max_iter, cfg.eps_converge, cfg.r_escape, conserved,
                                    [&](long, const std::vector<Complex>& cur) {
                                      if (!cfg.watched_component) return;
                                      const double now = std::norm(cur[*cfg.watched_component]);
                                      drift = std::max(drift, std::abs(std::sqrt(now / prev) - 1.0));
                                      prev = now;
                                    });
    verdicts[static_cast<std::size_t>(idx)] = res.verdict;
    drifts[static_cast<std::size_t>(idx)] = drift;
  });
  BallSurveyReport rep;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    switch (verdicts[i]) {
      case Verdict::Converged: ++rep.counts.converged; break;
      case Verdict::Escaped: ++rep.counts.escaped; break;
      case Verdict::BoundedNonconvergent: ++rep.counts.bounded_nonconvergent; break;
      case Verdict::BudgetExhausted: ++rep.counts.budget_exhausted; break;
    }
    rep.max_watched_drift = std::max(rep.max_watched_drift, drifts[i]);
  }
  return rep;
}

}  // namespace resgerm
