// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resgerm/chardir.hpp"

namespace resgerm {

enum class Verdict { Converged, Escaped, BoundedNonconvergent, BudgetExhausted };
std::string to_string(Verdict v);

struct IterateConfig {
  long max_iter = 100000;
  double eps_converge = 1e-9;
  double r_escape = 10.0;
  int stride = 10;
  bool store_points = true;
};

struct OrbitPoint {
  long iter = 0;
  std::vector<Complex> z;
};

struct OrbitTrace {
  std::vector<OrbitPoint> points;
  Verdict verdict = Verdict::BoundedNonconvergent;
  long iterations = 0;
  double final_norm = 0.0;
};

/// Iterates until convergence, escape or the budget. At the budget the orbit
/// is bounded_nonconvergent when some component is exactly lambda_s z_s with
/// |lambda_s| = 1 and |z_s| >= eps, budget_exhausted when max|z_j| still
/// decreased over the last quarter of the budget, and bounded_nonconvergent
/// otherwise.
OrbitTrace iterate(const PolyGerm& f, const std::vector<Complex>& z0, const IterateConfig& cfg);

struct BasinProbeConfig {
  std::size_t direction = 0;
  double beta = 0.1;
  double theta = 0.3;
  double tau = 0.1;
  double smax = 1e-3;
  long samples = 200;
  long max_iter = 100000;
  double eps_converge = 1e-9;
  double r_escape = 10.0;
  std::uint64_t seed = 1;
  int stride = 10;
  int threads = 0;  // 0: hardware concurrency
  long trace_samples = 0;
  int burn_in = 10;
};

/// Throws Validation unless all parameters are positive and
/// eps_converge < smax < r_escape.
void validate(const BasinProbeConfig& cfg);

/// Chart data of the probed direction.
struct BasinGeometry {
  Chart chart = Chart::First;
  Complex coord;
  int k0 = 1;
  Complex omega = 1.0;  // Arg(s omega) ~ 0 inside the attracting sector
  bool degenerate = false;
  ResonanceLattice lattice;
};

BasinGeometry basin_geometry(const Shadow& shadow, const CharDirection& dir);

struct ChartCoords {
  Complex s;
  Complex ratio;
};

/// s and u_other / s - coord for u = pi(z). Throws ChartSingular when s = 0.
ChartCoords chart_coords(const BasinGeometry& geom, const std::vector<Complex>& z);

bool membership(const BasinGeometry& geom, const std::vector<Complex>& z, const BasinProbeConfig& cfg);
bool membership(const Shadow& shadow, const CharDirection& dir, const std::vector<Complex>& z,
                const BasinProbeConfig& cfg);

/// Minimal a in {1..10}^n by (|a|, lex) with Q.a > P.a, where P is the
/// generator along the direction. Only [1:0] and [0:1] are supported.
/// Throws NoExponent.
std::vector<int> seed_exponent(const BasinGeometry& geom);

/// z(eps)_j = eps^{a_j} e^{i phi_j} with Arg(s omega) = target_phase.
std::vector<std::vector<Complex>> seed_curve(const BasinGeometry& geom, const std::vector<double>& epsilons,
                                             double target_phase = 0.0);

struct TraceRow {
  long iter = 0;
  std::vector<Complex> z;
  std::vector<double> abs_u;
  double arg_u1 = 0.0;
  bool in_region = false;
  bool decay_ok = false;
};

struct SampleResult {
  std::size_t index = 0;
  std::vector<Complex> z0;
  int resamples = 0;
  bool start_member = false;
  Verdict verdict = Verdict::BoundedNonconvergent;
  long iterations = 0;
  double final_norm = 0.0;
  double decay_rate = 1.0;  // geometric-mean per-step contraction of max|z_j|
  long membership_violations = 0;
  long decay_violations = 0;
  long monotonic_violations = 0;
  std::vector<TraceRow> trace;
};

struct VerdictCounts {
  long converged = 0;
  long escaped = 0;
  long bounded_nonconvergent = 0;
  long budget_exhausted = 0;
};

struct MonitorTotals {
  long membership = 0;
  long decay = 0;
  long monotonic = 0;
  long samples_with_membership = 0;
  long samples_with_decay = 0;
  long samples_with_monotonic = 0;
};

struct DecayStats {
  double mean = 1.0;  // geometric mean over samples of the per-step rate
  double min = 1.0;
  double max = 1.0;
};

struct BasinReport {
  BasinProbeConfig config;
  BasinGeometry geometry;
  std::vector<int> exponent;
  std::vector<std::string> warnings;
  VerdictCounts counts;
  double converged_fraction = 0.0;
  MonitorTotals monitors;
  DecayStats decay;
  std::vector<SampleResult> samples;
};

/// Monte-Carlo probe along `dir`: seed-curve starts, jittered, iterated with
/// the membership, decay and monotonicity monitors. Deterministic in seed.
BasinReport probe_basin(const PolyGerm& f, const Shadow& shadow, const CharDirection& dir,
                        const BasinProbeConfig& cfg, std::vector<std::string> warnings = {});

/// Writes one CSV per traced sample into `dir`; returns the file paths.
std::vector<std::string> write_traces(const BasinReport& report, const std::string& dir);

struct BallSurveyConfig {
  double radius = 0.1;
  long samples = 10000;
  long max_iter = 100000;
  double eps_converge = 1e-9;
  double r_escape = 10.0;
  std::uint64_t seed = 1;
  int threads = 0;
  std::optional<std::size_t> watched_component;
  double min_watched_modulus = 1e-6;
};

struct BallSurveyReport {
  VerdictCounts counts;
  double max_watched_drift = 0.0;  // max per-step relative change of |z_k|
};

/// Uniform points in the ball of C^n, iterated to a verdict.
BallSurveyReport survey_ball(const PolyGerm& f, const BallSurveyConfig& cfg);

}  // namespace resgerm
