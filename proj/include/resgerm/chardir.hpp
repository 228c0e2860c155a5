// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "resgerm/roots.hpp"
#include "resgerm/shadow.hpp"

namespace resgerm {

/// First chart: [1:u]. Second chart: [w:1].
enum class Chart { First, Second };
enum class DirectionType { Apparent, Fuchsian, Irregular };

std::string to_string(Chart c);
std::string to_string(DirectionType t);

using Vec2 = std::array<Complex, 2>;

struct ChartPolys {
  Chart chart = Chart::First;
  UPoly g1;
  UPoly g2;
};

struct ClassifyOptions {
  double dicritical_tol = 1e-12;  // relative to max |H coefficient|
  double mu_tol = 1e-9;           // relative, after Taylor shift
  double degenerate_tol = 1e-10;  // relative to max |H coefficient|
  double characteristic_tol = 1e-8;
  double eigenvector_tol = 1e-9;
};

struct CharDirection {
  Chart chart = Chart::First;
  Complex coord;  // u0 in [1:u0] or w0 in [w0:1]
  Vec2 rep{};
  Complex char_value;
  bool degenerate = false;
  DirectionType type = DirectionType::Apparent;
  std::optional<int> mu1;  // nullopt when g1 vanishes identically
  int mu2 = 0;
  Complex index;
  std::vector<Complex> directors;
  std::optional<Vec2> normalized_rep;
  bool near_multiple = false;
};

Vec2 evaluate_H(const Shadow& shadow, const Vec2& v);

/// Throws Dicritical when g2 vanishes identically.
ChartPolys chart_polys(const Shadow& shadow, Chart chart, const ClassifyOptions& options = {});

/// All characteristic directions, sorted by chart and then by (re, im) of the
/// chart coordinate.
std::vector<CharDirection> find_characteristic_directions(const Shadow& shadow,
                                                          const ClassifyOptions& options = {});

/// Classification in an explicit chart.
CharDirection classify_in_chart(const Shadow& shadow, Chart chart, Complex coord,
                                const ClassifyOptions& options = {});
/// Picks the chart with the larger component of v.
CharDirection classify(const Shadow& shadow, const Vec2& v, const ClassifyOptions& options = {});

Complex index_of(const Shadow& shadow, const Vec2& v, const ClassifyOptions& options = {});

/// t v with t^k0 c = -1/k0, t the principal k0-th root. Throws Degenerate.
Vec2 normalize_direction(const Shadow& shadow, const Vec2& v, const ClassifyOptions& options = {});

/// -(k0 a + 1)/k0 for the eigenvalue a of dH(v_n) on C^2 / C v_n. Throws
/// NormalizationFailure when v_n is not an eigenvector of dH(v_n) with
/// eigenvalue -(k0+1)/k0.
std::vector<Complex> directors(const Shadow& shadow, const Vec2& v_n, const ClassifyOptions& options = {});

}  // namespace resgerm
