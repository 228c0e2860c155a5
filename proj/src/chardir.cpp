// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/chardir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "resgerm/errors.hpp"

namespace resgerm {
namespace {

void require_planar(const Shadow& shadow) {
  if (shadow.m != 2 || shadow.H.size() != 2) {
    throw Error(ErrorKind::Validation, "characteristic directions need a shadow with m = 2, got m = " +
                                           std::to_string(shadow.m));
  }
  if (shadow.k0 < 1) throw Error(ErrorKind::InfiniteOrder, "shadow has no finite weighted order");
}

// p(1, u) as a polynomial in u (first) or p(w, 1) in w (second).
UPoly restrict_chart(const Poly& p, Chart chart, int degree) {
  UPoly out(static_cast<std::size_t>(degree) + 1, 0.0);
  for (const auto& [k, v] : p) {
    const int e = chart == Chart::First ? k[1] : k[0];
    out[static_cast<std::size_t>(e)] += v;
  }
  return out;
}

double h_scale(const Shadow& shadow) {
  const double s = shadow.max_abs_coefficient();
  return s > 0.0 ? s : 1.0;
}

Vec2 chart_rep(Chart chart, Complex coord) {
  return chart == Chart::First ? Vec2{Complex(1.0), coord} : Vec2{coord, Complex(1.0)};
}

// Jacobian of H at v.
std::array<std::array<Complex, 2>, 2> jacobian(const Shadow& shadow, const Vec2& v) {
  std::array<std::array<Complex, 2>, 2> a{};
  for (std::size_t j = 0; j < 2; ++j) {
    for (const auto& [k, c] : shadow.H[j]) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (k[i] == 0) continue;
        Complex t = c * static_cast<double>(k[i]);
        for (std::size_t q = 0; q < 2; ++q) {
          const int e = k[q] - (q == i ? 1 : 0);
          for (int x = 0; x < e; ++x) t *= v[q];
        }
        a[j][i] += t;
      }
    }
  }
  return a;
}

}  // namespace

std::string to_string(Chart c) { return c == Chart::First ? "first" : "second"; }

std::string to_string(DirectionType t) {
  switch (t) {
    case DirectionType::Apparent: return "apparent";
    case DirectionType::Fuchsian: return "fuchsian";
    case DirectionType::Irregular: return "irregular";
  }
  return "unknown";
}

Vec2 evaluate_H(const Shadow& shadow, const Vec2& v) {
  const std::vector<Complex> u{v[0], v[1]};
  return {evaluate(shadow.H[0], u), evaluate(shadow.H[1], u)};
}

ChartPolys chart_polys(const Shadow& shadow, Chart chart, const ClassifyOptions& options) {
  require_planar(shadow);
  const int d = shadow.k0 + 1;
  const Poly& a = chart == Chart::First ? shadow.H[0] : shadow.H[1];
  const Poly& b = chart == Chart::First ? shadow.H[1] : shadow.H[0];
  ChartPolys out;
  out.chart = chart;
  out.g1 = restrict_chart(a, chart, d);
  UPoly bb = restrict_chart(b, chart, d);
  out.g2.assign(static_cast<std::size_t>(d) + 2, 0.0);
  for (std::size_t k = 0; k < bb.size(); ++k) out.g2[k] += bb[k];
  for (std::size_t k = 0; k < out.g1.size(); ++k) out.g2[k + 1] -= out.g1[k];
  const double tol = options.dicritical_tol * h_scale(shadow);
  if (std::all_of(out.g2.begin(), out.g2.end(), [&](Complex c) { return std::abs(c) < tol; })) {
    throw Error(ErrorKind::Dicritical, "shadow is dicritical: g2 vanishes identically");
  }
  return out;
}

CharDirection classify_in_chart(const Shadow& shadow, Chart chart, Complex coord,
                                const ClassifyOptions& options) {
  const ChartPolys cp = chart_polys(shadow, chart, options);
  const double scale = h_scale(shadow);
  CharDirection dir;
  dir.chart = chart;
  dir.coord = coord;
  dir.rep = chart_rep(chart, coord);

  const UPoly s2 = taylor_shift(cp.g2, coord);
  const auto mu2 = vanishing_order(s2, options.mu_tol);
  if (!mu2 || *mu2 == 0) {
    throw Error(ErrorKind::NotCharacteristic,
                "direction is not characteristic (g2 does not vanish at the chart coordinate)");
  }
  dir.mu2 = *mu2;
  const UPoly s1 = taylor_shift(cp.g1, coord);
  dir.mu1 = vanishing_order(s1, options.mu_tol);
  if (!dir.mu1) {
    dir.type = DirectionType::Apparent;
  } else if (dir.mu2 < *dir.mu1 + 1) {
    dir.type = DirectionType::Apparent;
  } else if (dir.mu2 == *dir.mu1 + 1) {
    dir.type = DirectionType::Fuchsian;
  } else {
    dir.type = DirectionType::Irregular;
  }

  // Residue of s1(t) / s2(t) at t = 0: coefficient of t^{mu2-1} in s1 / (s2 / t^mu2).
  const UPoly ghat(s2.begin() + dir.mu2, s2.end());
  const int order = dir.mu2;
  UPoly q(static_cast<std::size_t>(order), 0.0);
  for (int k = 0; k < order; ++k) {
    Complex acc = k < static_cast<int>(s1.size()) ? s1[static_cast<std::size_t>(k)] : Complex(0.0);
    for (int i = 1; i <= k && i < static_cast<int>(ghat.size()); ++i) {
      acc -= ghat[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k - i)];
    }
    q[static_cast<std::size_t>(k)] = acc / ghat[0];
  }
  dir.index = q.back();

  dir.char_value = evaluate(cp.g1, coord);
  dir.degenerate = std::abs(dir.char_value) < options.degenerate_tol * scale;
  if (!dir.degenerate) {
    dir.normalized_rep = normalize_direction(shadow, dir.rep, options);
    dir.directors = directors(shadow, *dir.normalized_rep, options);
  }
  return dir;
}

CharDirection classify(const Shadow& shadow, const Vec2& v, const ClassifyOptions& options) {
  require_planar(shadow);
  if (v[0] == Complex(0.0) && v[1] == Complex(0.0)) {
    throw Error(ErrorKind::Validation, "direction must be a nonzero vector");
  }
  const Vec2 h = evaluate_H(shadow, v);
  const double nv = std::hypot(std::abs(v[0]), std::abs(v[1]));
  const double cross = std::abs(v[0] * h[1] - v[1] * h[0]);
  if (cross > options.characteristic_tol * h_scale(shadow) * std::pow(nv, shadow.k0 + 2)) {
    throw Error(ErrorKind::NotCharacteristic, "H(v) is not parallel to v");
  }
  if (std::abs(v[0]) >= std::abs(v[1])) return classify_in_chart(shadow, Chart::First, v[1] / v[0], options);
  return classify_in_chart(shadow, Chart::Second, v[0] / v[1], options);
}

Complex index_of(const Shadow& shadow, const Vec2& v, const ClassifyOptions& options) {
  return classify(shadow, v, options).index;
}

std::vector<CharDirection> find_characteristic_directions(const Shadow& shadow,
                                                          const ClassifyOptions& options) {
  const ChartPolys first = chart_polys(shadow, Chart::First, options);
  const double scale = h_scale(shadow);
  UPoly g2 = first.g2;
  for (auto& c : g2) {
    if (std::abs(c) <= options.dicritical_tol * scale) c = 0.0;
  }
  trim_top(g2, options.dicritical_tol, scale);
  std::vector<CharDirection> out;
  if (g2.size() > 1) {
    for (const Root& root : polynomial_roots(g2)) {
      CharDirection d = classify_in_chart(shadow, Chart::First, root.value, options);
      d.near_multiple = root.near_multiple;
      out.push_back(std::move(d));
    }
  }
  // [0:1] is characteristic iff Q1(0, 1) = 0, i.e. deg g2 drops.
  Complex q1_01 = 0.0;
  for (const auto& [k, c] : shadow.H[0]) {
    if (k[0] == 0) q1_01 += c;
  }
  if (std::abs(q1_01) <= options.dicritical_tol * scale) {
    out.push_back(classify_in_chart(shadow, Chart::Second, 0.0, options));
  }
  return out;
}

Vec2 normalize_direction(const Shadow& shadow, const Vec2& v, const ClassifyOptions& options) {
  require_planar(shadow);
  const Vec2 h = evaluate_H(shadow, v);
  const std::size_t pivot = std::abs(v[0]) >= std::abs(v[1]) ? 0 : 1;
  if (v[pivot] == Complex(0.0)) throw Error(ErrorKind::Validation, "direction must be nonzero");
  const Complex c = h[pivot] / v[pivot];
  const double nv = std::hypot(std::abs(v[0]), std::abs(v[1]));
  if (std::abs(c) < options.degenerate_tol * h_scale(shadow) * std::pow(nv, shadow.k0)) {
    throw Error(ErrorKind::Degenerate, "direction is degenerate (H(v) = 0); it cannot be normalized");
  }
  const int k0 = shadow.k0;
  const Complex target = -1.0 / (static_cast<double>(k0) * c);
  double arg = std::arg(target);
  if (arg <= -std::numbers::pi) arg = std::numbers::pi;
  const Complex t = std::polar(std::pow(std::abs(target), 1.0 / k0), arg / k0);
  return {t * v[0], t * v[1]};
}

std::vector<Complex> directors(const Shadow& shadow, const Vec2& v_n, const ClassifyOptions& options) {
  require_planar(shadow);
  const auto a = jacobian(shadow, v_n);
  const double k0 = shadow.k0;
  const Complex expected = -(k0 + 1.0) / k0;
  const Complex av0 = a[0][0] * v_n[0] + a[0][1] * v_n[1];
  const Complex av1 = a[1][0] * v_n[0] + a[1][1] * v_n[1];
  const double nv = std::hypot(std::abs(v_n[0]), std::abs(v_n[1]));
  const double err = std::hypot(std::abs(av0 - expected * v_n[0]), std::abs(av1 - expected * v_n[1]));
  if (err > options.eigenvector_tol * std::max(1.0, nv)) {
    throw Error(ErrorKind::NormalizationFailure,
                "v_n is not an eigenvector of dH(v_n) with eigenvalue -(k0+1)/k0");
  }
  const Complex quotient = a[0][0] + a[1][1] - expected;
  return {-(k0 * quotient + 1.0) / k0};
}

}  // namespace resgerm
