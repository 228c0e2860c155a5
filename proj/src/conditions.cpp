// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "resgerm/errors.hpp"

namespace resgerm {
namespace {

double norm2(const Vec2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }

double h_scale(const Shadow& shadow) {
  const double s = shadow.max_abs_coefficient();
  return s > 0.0 ? s : 1.0;
}

bool is_zero_H(const Shadow& shadow, const Vec2& v, double tol) {
  const Vec2 h = evaluate_H(shadow, v);
  return norm2(h) < tol * h_scale(shadow) * std::pow(norm2(v), shadow.k0 + 1);
}

}  // namespace

std::vector<Complex> resonant_values(const PolyGerm& f, const Shadow& shadow, const Vec2& v) {
  if (shadow.m != 2) throw Error(ErrorKind::Validation, "predicates need a shadow with m = 2");
  const ResonanceLattice& lat = shadow.lattice;
  const std::size_t r = f.spectrum().r();
  const std::vector<Complex> vv{v[0], v[1]};
  std::vector<Complex> out(r, 0.0);
  for (std::size_t j = 0; j < r; ++j) {
    const Complex lj = f.spectrum().lambda(j);
    for (const auto& [k, a] : f.nonlinear(j)) {
      auto w = lat.resonant_weights(j, k);
      if (!w) continue;
      const MultiIndex kk(*w);
      if (kk.degree() != shadow.k0) continue;
      Complex mono = 1.0;
      for (std::size_t i = 0; i < 2; ++i) {
        for (int e = 0; e < kk[i]; ++e) mono *= vv[i];
      }
      out[j] += a / lj * mono;
    }
  }
  return out;
}

AttractingReport attracting_report(const PolyGerm& f, const Shadow& shadow, const Vec2& v_n,
                                   const ConditionOptions& options) {
  if (is_zero_H(shadow, v_n, options.degenerate_tol)) {
    throw Error(ErrorKind::Degenerate,
                "the attracting predicate is undefined at a degenerate direction; use the "
                "obstruction report instead");
  }
  const Vec2 h = evaluate_H(shadow, v_n);
  const double k0 = shadow.k0;
  const double err = std::hypot(std::abs(h[0] + v_n[0] / k0), std::abs(h[1] + v_n[1] / k0));
  if (err > options.normalized_tol * std::max(1.0, norm2(v_n))) {
    throw Error(ErrorKind::Validation, "direction is not normalized: H(v) != -(1/k0) v");
  }
  AttractingReport rep;
  rep.v_n = v_n;
  bool prefix = true;
  for (const Complex& value : resonant_values(f, shadow, v_n)) {
    ComponentValue cv;
    cv.value = value;
    cv.margin = std::abs(value.real());
    cv.indeterminate = cv.margin < options.margin_tol;
    cv.negative_real = value.real() < 0.0;
    rep.indeterminate |= cv.indeterminate;
    if (prefix && cv.negative_real && !cv.indeterminate) {
      ++rep.partial_order;
    } else {
      prefix = false;
    }
    rep.per_component.push_back(cv);
  }
  rep.full = rep.partial_order == static_cast<int>(rep.per_component.size());
  return rep;
}

bool is_irregular_nondegenerate(const PolyGerm& f, const Shadow& shadow, const Vec2& dir) {
  (void)f;
  const CharDirection d = classify(shadow, dir);
  return d.type == DirectionType::Irregular && !d.degenerate;
}

ObstructionReport degenerate_obstruction(const PolyGerm& f, const Shadow& shadow, const Vec2& v,
                                         const ConditionOptions& options) {
  if (!is_zero_H(shadow, v, options.degenerate_tol)) {
    throw Error(ErrorKind::NotDegenerate, "direction is not degenerate (H(v) != 0)");
  }
  ObstructionReport rep;
  rep.v = v;
  for (const Complex& value : resonant_values(f, shadow, v)) rep.w.push_back(value.real());
  double wmax = 0.0;
  for (double x : rep.w) wmax = std::max(wmax, std::abs(x));
  const double vn = norm2(v);
  const ResonanceLattice& lat = shadow.lattice;
  for (std::size_t j = 0; j < lat.m(); ++j) {
    if (std::abs(v[j]) <= 1e-12 * vn) continue;
    GeneratorIdentity id;
    id.generator = j;
    for (std::size_t s = 0; s < rep.w.size(); ++s) {
      id.value += static_cast<double>(lat.generator(j)[s]) * rep.w[s];
    }
    id.holds = std::abs(id.value) < options.identity_rel_tol * wmax + options.identity_abs_tol;
    rep.identity_holds &= id.holds;
    rep.identities.push_back(id);
  }
  rep.all_negative = !rep.w.empty();
  for (std::size_t s = 0; s < rep.w.size(); ++s) {
    if (rep.w[s] >= -options.margin_tol) {
      rep.all_negative = false;
      rep.nonnegative_components.push_back(s);
    }
  }
  return rep;
}

}  // namespace resgerm
