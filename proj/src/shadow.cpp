// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/shadow.hpp"

#include <algorithm>
#include <cmath>

#include "resgerm/errors.hpp"

namespace resgerm {
namespace {

Complex monomial(const std::vector<Complex>& z, const MultiIndex& e) {
  Complex v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int k = 0; k < e[i]; ++k) v *= z[i];
  }
  return v;
}

void require_finite(const WeightedOrder& w) {
  if (!w.finite()) {
    throw Error(ErrorKind::InfiniteOrder, "weighted order is " + w.to_string() +
                                              "; F is formally linearizable in the first r "
                                              "coordinates through the truncation order");
  }
}

}  // namespace

std::string WeightedOrder::to_string() const {
  if (k0) return std::to_string(*k0);
  return ">= " + std::to_string(truncation_order);
}

std::vector<Complex> Shadow::evaluate_H(const std::vector<Complex>& u) const {
  std::vector<Complex> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = evaluate(H[j], u);
  return out;
}

Complex Shadow::coefficient(std::size_t j, const MultiIndex& exponents) const {
  auto it = H.at(j).find(exponents);
  return it == H[j].end() ? Complex(0.0, 0.0) : it->second;
}

double Shadow::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& p : H) {
    for (const auto& [k, v] : p) best = std::max(best, std::abs(v));
  }
  return best;
}

Shadow planar_shadow(int k0, Poly q1, Poly q2) {
  if (k0 < 1) throw Error(ErrorKind::Validation, "shadow order k0 must be at least 1");
  for (const Poly* q : {&q1, &q2}) {
    for (const auto& [k, v] : *q) {
      if (k.size() != 2 || !k.is_nonnegative() || k.degree() != k0 + 1) {
        throw Error(ErrorKind::Validation,
                    "shadow monomial " + k.to_string() + " is not homogeneous of degree k0+1");
      }
    }
  }
  Shadow s;
  s.m = 2;
  s.k0 = k0;
  s.H = {std::move(q1), std::move(q2)};
  truncate(s.H[0], k0 + 1);
  truncate(s.H[1], k0 + 1);
  return s;
}

WeightedOrder weighted_order(const PolyGerm& f, const ResonanceLattice& lattice) {
  const int l = f.truncation_order();
  const auto check = is_normal_form_to_order(f, lattice, l);
  if (!check.normal) {
    std::string list;
    for (const auto& t : check.offenders) {
      list += (list.empty() ? "" : ", ") + std::string("(") + std::to_string(t.component + 1) +
              ", " + t.exponents.to_string() + ")";
    }
    throw Error(ErrorKind::NotNormalForm, "germ has non-resonant terms " + list);
  }
  WeightedOrder out;
  out.truncation_order = l;
  for (std::size_t s = 0; s < f.spectrum().r(); ++s) {
    for (const auto& [k, c] : f.nonlinear(s)) {
      auto w = lattice.resonant_weights(s, k);
      if (!w) continue;
      int total = 0;
      for (int x : *w) total += x;
      if (!out.k0 || total < *out.k0) out.k0 = total;
    }
  }
  return out;
}

std::vector<Complex> project(const ResonanceLattice& lattice, const std::vector<Complex>& z) {
  if (z.size() != lattice.n()) throw Error(ErrorKind::Validation, "project: wrong point length");
  std::vector<Complex> u(lattice.m());
  for (std::size_t i = 0; i < lattice.m(); ++i) u[i] = monomial(z, lattice.generator(i));
  return u;
}

Shadow parabolic_shadow(const PolyGerm& f, const ResonanceLattice& lattice) {
  const WeightedOrder w = weighted_order(f, lattice);
  require_finite(w);
  Shadow sh;
  sh.m = lattice.m();
  sh.k0 = *w.k0;
  sh.lattice = lattice;
  sh.H.assign(sh.m, Poly{});
  const Spectrum& spec = f.spectrum();
  for (std::size_t t = 0; t < spec.r(); ++t) {
    const Complex lt = spec.lambda(t);
    for (const auto& [k, a] : f.nonlinear(t)) {
      auto weights = lattice.resonant_weights(t, k);
      if (!weights) continue;
      MultiIndex kk(*weights);
      if (kk.degree() != sh.k0) continue;
      const Complex c = a / lt;
      for (std::size_t j = 0; j < sh.m; ++j) {
        const int p = lattice.generator(j)[t];
        if (p == 0) continue;
        sh.H[j][kk + MultiIndex::unit(sh.m, j)] += static_cast<double>(p) * c;
      }
    }
  }
  for (auto& h : sh.H) truncate(h, sh.k0 + 1);
  return sh;
}

double semiconjugacy_residual(const PolyGerm& f, const Shadow& shadow, const std::vector<Complex>& z) {
  const ResonanceLattice& lat = shadow.lattice;
  const Spectrum& spec = f.spectrum();
  const std::size_t n = f.n();
  if (z.size() != n || lat.n() != n) {
    throw Error(ErrorKind::Validation, "semiconjugacy_residual: dimension mismatch");
  }
  const std::vector<Complex> u = project(lat, z);
  const std::vector<Complex> fz = f.evaluate(z);

  // w_i = (F_i(z) - lambda_i z_i) / (lambda_i z_i) split into the weight-k0
  // resonant part (kept symbolically as coefficients c[i][K]) and the rest.
  std::vector<Complex> rest(n, 0.0);
  std::vector<std::map<MultiIndex, Complex, GradedLexLess>> lead(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i] == Complex(0.0, 0.0)) continue;
    const Complex li = spec.lambda(i);
    for (const auto& [k, a] : f.nonlinear(i)) {
      if (i < spec.r()) {
        auto w = lat.resonant_weights(i, k);
        if (w && MultiIndex(*w).degree() == shadow.k0) {
          lead[i][MultiIndex(*w)] += a / li;
          continue;
        }
      }
      if (k[i] >= 1) {
        rest[i] += a / li * monomial(z, k - MultiIndex::unit(n, i));
      } else {
        rest[i] += a * monomial(z, k) / (li * z[i]);
      }
    }
  }
  std::vector<Complex> wfull(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex v = rest[i];
    for (const auto& [kk, c] : lead[i]) v += c * monomial(u, kk);
    wfull[i] = v;
  }

  double sq = 0.0;
  for (std::size_t j = 0; j < lat.m(); ++j) {
    const MultiIndex& p = lat.generator(j);
    bool zero_factor = false;
    for (std::size_t i = 0; i < n; ++i) zero_factor |= (p[i] > 0 && z[i] == Complex(0.0, 0.0));
    Complex res;
    if (zero_factor) {
      res = monomial(fz, p) - u[j] - evaluate(shadow.H[j], u);
    } else {
      Complex lin = 0.0;
      Complex quad = 0.0;
      Complex rest_sum = 0.0;
      std::map<MultiIndex, Complex, GradedLexLess> c;
      for (std::size_t i = 0; i < n; ++i) {
        for (int e = 0; e < p[i]; ++e) {
          quad += (lin + quad) * wfull[i];
          lin += wfull[i];
        }
        if (p[i] == 0) continue;
        rest_sum += static_cast<double>(p[i]) * rest[i];
        for (const auto& [kk, v] : lead[i]) c[kk] += static_cast<double>(p[i]) * v;
      }
      Complex diff = 0.0;
      for (const auto& [kk, v] : c) {
        diff += (v - shadow.coefficient(j, kk + MultiIndex::unit(lat.m(), j))) * monomial(u, kk);
      }
      for (const auto& [e, h] : shadow.H[j]) {
        if (!e.dominates(MultiIndex::unit(lat.m(), j))) {
          diff -= h * monomial(u, e) / u[j];
          continue;
        }
        const MultiIndex kk = e - MultiIndex::unit(lat.m(), j);
        if (!c.count(kk)) diff -= h * monomial(u, kk);
      }
      const Complex lp = spec.power(p) - 1.0;
      res = u[j] * (lp + quad + rest_sum + diff);
    }
    sq += std::norm(res);
  }
  return std::sqrt(sq);
}

}  // namespace resgerm
