// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resgerm/germ.hpp"

namespace resgerm {

/// k0, or "at least l" when no resonant term survives through the
/// truncation order.
struct WeightedOrder {
  std::optional<int> k0;
  int truncation_order = 0;

  bool finite() const noexcept { return k0.has_value(); }
  std::string to_string() const;
};

/// f(u) = u + H(u) on C^m with H homogeneous of degree k0 + 1.
struct Shadow {
  std::size_t m = 0;
  int k0 = 0;
  std::vector<Poly> H;  // polynomials in m variables
  ResonanceLattice lattice;

  std::vector<Complex> evaluate_H(const std::vector<Complex>& u) const;
  Complex coefficient(std::size_t j, const MultiIndex& exponents) const;
  double max_abs_coefficient() const;
};

/// Two-dimensional shadow (Q1, Q2) without an attached germ. Throws
/// Validation unless both are homogeneous of degree k0 + 1.
Shadow planar_shadow(int k0, Poly q1, Poly q2);

/// Throws NotNormalForm when F has non-resonant terms in the first r
/// components.
WeightedOrder weighted_order(const PolyGerm& f, const ResonanceLattice& lattice);

/// u_i = z^{P^i}.
std::vector<Complex> project(const ResonanceLattice& lattice, const std::vector<Complex>& z);

/// H_j(u) = u_j sum_{|K|=k0} (sum_t P^j_t a_{K,t} / lambda_t) u^K.
Shadow parabolic_shadow(const PolyGerm& f, const ResonanceLattice& lattice);

/// |pi(F(z)) - f(pi(z))|_2, arranged so the leading terms cancel
/// algebraically rather than in floating point.
double semiconjugacy_residual(const PolyGerm& f, const Shadow& shadow, const std::vector<Complex>& z);

}  // namespace resgerm
