// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace resgerm {

using Complex = std::complex<double>;

/// Univariate polynomial, coefficients in ascending degree.
using UPoly = std::vector<Complex>;

Complex evaluate(const UPoly& p, Complex x);
UPoly derivative(const UPoly& p);
/// q(t) = p(x0 + t).
UPoly taylor_shift(const UPoly& p, Complex x0);
double max_abs(const UPoly& p);
/// Smallest k with |p_k| > rel_tol * max|p|; nullopt when p is zero.
std::optional<int> vanishing_order(const UPoly& p, double rel_tol);
/// Removes trailing coefficients with |c| <= rel_tol * scale.
void trim_top(UPoly& p, double rel_tol, double scale);

struct Root {
  Complex value;
  int multiplicity = 1;
  /// Another root lies within the near-multiple radius.
  bool near_multiple = false;
};

struct RootOptions {
  double cluster_radius = 1e-6;
  double near_multiple_radius = 1e-3;
  /// Backward-error bound for accepting a merged cluster as a multiple root.
  double multiplicity_tol = 1e-10;
  int newton_iterations = 60;
};

/// Roots of a polynomial with nonzero leading coefficient: companion-matrix
/// eigenvalues, Newton polish, clustering of multiple roots. Sorted by
/// (re, im).
std::vector<Root> polynomial_roots(UPoly p, const RootOptions& options = {});

}  // namespace resgerm
