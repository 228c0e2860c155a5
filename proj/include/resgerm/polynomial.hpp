// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "resgerm/multi_index.hpp"

namespace resgerm {

using Complex = std::complex<double>;

/// Sparse polynomial in n variables. Iteration follows GradedLexLess, which
/// fixes the accumulation order of every derived quantity.
using Poly = std::map<MultiIndex, Complex, GradedLexLess>;

/// Polynomial self-map of C^n with no constant term, linear part included.
struct PolyMap {
  std::size_t n = 0;
  std::vector<Poly> components;

  static PolyMap identity(std::size_t n);
  static PolyMap zero(std::size_t n);
};

/// Drops every monomial of total degree > l and every exact zero.
void truncate(Poly& p, int l);
void truncate(PolyMap& f, int l);

/// a + scale * b.
void add_scaled(Poly& a, const Poly& b, Complex scale = 1.0);

/// a * b, keeping total degree <= l.
Poly multiply(const Poly& a, const Poly& b, int l);

/// Value at z, summed in term order with explicit power tables.
Complex evaluate(const Poly& p, const std::vector<Complex>& z);

/// f o g through total degree l. g must have no constant term.
PolyMap compose(const PolyMap& f, const PolyMap& g, int l);

/// Inverse of id + h (h of order >= 2) through total degree l, from the
/// fixed point K = id - h o K.
PolyMap inverse_tangent_to_identity(const PolyMap& f, int l);

/// max |coefficient| of f - g.
double max_abs_difference(const PolyMap& f, const PolyMap& g);

}  // namespace resgerm
