// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "resgerm/polynomial.hpp"
#include "resgerm/spectrum.hpp"

namespace resgerm {

struct GermTerm {
  std::size_t component = 0;  // s (0-based)
  MultiIndex exponents;
  Complex coeff;
  friend bool operator==(const GermTerm&, const GermTerm&) = default;
};

/// F(z) = Diag(lambda) z + nonlinear terms, truncated at total degree l.
class PolyGerm {
 public:
  PolyGerm() = default;
  /// Rejects duplicates, linear or constant terms, degrees above l, bad
  /// components and non-finite coefficients. Exact zeros are dropped.
  PolyGerm(Spectrum spectrum, int truncation_order, const std::vector<GermTerm>& terms);

  static PolyGerm linear(Spectrum spectrum, int truncation_order);
  /// Keeps the nonlinear part of `map` through degree l.
  static PolyGerm from_map(Spectrum spectrum, int truncation_order, const PolyMap& map);

  std::size_t n() const noexcept { return spectrum_.n(); }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  int truncation_order() const noexcept { return l_; }

  /// Terms ordered by component, then graded lex.
  std::vector<GermTerm> terms() const;
  std::size_t term_count() const noexcept;
  const Poly& nonlinear(std::size_t component) const { return comps_.at(component); }
  Complex coefficient(std::size_t component, const MultiIndex& exponents) const;

  /// Full map including Diag(lambda).
  PolyMap to_map() const;
  std::vector<Complex> evaluate(const std::vector<Complex>& z) const;

  friend bool operator==(const PolyGerm&, const PolyGerm&) = default;

 private:
  Spectrum spectrum_;
  int l_ = 1;
  std::vector<Poly> comps_;
};

/// F o G through degree l. The linear part of the result is the product of
/// the two diagonals.
PolyGerm compose_truncate(const PolyGerm& f, const PolyGerm& g, int l);

struct ConjugationRecord {
  PolyGerm transform;          // T, tangent to the identity
  PolyGerm inverse_transform;  // T^-1 through degree l
  std::vector<GermTerm> removed_terms;
};

struct Normalization {
  PolyGerm normal_form;  // T^-1 o F o T
  ConjugationRecord record;
};

/// Degree-by-degree Poincare-Dulac elimination of the non-resonant monomials
/// in components [0, r). Throws SmallDivisor when |lambda^L - lambda_s| < tol
/// for a pair that is not an exact resonance.
Normalization poincare_dulac_normalize(const PolyGerm& f, int l, double small_divisor_tol = 1e-12);

struct NormalFormCheck {
  bool normal = true;
  std::vector<GermTerm> offenders;
};

/// Every term of degree <= l in components [0, r) is e_s + sum k_i P^i.
NormalFormCheck is_normal_form_to_order(const PolyGerm& f, const ResonanceLattice& lattice, int l);

/// Germ induced on {z_{s+1} = ... = z_n = 0}; s == n returns f. Throws
/// NotInvariant when some component j <= s depends on z_{>s} or some
/// component j > s does not vanish on the subspace.
PolyGerm restrict_to_subspace(const PolyGerm& f, std::size_t s);

/// Flattened evaluator for orbit iteration.
class GermEvaluator {
 public:
  explicit GermEvaluator(const PolyGerm& f);

  std::size_t n() const noexcept { return n_; }
  /// out = F(z). `scratch` is resized on first use.
  void apply(const Complex* z, Complex* out, std::vector<Complex>& scratch) const;

 private:
  struct Factor {
    int var;
    int exp;
  };
  struct Term {
    int component;
    Complex coeff;
    int first;
    int count;
  };
  std::size_t n_ = 0;
  int top_ = 0;
  std::vector<Complex> lambda_;
  std::vector<Term> terms_;
  std::vector<Factor> factors_;
};

}  // namespace resgerm
