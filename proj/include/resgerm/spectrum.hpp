// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "resgerm/multi_index.hpp"

namespace resgerm {

using Complex = std::complex<double>;

/// An argument expressed exactly as a fraction of a full turn: 2*pi*num/den.
/// Always stored reduced with 0 <= num < den, so equality is equality in Q/Z.
class RationalTurn {
 public:
  RationalTurn() = default;
  /// Reduces and wraps into [0, 1). Throws Validation when den <= 0.
  RationalTurn(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double radians() const;

  RationalTurn operator+(const RationalTurn& other) const;
  RationalTurn operator-(const RationalTurn& other) const;
  RationalTurn scaled(std::int64_t k) const;

  friend bool operator==(const RationalTurn&, const RationalTurn&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct Eigenvalue {
  double modulus = 1.0;
  RationalTurn turn;

  Complex value() const;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Eigenvalues of dF_O. Indices [0, r) have modulus exactly 1, indices [r, n)
/// have modulus in (0, 1).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<Eigenvalue> eigenvalues, std::size_t r);

  /// n unit eigenvalues equal to 1 (linear part of a tangent-to-identity map).
  static Spectrum identity(std::size_t n);

  std::size_t n() const noexcept { return eigenvalues_.size(); }
  std::size_t r() const noexcept { return r_; }
  const std::vector<Eigenvalue>& eigenvalues() const noexcept { return eigenvalues_; }
  const Eigenvalue& operator[](std::size_t j) const { return eigenvalues_.at(j); }
  Complex lambda(std::size_t j) const { return eigenvalues_.at(j).value(); }
  bool is_identity() const noexcept;

  /// Exact turn of lambda^L.
  RationalTurn turn_of(const MultiIndex& exponents) const;
  /// Floating modulus of lambda^L.
  double modulus_of(const MultiIndex& exponents) const;
  /// lambda^L, with the argument reduced exactly before conversion.
  Complex power(const MultiIndex& exponents) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Eigenvalue> eigenvalues_;
  std::size_t r_ = 0;
};

/// Generators P^1..P^m over N of the resonances in the first r coordinates.
class ResonanceLattice {
 public:
  ResonanceLattice() = default;
  /// Validates support in the first r coordinates, |P^j| >= 1 and linear
  /// independence over Q.
  ResonanceLattice(std::vector<MultiIndex> generators, std::size_t n, std::size_t r,
                   bool root_of_unity = false);

  std::size_t m() const noexcept { return generators_.size(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  const std::vector<MultiIndex>& generators() const noexcept { return generators_; }
  const MultiIndex& generator(std::size_t i) const { return generators_.at(i); }
  /// Some unit eigenvalue has finite order within the detection bound.
  bool root_of_unity() const noexcept { return root_of_unity_; }

  /// k in N^m with sum k_i P^i == D, or nullopt.
  std::optional<std::vector<int>> decompose(const MultiIndex& d) const;
  /// For a term z^L in component s: the weights K with L = e_s + sum K_i P^i
  /// and |K| >= 1, or nullopt when the monomial is not resonant.
  std::optional<std::vector<int>> resonant_weights(std::size_t component,
                                                   const MultiIndex& exponents) const;
  /// sum K_i P^i + e_s as an n-vector.
  MultiIndex monomial(std::size_t component, const std::vector<int>& weights) const;

 private:
  std::vector<MultiIndex> generators_;
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  bool root_of_unity_ = false;
};

struct Resonance {
  std::size_t component = 0;  // j (0-based)
  MultiIndex exponents;       // L
  friend bool operator==(const Resonance&, const Resonance&) = default;
};

/// (j, L) is a resonance: |L| >= 2 and lambda^L = lambda_j. Exact for j < r.
bool is_resonance(const Spectrum& spec, std::size_t j, const MultiIndex& exponents);

/// All resonances (j, L), j < r, 2 <= |L| <= degree_bound, ordered by j then
/// by L in ascending lexicographic order.
std::vector<Resonance> enumerate_resonances(const Spectrum& spec, int degree_bound);

/// Irreducible elements of the monoid {D in N^r : lambda^D = 1} up to the
/// bound, ordered with the standard lex monomial order (z_1 > z_2 > ...).
/// Throws DecompositionFailure when some resonance is not e_j + sum k_i P^i
/// or when the irreducibles are linearly dependent.
ResonanceLattice detect_generators(const Spectrum& spec, int degree_bound);

/// Some unit eigenvalue satisfies lambda_j^q = 1 with q <= degree_bound - 1.
bool has_low_order_root_of_unity(const Spectrum& spec, int degree_bound);

/// Rank over Q of a list of integer vectors.
std::size_t rational_rank(const std::vector<MultiIndex>& vectors);

}  // namespace resgerm
