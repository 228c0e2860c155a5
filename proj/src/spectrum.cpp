// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "resgerm/errors.hpp"

namespace resgerm {
namespace {

__extension__ using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

RationalTurn make_turn(i128 num, i128 den) {
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num %= den;
  if (num < 0) num += den;
  constexpr i128 kMax = static_cast<i128>(INT64_MAX);
  if (den > kMax) {
    throw Error(ErrorKind::Validation, "rational turn arithmetic overflows 64-bit denominators");
  }
  return RationalTurn(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

RationalTurn::RationalTurn(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorKind::Validation, "turn denominator must be positive");
  const i128 g = gcd128(num, den);
  i128 n = num;
  i128 d = den;
  if (g > 1) {
    n /= g;
    d /= g;
  }
  n %= d;
  if (n < 0) n += d;
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
}

double RationalTurn::radians() const {
  return 2.0 * std::numbers::pi * (static_cast<double>(num_) / static_cast<double>(den_));
}

RationalTurn RationalTurn::operator+(const RationalTurn& o) const {
  const i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
  const i128 d = static_cast<i128>(den_) * o.den_;
  return make_turn(n, d);
}

RationalTurn RationalTurn::operator-(const RationalTurn& o) const {
  const i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
  const i128 d = static_cast<i128>(den_) * o.den_;
  return make_turn(n, d);
}

RationalTurn RationalTurn::scaled(std::int64_t k) const {
  return make_turn(static_cast<i128>(num_) * k, den_);
}

Complex Eigenvalue::value() const { return std::polar(modulus, turn.radians()); }

Spectrum::Spectrum(std::vector<Eigenvalue> eigenvalues, std::size_t r)
    : eigenvalues_(std::move(eigenvalues)), r_(r) {
  if (r_ > eigenvalues_.size()) {
    throw Error(ErrorKind::Validation, "split index r exceeds the dimension");
  }
  for (std::size_t j = 0; j < eigenvalues_.size(); ++j) {
    const double mod = eigenvalues_[j].modulus;
    if (!std::isfinite(mod)) throw Error(ErrorKind::Validation, "eigenvalue modulus must be finite");
    if (j < r_ && mod != 1.0) {
      throw Error(ErrorKind::Validation, "eigenvalue " + std::to_string(j + 1) +
                                             " is in the unit block but its modulus is not 1");
    }
    if (j >= r_ && !(mod > 0.0 && mod < 1.0)) {
      throw Error(ErrorKind::Validation, "eigenvalue " + std::to_string(j + 1) +
                                             " is in the attracting block but its modulus is not in (0,1)");
    }
  }
}

Spectrum Spectrum::identity(std::size_t n) {
  return Spectrum(std::vector<Eigenvalue>(n, Eigenvalue{1.0, RationalTurn(0, 1)}), n);
}

bool Spectrum::is_identity() const noexcept {
  return std::all_of(eigenvalues_.begin(), eigenvalues_.end(),
                     [](const Eigenvalue& e) { return e.modulus == 1.0 && e.turn.is_zero(); });
}

RationalTurn Spectrum::turn_of(const MultiIndex& exponents) const {
  RationalTurn t;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) t = t + eigenvalues_.at(i).turn.scaled(exponents[i]);
  }
  return t;
}

double Spectrum::modulus_of(const MultiIndex& exponents) const {
  double m = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) m *= std::pow(eigenvalues_.at(i).modulus, exponents[i]);
  }
  return m;
}

Complex Spectrum::power(const MultiIndex& exponents) const {
  return std::polar(modulus_of(exponents), turn_of(exponents).radians());
}

// ---------------------------------------------------------------------------

std::size_t rational_rank(const std::vector<MultiIndex>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<i128>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<i128> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = v[c];
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const i128 a = rows[rank][c];
      const i128 b = rows[i][c];
      i128 g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[i][k] = rows[i][k] * a - rows[rank][k] * b;
        g = gcd128(g, rows[i][k]);
      }
      if (g > 1) {
        for (auto& x : rows[i]) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

ResonanceLattice::ResonanceLattice(std::vector<MultiIndex> generators, std::size_t n,
                                   std::size_t r, bool root_of_unity)
    : generators_(std::move(generators)), n_(n), r_(r), root_of_unity_(root_of_unity) {
  if (r_ > n_) throw Error(ErrorKind::Validation, "lattice split index exceeds dimension");
  for (const auto& p : generators_) {
    if (p.size() != n_) throw Error(ErrorKind::Validation, "generator length differs from n");
    if (!p.is_nonnegative()) throw Error(ErrorKind::Validation, "generator has negative entries");
    if (!p.supported_in_prefix(r_)) {
      throw Error(ErrorKind::Validation,
                  "generator " + p.to_string() + " is not supported in the first r coordinates");
    }
    if (p.degree() < 1) throw Error(ErrorKind::Validation, "generator must be nonzero");
  }
  if (rational_rank(generators_) != generators_.size()) {
    throw Error(ErrorKind::Validation, "generators are not linearly independent over Q");
  }
}

std::optional<std::vector<int>> ResonanceLattice::decompose(const MultiIndex& d) const {
  if (d.size() != n_ || !d.is_nonnegative()) return std::nullopt;
  std::vector<int> k(generators_.size(), 0);
  MultiIndex rem = d;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == generators_.size()) return rem.is_zero();
    const MultiIndex& p = generators_[i];
    int kmax = INT32_MAX;
    for (std::size_t c = 0; c < n_; ++c) {
      if (p[c] > 0) kmax = std::min(kmax, rem[c] / p[c]);
    }
    for (int ki = kmax; ki >= 0; --ki) {
      MultiIndex step = p.scaled(ki);
      rem -= step;
      k[i] = ki;
      if (self(self, i + 1)) return true;
      rem += step;
    }
    k[i] = 0;
    return false;
  };
  if (rec(rec, 0)) return k;
  return std::nullopt;
}

std::optional<std::vector<int>> ResonanceLattice::resonant_weights(
    std::size_t component, const MultiIndex& exponents) const {
  if (component >= r_ || exponents.size() != n_) return std::nullopt;
  MultiIndex d = exponents - MultiIndex::unit(n_, component);
  if (!d.is_nonnegative() || d.is_zero()) return std::nullopt;
  auto k = decompose(d);
  if (!k) return std::nullopt;
  int total = 0;
  for (int v : *k) total += v;
  if (total < 1) return std::nullopt;
  return k;
}

MultiIndex ResonanceLattice::monomial(std::size_t component,
                                      const std::vector<int>& weights) const {
  if (weights.size() != generators_.size()) {
    throw Error(ErrorKind::Validation, "weight vector length differs from m");
  }
  MultiIndex out = MultiIndex::unit(n_, component);
  for (std::size_t i = 0; i < weights.size(); ++i) out += generators_[i].scaled(weights[i]);
  return out;
}

// ---------------------------------------------------------------------------

bool is_resonance(const Spectrum& spec, std::size_t j, const MultiIndex& exponents) {
  if (j >= spec.n()) {
    throw Error(ErrorKind::IndexOutOfRange, "component index " + std::to_string(j + 1) +
                                                " out of range 1.." + std::to_string(spec.n()));
  }
  if (exponents.size() != spec.n()) {
    throw Error(ErrorKind::Validation, "multi-index length differs from the dimension");
  }
  if (!exponents.is_nonnegative()) throw Error(ErrorKind::Validation, "negative exponent");
  if (exponents.degree() < 2) return false;
  if (spec.turn_of(exponents) != spec[j].turn) return false;
  if (j < spec.r()) {
    // Unit modulus on the left forces L to live on the unit block.
    return exponents.supported_in_prefix(spec.r());
  }
  const double lhs = std::log(spec.modulus_of(exponents));
  const double rhs = std::log(spec[j].modulus);
  return std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs);
}

namespace {

void require_bound(int degree_bound) {
  if (degree_bound < 2) throw Error(ErrorKind::Validation, "degree bound must be at least 2");
}

MultiIndex pad(const MultiIndex& d, std::size_t n) {
  MultiIndex out(n);
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i];
  return out;
}

}  // namespace

std::vector<Resonance> enumerate_resonances(const Spectrum& spec, int degree_bound) {
  require_bound(degree_bound);
  std::vector<Resonance> out;
  const std::size_t r = spec.r();
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<MultiIndex> found;
    for (int d = 2; d <= degree_bound; ++d) {
      for_each_of_degree(r, d, [&](const MultiIndex& small) {
        MultiIndex l = pad(small, spec.n());
        if (spec.turn_of(l) == spec[j].turn) found.push_back(std::move(l));
      });
    }
    std::sort(found.begin(), found.end(), LexLess{});
    for (auto& l : found) out.push_back(Resonance{j, std::move(l)});
  }
  return out;
}

bool has_low_order_root_of_unity(const Spectrum& spec, int degree_bound) {
  for (std::size_t j = 0; j < spec.r(); ++j) {
    if (spec[j].turn.den() <= degree_bound - 1) return true;
  }
  return false;
}

ResonanceLattice detect_generators(const Spectrum& spec, int degree_bound) {
  require_bound(degree_bound);
  const std::size_t n = spec.n();
  const std::size_t r = spec.r();
  const bool rou = has_low_order_root_of_unity(spec, degree_bound);
  if (r == 0) return ResonanceLattice({}, n, 0, false);

  const auto resonances = enumerate_resonances(spec, degree_bound);
  for (const auto& res : resonances) {
    if (res.exponents[res.component] < 1) {
      throw Error(ErrorKind::DecompositionFailure,
                  "resonance (" + std::to_string(res.component + 1) + ", " +
                      res.exponents.to_string() + ") is not of the form e_j + sum k_i P^i");
    }
  }

  // Relations lambda^D = 1 with 1 <= |D| <= bound - 1, by increasing degree.
  std::vector<MultiIndex> relations;
  for (int d = 1; d <= degree_bound - 1; ++d) {
    for_each_of_degree(r, d, [&](const MultiIndex& small) {
      MultiIndex dd = pad(small, n);
      if (spec.turn_of(dd).is_zero()) relations.push_back(std::move(dd));
    });
  }
  std::set<MultiIndex, LexLess> members(relations.begin(), relations.end());
  std::vector<MultiIndex> irreducible;
  for (const auto& d : relations) {
    bool reducible = false;
    for (const auto& e : relations) {
      if (e.degree() >= d.degree()) break;
      if (d.dominates(e) && members.count(d - e)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(d);
  }
  std::sort(irreducible.begin(), irreducible.end(),
            [](const MultiIndex& a, const MultiIndex& b) { return LexLess{}(b, a); });

  if (rational_rank(irreducible) != irreducible.size()) {
    std::string list;
    for (const auto& p : irreducible) list += (list.empty() ? "" : " ") + p.to_string();
    throw Error(ErrorKind::DecompositionFailure,
                "irreducible relations " + list +
                    " are linearly dependent over Q; the spectrum is not multi-resonant");
  }

  ResonanceLattice lattice(std::move(irreducible), n, r, rou);
  for (const auto& res : resonances) {
    if (!lattice.resonant_weights(res.component, res.exponents)) {
      throw Error(ErrorKind::DecompositionFailure,
                  "resonance (" + std::to_string(res.component + 1) + ", " +
                      res.exponents.to_string() + ") does not decompose over the generators");
    }
  }
  return lattice;
}

}  // namespace resgerm
