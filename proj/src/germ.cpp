// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/germ.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "resgerm/errors.hpp"

namespace resgerm {
namespace {

std::string describe(const GermTerm& t) {
  return "(" + std::to_string(t.component + 1) + ", " + t.exponents.to_string() + ")";
}

inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

PolyGerm::PolyGerm(Spectrum spectrum, int truncation_order, const std::vector<GermTerm>& terms)
    : spectrum_(std::move(spectrum)), l_(truncation_order), comps_(spectrum_.n()) {
  if (l_ < 1) throw Error(ErrorKind::Validation, "truncation order must be at least 1");
  const std::size_t n = spectrum_.n();
  for (const auto& t : terms) {
    if (t.component >= n) {
      throw Error(ErrorKind::Validation, "term component " + std::to_string(t.component + 1) +
                                             " out of range 1.." + std::to_string(n));
    }
    if (t.exponents.size() != n) {
      throw Error(ErrorKind::Validation, "term " + describe(t) + " has the wrong length");
    }
    if (!t.exponents.is_nonnegative()) {
      throw Error(ErrorKind::Validation, "term " + describe(t) + " has a negative exponent");
    }
    const int d = t.exponents.degree();
    if (d < 2) {
      throw Error(ErrorKind::Validation,
                  "term " + describe(t) +
                      " is constant or linear; the linear part is fixed to Diag(lambda)");
    }
    if (d > l_) {
      throw Error(ErrorKind::Validation, "term " + describe(t) + " exceeds the truncation order " +
                                             std::to_string(l_));
    }
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
      throw Error(ErrorKind::Validation, "term " + describe(t) + " has a non-finite coefficient");
    }
    auto& comp = comps_[t.component];
    if (comp.count(t.exponents)) {
      throw Error(ErrorKind::Validation, "duplicate term " + describe(t));
    }
    if (t.coeff != Complex(0.0, 0.0)) comp.emplace(t.exponents, t.coeff);
  }
}

PolyGerm PolyGerm::linear(Spectrum spectrum, int truncation_order) {
  return PolyGerm(std::move(spectrum), truncation_order, {});
}

PolyGerm PolyGerm::from_map(Spectrum spectrum, int truncation_order, const PolyMap& map) {
  PolyGerm g = linear(std::move(spectrum), truncation_order);
  if (map.n != g.n()) throw Error(ErrorKind::Validation, "from_map: dimension mismatch");
  for (std::size_t s = 0; s < map.n; ++s) {
    for (const auto& [k, v] : map.components[s]) {
      const int d = k.degree();
      if (d < 2 || d > truncation_order || v == Complex(0.0, 0.0)) continue;
      g.comps_[s].emplace(k, v);
    }
  }
  return g;
}

std::vector<GermTerm> PolyGerm::terms() const {
  std::vector<GermTerm> out;
  out.reserve(term_count());
  for (std::size_t s = 0; s < comps_.size(); ++s) {
    for (const auto& [k, v] : comps_[s]) out.push_back(GermTerm{s, k, v});
  }
  return out;
}

std::size_t PolyGerm::term_count() const noexcept {
  std::size_t c = 0;
  for (const auto& p : comps_) c += p.size();
  return c;
}

Complex PolyGerm::coefficient(std::size_t component, const MultiIndex& exponents) const {
  const auto& p = comps_.at(component);
  auto it = p.find(exponents);
  return it == p.end() ? Complex(0.0, 0.0) : it->second;
}

PolyMap PolyGerm::to_map() const {
  const std::size_t n = this->n();
  PolyMap f = PolyMap::zero(n);
  for (std::size_t s = 0; s < n; ++s) {
    f.components[s] = comps_[s];
    f.components[s][MultiIndex::unit(n, s)] = spectrum_.lambda(s);
  }
  return f;
}

std::vector<Complex> PolyGerm::evaluate(const std::vector<Complex>& z) const {
  if (z.size() != n()) throw Error(ErrorKind::Validation, "evaluate: point has the wrong length");
  std::vector<Complex> out(n());
  for (std::size_t s = 0; s < n(); ++s) {
    out[s] = spectrum_.lambda(s) * z[s] + resgerm::evaluate(comps_[s], z);
  }
  return out;
}

// ---------------------------------------------------------------------------

PolyGerm compose_truncate(const PolyGerm& f, const PolyGerm& g, int l) {
  if (f.n() != g.n()) throw Error(ErrorKind::Validation, "compose_truncate: dimension mismatch");
  std::vector<Eigenvalue> ev;
  for (std::size_t i = 0; i < f.n(); ++i) {
    ev.push_back(Eigenvalue{f.spectrum()[i].modulus * g.spectrum()[i].modulus,
                            f.spectrum()[i].turn + g.spectrum()[i].turn});
  }
  Spectrum spec(std::move(ev), f.spectrum().r());
  return PolyGerm::from_map(std::move(spec), l, compose(f.to_map(), g.to_map(), l));
}

Normalization poincare_dulac_normalize(const PolyGerm& f, int l, double small_divisor_tol) {
  if (l < 2) throw Error(ErrorKind::Validation, "normalization order must be at least 2");
  const Spectrum& spec = f.spectrum();
  const std::size_t n = f.n();
  const std::size_t r = spec.r();

  PolyMap current = f.to_map();
  truncate(current, l);
  PolyMap transform = PolyMap::identity(n);
  PolyMap inverse = PolyMap::identity(n);
  std::vector<GermTerm> removed;

  for (int d = 2; d <= l; ++d) {
    PolyMap h = PolyMap::identity(n);
    std::vector<GermTerm> killed;
    for (std::size_t s = 0; s < r; ++s) {
      for (const auto& [k, c] : current.components[s]) {
        if (k.degree() != d) continue;
        if (is_resonance(spec, s, k)) continue;
        const Complex divisor = spec.power(k) - spec.lambda(s);
        if (std::abs(divisor) < small_divisor_tol) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.3e", std::abs(divisor));
          throw Error(ErrorKind::SmallDivisor, "small divisor |lambda^L - lambda_s| = " +
                                                   std::string(buf) + " at (s, L) = (" +
                                                   std::to_string(s + 1) + ", " + k.to_string() +
                                                   ") which is not an exact resonance");
        }
        h.components[s][k] = c / divisor;
        killed.push_back(GermTerm{s, k, c});
      }
    }
    if (killed.empty()) continue;
    PolyMap h_inv = inverse_tangent_to_identity(h, l);
    current = compose(h_inv, compose(current, h, l), l);
    for (const auto& t : killed) current.components[t.component].erase(t.exponents);
    transform = compose(transform, h, l);
    inverse = compose(h_inv, inverse, l);
    removed.insert(removed.end(), killed.begin(), killed.end());
  }

  Spectrum id = Spectrum::identity(n);
  Normalization out{PolyGerm::from_map(spec, l, current),
                    ConjugationRecord{PolyGerm::from_map(id, l, transform),
                                      PolyGerm::from_map(id, l, inverse), std::move(removed)}};
  return out;
}

NormalFormCheck is_normal_form_to_order(const PolyGerm& f, const ResonanceLattice& lattice, int l) {
  NormalFormCheck out;
  const std::size_t r = f.spectrum().r();
  for (std::size_t s = 0; s < r; ++s) {
    for (const auto& [k, c] : f.nonlinear(s)) {
      if (k.degree() > l) continue;
      if (!lattice.resonant_weights(s, k)) {
        out.normal = false;
        out.offenders.push_back(GermTerm{s, k, c});
      }
    }
  }
  return out;
}

PolyGerm restrict_to_subspace(const PolyGerm& f, std::size_t s) {
  const std::size_t n = f.n();
  if (s < 1 || s > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "subspace dimension " + std::to_string(s) + " out of range 1.." + std::to_string(n));
  }
  if (s == n) return f;
  std::vector<std::string> bad;
  for (const auto& t : f.terms()) {
    const bool inside = t.exponents.supported_in_prefix(s);
    if ((t.component < s && !inside) || (t.component >= s && inside)) bad.push_back(describe(t));
  }
  if (!bad.empty()) {
    std::string list;
    for (const auto& b : bad) list += (list.empty() ? "" : ", ") + b;
    throw Error(ErrorKind::NotInvariant,
                "subspace {z_j = 0, j > " + std::to_string(s) + "} is not invariant: " + list);
  }
  std::vector<Eigenvalue> ev(f.spectrum().eigenvalues().begin(),
                             f.spectrum().eigenvalues().begin() + static_cast<long>(s));
  Spectrum spec(std::move(ev), std::min(s, f.spectrum().r()));
  std::vector<GermTerm> terms;
  for (const auto& t : f.terms()) {
    if (t.component < s) terms.push_back(GermTerm{t.component, t.exponents.prefix(s), t.coeff});
  }
  return PolyGerm(std::move(spec), f.truncation_order(), terms);
}

// ---------------------------------------------------------------------------

GermEvaluator::GermEvaluator(const PolyGerm& f) : n_(f.n()) {
  for (std::size_t s = 0; s < n_; ++s) lambda_.push_back(f.spectrum().lambda(s));
  for (const auto& t : f.terms()) {
    Term term{static_cast<int>(t.component), t.coeff, static_cast<int>(factors_.size()), 0};
    for (std::size_t i = 0; i < n_; ++i) {
      if (t.exponents[i] == 0) continue;
      factors_.push_back(Factor{static_cast<int>(i), t.exponents[i]});
      top_ = std::max(top_, t.exponents[i]);
      ++term.count;
    }
    terms_.push_back(term);
  }
}

void GermEvaluator::apply(const Complex* z, Complex* out, std::vector<Complex>& scratch) const {
  const std::size_t stride = static_cast<std::size_t>(top_) + 1;
  if (scratch.size() < n_ * stride) scratch.resize(n_ * stride);
  for (std::size_t i = 0; i < n_; ++i) {
    Complex* row = scratch.data() + i * stride;
    row[0] = 1.0;
    for (int e = 1; e <= top_; ++e) row[e] = cmul(row[e - 1], z[i]);
    out[i] = cmul(lambda_[i], z[i]);
  }
  for (const auto& t : terms_) {
    Complex v = t.coeff;
    for (int k = 0; k < t.count; ++k) {
      const Factor& fa = factors_[static_cast<std::size_t>(t.first + k)];
      v = cmul(v, scratch[static_cast<std::size_t>(fa.var) * stride + static_cast<std::size_t>(fa.exp)]);
    }
    out[t.component] += v;
  }
}

}  // namespace resgerm
