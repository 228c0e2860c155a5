// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "resgerm/errors.hpp"

namespace resgerm {

PolyMap PolyMap::identity(std::size_t n) {
  PolyMap f = zero(n);
  for (std::size_t i = 0; i < n; ++i) f.components[i][MultiIndex::unit(n, i)] = 1.0;
  return f;
}

PolyMap PolyMap::zero(std::size_t n) {
  PolyMap f;
  f.n = n;
  f.components.assign(n, Poly{});
  return f;
}

void truncate(Poly& p, int l) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->first.degree() > l || it->second == Complex(0.0, 0.0)) {
      it = p.erase(it);
    } else {
      ++it;
    }
  }
}

void truncate(PolyMap& f, int l) {
  for (auto& c : f.components) truncate(c, l);
}

void add_scaled(Poly& a, const Poly& b, Complex scale) {
  for (const auto& [k, v] : b) a[k] += scale * v;
}

Poly multiply(const Poly& a, const Poly& b, int l) {
  Poly out;
  for (const auto& [ka, va] : a) {
    const int da = ka.degree();
    for (const auto& [kb, vb] : b) {
      if (da + kb.degree() > l) continue;
      out[ka + kb] += va * vb;
    }
  }
  return out;
}

Complex evaluate(const Poly& p, const std::vector<Complex>& z) {
  int top = 0;
  for (const auto& [k, v] : p) {
    for (std::size_t i = 0; i < k.size(); ++i) top = std::max(top, k[i]);
  }
  std::vector<std::vector<Complex>> pw(z.size(), std::vector<Complex>(top + 1, 1.0));
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (int e = 1; e <= top; ++e) pw[i][e] = pw[i][e - 1] * z[i];
  }
  Complex acc = 0.0;
  for (const auto& [k, v] : p) {
    Complex t = v;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] != 0) t *= pw[i][k[i]];
    }
    acc += t;
  }
  return acc;
}

PolyMap compose(const PolyMap& f, const PolyMap& g, int l) {
  if (f.n != g.n) throw Error(ErrorKind::Validation, "compose: dimension mismatch");
  const std::size_t n = f.n;
  for (const auto& gi : g.components) {
    for (const auto& [k, v] : gi) {
      if (k.degree() == 0 && v != Complex(0.0, 0.0)) {
        throw Error(ErrorKind::Validation, "compose: inner map has a constant term");
      }
    }
  }
  // powers[i][e] = g_i^e truncated at l.
  std::vector<std::vector<Poly>> powers(n);
  Poly one;
  one[MultiIndex(n)] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(one);
    powers[i].push_back(g.components[i]);
    truncate(powers[i][1], l);
  }
  auto power = [&](std::size_t i, int e) -> const Poly& {
    while (static_cast<int>(powers[i].size()) <= e) {
      Poly next = multiply(powers[i].back(), powers[i][1], l);
      truncate(next, l);
      powers[i].push_back(std::move(next));
    }
    return powers[i][e];
  };

  PolyMap out = PolyMap::zero(n);
  std::map<MultiIndex, Poly, GradedLexLess> monomials;
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& [k, c] : f.components[s]) {
      if (k.degree() > l) continue;
      auto it = monomials.find(k);
      if (it == monomials.end()) {
        Poly m = one;
        for (std::size_t i = 0; i < n; ++i) {
          if (k[i] == 0) continue;
          m = multiply(m, power(i, k[i]), l);
        }
        it = monomials.emplace(k, std::move(m)).first;
      }
      add_scaled(out.components[s], it->second, c);
    }
    truncate(out.components[s], l);
  }
  return out;
}

PolyMap inverse_tangent_to_identity(const PolyMap& f, int l) {
  const std::size_t n = f.n;
  PolyMap h = f;
  for (std::size_t j = 0; j < n; ++j) {
    const MultiIndex e = MultiIndex::unit(n, j);
    for (const auto& [k, v] : h.components[j]) {
      if (k.degree() > 1 || v == Complex(0.0, 0.0)) continue;
      if (k != e || v != Complex(1.0, 0.0)) {
        throw Error(ErrorKind::Validation, "inverse: map is not tangent to the identity");
      }
    }
    auto it = h.components[j].find(e);
    if (it == h.components[j].end() || it->second != Complex(1.0, 0.0)) {
      throw Error(ErrorKind::Validation, "inverse: map is not tangent to the identity");
    }
    h.components[j].erase(it);
  }
  PolyMap k = PolyMap::identity(n);
  for (int iter = 2; iter <= l; ++iter) {
    PolyMap hk = compose(h, k, l);
    PolyMap next = PolyMap::identity(n);
    for (std::size_t i = 0; i < n; ++i) add_scaled(next.components[i], hk.components[i], -1.0);
    truncate(next, l);
    k = std::move(next);
  }
  return k;
}

double max_abs_difference(const PolyMap& f, const PolyMap& g) {
  double worst = 0.0;
  const std::size_t n = std::max(f.n, g.n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly d = i < f.components.size() ? f.components[i] : Poly{};
    if (i < g.components.size()) add_scaled(d, g.components[i], -1.0);
    for (const auto& [k, v] : d) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace resgerm
