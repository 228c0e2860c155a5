// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "resgerm/errors.hpp"

namespace resgerm {

Complex evaluate(const UPoly& p, Complex x) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
  return d;
}

UPoly taylor_shift(const UPoly& p, Complex x0) {
  // Repeated synthetic division.
  UPoly q = p;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) q[k - 1] += x0 * q[k];
  }
  return q;
}

double max_abs(const UPoly& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

std::optional<int> vanishing_order(const UPoly& p, double rel_tol) {
  const double m = max_abs(p);
  if (m == 0.0) return std::nullopt;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (std::abs(p[k]) > rel_tol * m) return static_cast<int>(k);
  }
  return std::nullopt;
}

void trim_top(UPoly& p, double rel_tol, double scale) {
  while (!p.empty() && std::abs(p.back()) <= rel_tol * scale) p.pop_back();
}

namespace {

Complex newton_polish(const UPoly& p, Complex x, int iterations) {
  const UPoly dp = derivative(p);
  double best = std::abs(evaluate(p, x));
  for (int it = 0; it < iterations && best > 0.0; ++it) {
    const Complex d = evaluate(dp, x);
    if (d == Complex(0.0, 0.0)) break;
    const Complex next = x - evaluate(p, x) / d;
    const double r = std::abs(evaluate(p, next));
    if (!(r < best)) break;
    x = next;
    best = r;
  }
  return x;
}

}  // namespace

std::vector<Root> polynomial_roots(UPoly p, const RootOptions& options) {
  while (!p.empty() && p.back() == Complex(0.0, 0.0)) p.pop_back();
  if (p.empty()) throw Error(ErrorKind::Validation, "polynomial_roots: zero polynomial");

  std::vector<Complex> raw;
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == Complex(0.0, 0.0)) ++zeros;
  for (std::size_t k = 0; k < zeros; ++k) raw.push_back(0.0);
  const UPoly reduced(p.begin() + static_cast<long>(zeros), p.end());
  const int deg = static_cast<int>(reduced.size()) - 1;
  if (deg >= 1) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -reduced[static_cast<std::size_t>(i)] / reduced.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    for (int i = 0; i < deg; ++i) {
      raw.push_back(newton_polish(reduced, solver.eigenvalues()(i), options.newton_iterations));
    }
  }

  // Union-find clustering by distance.
  const std::size_t m = raw.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double scale = std::max(1.0, std::max(std::abs(raw[i]), std::abs(raw[j])));
      if (std::abs(raw[i] - raw[j]) < options.cluster_radius * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<Root> roots;
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = find(i);
    if (std::find(seen.begin(), seen.end(), root) != seen.end()) continue;
    seen.push_back(root);
    Complex sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (find(j) == root) {
        sum += raw[j];
        ++count;
      }
    }
    roots.push_back(Root{sum / static_cast<double>(count), count, false});
  }

  // Polished value of a cluster, or nullopt when it is not a numerical
  // multiple root of p.
  auto settle = [&](Complex x, int count) -> std::optional<Complex> {
    if (count == 1) {
      if (zeros > 0 && x == Complex(0.0, 0.0)) return x;
      return newton_polish(p, x, options.newton_iterations);
    }
    if (zeros > 0 && static_cast<std::size_t>(count) == zeros && std::abs(x) < options.cluster_radius) {
      return Complex(0.0, 0.0);
    }
    UPoly d = p;
    for (int k = 1; k < count; ++k) d = derivative(d);
    x = newton_polish(d, x, options.newton_iterations);
    UPoly q = p;
    for (int k = 0; k < count - 1; ++k) {
      double mag = 0.0;
      double pw = 1.0;
      for (const auto& c : q) {
        mag += std::abs(c) * pw;
        pw *= std::abs(x);
      }
      if (std::abs(evaluate(q, x)) > options.multiplicity_tol * mag) return std::nullopt;
      q = derivative(q);
    }
    return x;
  };

  for (auto& r : roots) {
    if (auto x = settle(r.value, r.multiplicity)) r.value = *x;
  }
  // Merge neighbouring clusters that together form a multiple root, which
  // the companion eigenvalues spread by about eps^(1/k).
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < roots.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < roots.size() && !merged; ++j) {
        const double scale = std::max(1.0, std::abs(roots[i].value));
        if (std::abs(roots[i].value - roots[j].value) >= options.near_multiple_radius * scale) continue;
        const int k = roots[i].multiplicity + roots[j].multiplicity;
        const Complex centre = (static_cast<double>(roots[i].multiplicity) * roots[i].value +
                                static_cast<double>(roots[j].multiplicity) * roots[j].value) /
                               static_cast<double>(k);
        if (auto x = settle(centre, k)) {
          roots[i] = Root{*x, k, false};
          roots.erase(roots.begin() + static_cast<long>(j));
          merged = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const double scale = std::max(1.0, std::abs(roots[i].value));
      if (std::abs(roots[i].value - roots[j].value) < options.near_multiple_radius * scale) {
        roots[i].near_multiple = true;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return roots;
}

}  // namespace resgerm
