// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace resgerm {

/// Exponent vector of a monomial z^L (or a resonance multi-index).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {}
  MultiIndex(std::initializer_list<int> entries) : e_(entries) {}

  /// e_j: 1 at position j, 0 elsewhere.
  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  std::span<const int> entries() const noexcept { return e_; }

  /// |L| = sum of entries.
  int degree() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;
  /// True when every nonzero entry lies in positions [0, count).
  bool supported_in_prefix(std::size_t count) const noexcept;
  /// Componentwise a >= b.
  bool dominates(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  MultiIndex& operator-=(const MultiIndex& other);
  MultiIndex scaled(int k) const;
  /// Copy restricted to the first `count` entries.
  MultiIndex prefix(std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

 private:
  std::vector<int> e_;
};

/// Plain lexicographic order on entries (ascending).
struct LexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Graded order used for every term list: total degree ascending, then
/// lexicographic with z_1 > z_2 > ... (so z_1^2 precedes z_1 z_2).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Calls `visit` on every multi-index of length n with total degree exactly d,
/// in descending lexicographic order.
template <class Visit>
void for_each_of_degree(std::size_t n, int d, Visit&& visit) {
  MultiIndex cur(n);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      visit(static_cast<const MultiIndex&>(cur));
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
    cur[pos] = 0;
  };
  if (n == 0) {
    if (d == 0) visit(static_cast<const MultiIndex&>(cur));
    return;
  }
  rec(rec, 0, d);
}

}  // namespace resgerm
