// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "resgerm/errors.hpp"

namespace resgerm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::SmallDivisor: return "SmallDivisor";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InfiniteOrder: return "InfiniteOrder";
    case ErrorKind::Dicritical: return "Dicritical";
    case ErrorKind::NotCharacteristic: return "NotCharacteristic";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::ChartSingular: return "ChartSingular";
    case ErrorKind::NoExponent: return "NoExponent";
  }
  return "Unknown";
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  MultiIndex m(n);
  m.e_.at(j) = 1;
  return m;
}

int MultiIndex::degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool MultiIndex::is_nonnegative() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v >= 0; });
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool MultiIndex::supported_in_prefix(std::size_t count) const noexcept {
  for (std::size_t i = count; i < e_.size(); ++i) {
    if (e_[i] != 0) return false;
  }
  return true;
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < other.e_[i]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
  return *this;
}

MultiIndex MultiIndex::scaled(int k) const {
  MultiIndex out(*this);
  for (auto& v : out.e_) v *= k;
  return out;
}

MultiIndex MultiIndex::prefix(std::size_t count) const {
  return MultiIndex(std::vector<int>(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(std::min(count, e_.size()))));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

bool LexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                      b.entries().begin(), b.entries().end());
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  // larger leading exponent first
  return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                      a.entries().begin(), a.entries().end());
}

}  // namespace resgerm
