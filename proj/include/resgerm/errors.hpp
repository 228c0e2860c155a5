// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resgerm {

enum class ErrorKind {
  Validation,
  IndexOutOfRange,
  DecompositionFailure,
  SmallDivisor,
  NotNormalForm,
  NotInvariant,
  InfiniteOrder,
  Dicritical,
  NotCharacteristic,
  Degenerate,
  NotDegenerate,
  NormalizationFailure,
  ChartSingular,
  NoExponent,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind drives the C API
/// status code and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace resgerm
