// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "resgerm/chardir.hpp"

namespace resgerm {

struct ConditionOptions {
  double margin_tol = 1e-10;      // |Re| below this is indeterminate
  double normalized_tol = 1e-8;   // H(v_n) = -(1/k0) v_n, relative
  double degenerate_tol = 1e-10;  // H(v) = 0, relative to max |H coefficient|
  double identity_rel_tol = 1e-9;
  double identity_abs_tol = 1e-12;
};

struct ComponentValue {
  Complex value;
  bool negative_real = false;
  bool indeterminate = false;
  double margin = 0.0;  // |Re value|
};

struct AttractingReport {
  Vec2 v_n{};
  std::vector<ComponentValue> per_component;  // j = 1..r
  bool full = false;
  int partial_order = 0;
  bool indeterminate = false;
};

/// value_j = sum_{|K|=k0} (a_{K,j} / lambda_j) v^K for j < r.
std::vector<Complex> resonant_values(const PolyGerm& f, const Shadow& shadow, const Vec2& v);

/// Throws Degenerate when H(v_n) = 0 and Validation when v_n is not
/// normalized.
AttractingReport attracting_report(const PolyGerm& f, const Shadow& shadow, const Vec2& v_n,
                                   const ConditionOptions& options = {});

bool is_irregular_nondegenerate(const PolyGerm& f, const Shadow& shadow, const Vec2& dir);

struct GeneratorIdentity {
  std::size_t generator = 0;  // j (0-based)
  double value = 0.0;         // sum_s P^j_s w_s
  bool holds = false;
};

struct ObstructionReport {
  Vec2 v{};
  std::vector<double> w;  // s = 1..r
  std::vector<GeneratorIdentity> identities;
  bool identity_holds = true;
  bool all_negative = false;
  std::vector<std::size_t> nonnegative_components;
};

/// Throws NotDegenerate when H(v) != 0.
ObstructionReport degenerate_obstruction(const PolyGerm& f, const Shadow& shadow, const Vec2& v,
                                         const ConditionOptions& options = {});

}  // namespace resgerm
