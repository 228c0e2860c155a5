// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "resgerm/conditions.hpp"
#include "resgerm/dynamics.hpp"

namespace resgerm {

struct AnalysisOptions {
  int degree_bound = 16;
  double small_divisor_tol = 1e-12;
  double mu_tol = 1e-9;
  std::optional<int> order;  // normalization order, default: truncation order
};

struct DirectionAnalysis {
  CharDirection direction;
  bool irregular_nondegenerate = false;
  std::optional<AttractingReport> attracting;
  std::optional<ObstructionReport> obstruction;
};

struct Analysis {
  PolyGerm input;
  PolyGerm germ;  // normal form used downstream
  bool normalized = false;
  std::vector<GermTerm> removed_terms;
  ResonanceLattice lattice;
  std::size_t resonance_count = 0;
  NormalFormCheck normal_form;
  WeightedOrder order;
  std::optional<Shadow> shadow;
  std::vector<DirectionAnalysis> directions;
  bool theorem_applicable = false;
  std::vector<std::string> notes;
};

/// detect -> normalize when needed -> weighted order -> shadow -> directions
/// and predicates (m = 2 only). Throws DecompositionFailure, Dicritical,
/// SmallDivisor.
Analysis run_analysis(const PolyGerm& f, const AnalysisOptions& options);

nlohmann::ordered_json analysis_json(const Analysis& a, const std::vector<std::string>& warnings);
nlohmann::ordered_json classify_json(const Analysis& a, const std::vector<std::string>& warnings);
nlohmann::ordered_json check_json(const Analysis& a, const std::vector<std::string>& warnings);

/// Normal form plus conjugation summary.
nlohmann::ordered_json normalize_json(const PolyGerm& f, const AnalysisOptions& options,
                                      const std::vector<std::string>& warnings);

/// Probe the direction with index cfg.direction of the sorted direction list.
BasinReport run_probe(const Analysis& a, const BasinProbeConfig& cfg);

}  // namespace resgerm
