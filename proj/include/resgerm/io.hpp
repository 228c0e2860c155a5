// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "resgerm/conditions.hpp"
#include "resgerm/dynamics.hpp"

namespace resgerm {

struct GermSpec {
  PolyGerm germ;
  std::vector<std::string> warnings;
};

/// Parses a germ-spec document. Throws Validation.
GermSpec parse_germ_spec(const std::string& text);
/// Reads and parses a file. Throws Error(Validation) on parse problems and
/// std::ios_base::failure when the file cannot be read.
GermSpec load_germ_spec(const std::string& path);

nlohmann::ordered_json germ_to_json(const PolyGerm& germ);
std::string dump(const nlohmann::ordered_json& j);

nlohmann::ordered_json complex_json(Complex c);
nlohmann::ordered_json multi_index_json(const MultiIndex& m);
nlohmann::ordered_json term_json(const GermTerm& t);
nlohmann::ordered_json lattice_json(const ResonanceLattice& lattice);
nlohmann::ordered_json shadow_json(const Shadow& shadow);
nlohmann::ordered_json direction_json(const CharDirection& d);
nlohmann::ordered_json attracting_json(const AttractingReport& r);
nlohmann::ordered_json obstruction_json(const ObstructionReport& r);
nlohmann::ordered_json basin_json(const BasinReport& r);

}  // namespace resgerm
