// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "resgerm/errors.hpp"
#include "resgerm/io.hpp"
#include "resgerm/pipeline.hpp"

using namespace resgerm;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(RESGERM_SPEC_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSmall = R"({
  "dimension": 2, "r": 2, "truncation_order": 3,
  "eigenvalues": [{"modulus": 1.0, "turn": {"num": 2, "den": 6}},
                  {"modulus": 1.0, "turn": {"num": 2, "den": 3}}],
  "resonant_terms": [{"component": 1, "exponents": [2, 1], "re": 0.5, "im": -0.25}],
  "tail_terms": []
})";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_germ_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Degenerate;
}

}  // namespace

TEST_CASE("germ specs round trip") {
  for (const char* name : {"attracting_family.json", "no_basin.json", "linear.json", "nonresonant_quadratic.json"}) {
    const GermSpec a = parse_germ_spec(read(name));
    const std::string text = dump(germ_to_json(a.germ));
    const GermSpec b = parse_germ_spec(text);
    CHECK(b.germ == a.germ);
    CHECK(dump(germ_to_json(b.germ)) == text);
  }
}

TEST_CASE("turns are reduced with a warning") {
  const GermSpec s = parse_germ_spec(kSmall);
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("reduced to 1/3") != std::string::npos);
  CHECK(s.germ.coefficient(0, MultiIndex{2, 1}) == Complex(0.5, -0.25));
}

TEST_CASE("malformed specs are validation errors") {
  CHECK(kind_of("{") == ErrorKind::Validation);
  CHECK(kind_of("[]") == ErrorKind::Validation);
  std::string bad = kSmall;
  bad.replace(bad.find("\"component\": 1"), 14, "\"component\": 3");
  CHECK(kind_of(bad) == ErrorKind::Validation);
  bad = kSmall;
  bad.replace(bad.find("[2, 1]"), 6, "[2, 1, 0]");
  CHECK(kind_of(bad) == ErrorKind::Validation);
  bad = kSmall;
  bad.replace(bad.find("\"den\": 3"), 8, "\"den\": 0");
  CHECK(kind_of(bad) == ErrorKind::Validation);
  CHECK_THROWS_AS(load_germ_spec("/nonexistent/spec.json"), std::ios_base::failure);
}

TEST_CASE("analysis of the attracting family") {
  const GermSpec s = parse_germ_spec(read("attracting_family.json"));
  const Analysis a = run_analysis(s.germ, AnalysisOptions{});
  CHECK_FALSE(a.normalized);
  CHECK(a.theorem_applicable);
  REQUIRE(a.directions.size() == 2);
  CHECK(a.directions[0].direction.type == DirectionType::Irregular);
  CHECK(a.directions[1].direction.type == DirectionType::Fuchsian);
  const auto j = analysis_json(a, s.warnings);
  CHECK(j.contains("shadow"));
  CHECK(dump(j) == dump(analysis_json(run_analysis(s.germ, AnalysisOptions{}), s.warnings)));
}

TEST_CASE("analysis of the no-basin germ") {
  const GermSpec s = parse_germ_spec(read("no_basin.json"));
  const Analysis a = run_analysis(s.germ, AnalysisOptions{});
  CHECK_FALSE(a.theorem_applicable);
  REQUIRE(a.directions.size() == 2);
  CHECK(a.directions[0].obstruction.has_value());
}

TEST_CASE("analysis normalizes first when needed") {
  const GermSpec s = parse_germ_spec(read("nonresonant_quadratic.json"));
  const Analysis a = run_analysis(s.germ, AnalysisOptions{});
  CHECK(a.normalized);
  CHECK_FALSE(a.normal_form.normal);
  REQUIRE(a.normal_form.offenders.size() == 1);
  CHECK(a.normal_form.offenders[0].exponents == MultiIndex{0, 2, 0});
  CHECK(a.removed_terms.front().exponents == MultiIndex{0, 2, 0});
  CHECK(is_normal_form_to_order(a.germ, a.lattice, a.germ.truncation_order()).normal);
}

TEST_CASE("structural failures surface as typed errors") {
  auto kind_in = [](const char* name) {
    try {
      run_analysis(parse_germ_spec(read(name)).germ, AnalysisOptions{});
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Validation;
  };
  CHECK(kind_in("near_resonant.json") == ErrorKind::SmallDivisor);
  CHECK(kind_in("half_turns.json") == ErrorKind::DecompositionFailure);
}
