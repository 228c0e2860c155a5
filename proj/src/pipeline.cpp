// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/pipeline.hpp"

#include "resgerm/errors.hpp"
#include "resgerm/io.hpp"

namespace resgerm {
namespace {

using ojson = nlohmann::ordered_json;

ojson header(const Analysis& a, const std::vector<std::string>& warnings) {
  ojson j;
  j["version"] = RESGERM_VERSION;
  j["warnings"] = warnings;
  j["notes"] = a.notes;
  j["dimension"] = a.input.n();
  j["r"] = a.input.spectrum().r();
  j["lattice"] = lattice_json(a.lattice);
  j["weighted_order"] = a.order.k0 ? ojson(*a.order.k0) : ojson(a.order.to_string());
  return j;
}

ojson directions_json(const Analysis& a, bool with_predicates) {
  ojson dirs = ojson::array();
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    const auto& d = a.directions[i];
    const ojson body = direction_json(d.direction);
    ojson entry{{"id", i}};
    for (const auto& [key, value] : body.items()) entry[key] = value;
    if (with_predicates) {
      entry["irregular_nondegenerate"] = d.irregular_nondegenerate;
      entry["attracting"] = d.attracting ? attracting_json(*d.attracting) : ojson(nullptr);
      entry["obstruction"] = d.obstruction ? obstruction_json(*d.obstruction) : ojson(nullptr);
    }
    dirs.push_back(entry);
  }
  return dirs;
}

ojson normal_form_json(const Analysis& a) {
  ojson off = ojson::array();
  for (const auto& t : a.normal_form.offenders) off.push_back(term_json(t));
  ojson removed = ojson::array();
  for (const auto& t : a.removed_terms) removed.push_back(term_json(t));
  return ojson{{"input_is_normal", a.normal_form.normal},
               {"offenders", off},
               {"normalized", a.normalized},
               {"removed_terms", removed}};
}

}  // namespace

Analysis run_analysis(const PolyGerm& f, const AnalysisOptions& options) {
  Analysis a;
  a.input = f;
  a.germ = f;
  a.lattice = detect_generators(f.spectrum(), options.degree_bound);
  a.resonance_count = enumerate_resonances(f.spectrum(), options.degree_bound).size();
  if (a.lattice.root_of_unity()) {
    a.notes.push_back("some unit eigenvalue is a root of unity of order <= degree_bound - 1");
  }
  const int l = options.order.value_or(f.truncation_order());
  a.normal_form = is_normal_form_to_order(f, a.lattice, f.truncation_order());
  if (!a.normal_form.normal || l != f.truncation_order()) {
    Normalization nf = poincare_dulac_normalize(f, l, options.small_divisor_tol);
    a.germ = nf.normal_form;
    a.removed_terms = nf.record.removed_terms;
    a.normalized = true;
    a.notes.push_back("input was conjugated to Poincare-Dulac normal form through order " + std::to_string(l));
  }
  a.order = weighted_order(a.germ, a.lattice);
  if (!a.order.finite()) {
    a.notes.push_back("weighted order " + a.order.to_string() + ": no resonant terms through the truncation order");
    return a;
  }
  a.shadow = parabolic_shadow(a.germ, a.lattice);
  if (a.lattice.m() != 2) {
    a.notes.push_back("direction classification needs m = 2; m = " + std::to_string(a.lattice.m()));
    return a;
  }
  ClassifyOptions copts;
  copts.mu_tol = options.mu_tol;
  for (CharDirection& d : find_characteristic_directions(*a.shadow, copts)) {
    DirectionAnalysis da;
    da.irregular_nondegenerate = d.type == DirectionType::Irregular && !d.degenerate;
    if (d.degenerate) {
      da.obstruction = degenerate_obstruction(a.germ, *a.shadow, d.rep);
    } else {
      da.attracting = attracting_report(a.germ, *a.shadow, *d.normalized_rep);
      if (da.irregular_nondegenerate && da.attracting->full && a.germ.spectrum().r() >= 1) {
        a.theorem_applicable = true;
      }
    }
    da.direction = std::move(d);
    a.directions.push_back(std::move(da));
  }
  return a;
}

ojson analysis_json(const Analysis& a, const std::vector<std::string>& warnings) {
  ojson j = header(a, warnings);
  j["resonance_count"] = a.resonance_count;
  j["normal_form"] = normal_form_json(a);
  j["shadow"] = a.shadow ? shadow_json(*a.shadow) : ojson(nullptr);
  j["directions"] = directions_json(a, true);
  j["theorem_applicable"] = a.theorem_applicable;
  return j;
}

ojson classify_json(const Analysis& a, const std::vector<std::string>& warnings) {
  ojson j = header(a, warnings);
  j["shadow"] = a.shadow ? shadow_json(*a.shadow) : ojson(nullptr);
  j["directions"] = directions_json(a, false);
  return j;
}

ojson check_json(const Analysis& a, const std::vector<std::string>& warnings) {
  ojson j = header(a, warnings);
  j["normal_form"] = normal_form_json(a);
  ojson preds = ojson::array();
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    const auto& d = a.directions[i];
    preds.push_back(ojson{{"id", i},
                          {"degenerate", d.direction.degenerate},
                          {"type", to_string(d.direction.type)},
                          {"irregular_nondegenerate", d.irregular_nondegenerate},
                          {"attracting", d.attracting ? attracting_json(*d.attracting) : ojson(nullptr)},
                          {"obstruction", d.obstruction ? obstruction_json(*d.obstruction) : ojson(nullptr)}});
  }
  j["predicates"] = preds;
  j["theorem_applicable"] = a.theorem_applicable;
  return j;
}

ojson normalize_json(const PolyGerm& f, const AnalysisOptions& options, const std::vector<std::string>& warnings) {
  const int l = options.order.value_or(f.truncation_order());
  const Normalization nf = poincare_dulac_normalize(f, l, options.small_divisor_tol);
  const PolyMap check = compose(nf.record.inverse_transform.to_map(),
                                compose(f.to_map(), nf.record.transform.to_map(), l), l);
  PolyMap expected = nf.normal_form.to_map();
  PolyMap got = check;
  truncate(got, l);
  ojson removed = ojson::array();
  for (const auto& t : nf.record.removed_terms) removed.push_back(term_json(t));
  ojson tr = ojson::array();
  for (const auto& t : nf.record.transform.terms()) tr.push_back(term_json(t));
  ojson inv = ojson::array();
  for (const auto& t : nf.record.inverse_transform.terms()) inv.push_back(term_json(t));
  ojson j;
  j["version"] = RESGERM_VERSION;
  j["warnings"] = warnings;
  j["order"] = l;
  j["normal_form"] = germ_to_json(nf.normal_form);
  j["conjugation"] = ojson{{"removed_terms", removed},
                           {"transform_terms", tr},
                           {"inverse_transform_terms", inv},
                           {"max_residual", max_abs_difference(got, expected)}};
  return j;
}

BasinReport run_probe(const Analysis& a, const BasinProbeConfig& cfg) {
  if (!a.shadow) throw Error(ErrorKind::InfiniteOrder, "no shadow: weighted order " + a.order.to_string());
  if (a.lattice.m() != 2) throw Error(ErrorKind::Validation, "probing needs m = 2");
  if (cfg.direction >= a.directions.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "direction index " + std::to_string(cfg.direction) +
                                                " out of range (" + std::to_string(a.directions.size()) +
                                                " directions)");
  }
  const DirectionAnalysis& d = a.directions[cfg.direction];
  std::vector<std::string> warnings;
  if (!d.irregular_nondegenerate) {
    warnings.push_back("direction is not irregular non-degenerate; the theorem does not apply");
  }
  if (!d.attracting || !d.attracting->full) {
    warnings.push_back("germ is not parabolically attracting along the direction");
  }
  if (a.normalized) warnings.push_back("probing the Poincare-Dulac normal form, not the input germ");
  return probe_basin(a.germ, *a.shadow, d.direction, cfg, std::move(warnings));
}

}  // namespace resgerm
