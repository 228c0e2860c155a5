// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/io.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "resgerm/errors.hpp"

namespace resgerm {
namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) invalid(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(where + " is missing \"" + key + "\"");
  return *it;
}

long long as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) invalid(where + " must be an integer");
  return v.get<long long>();
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number()) invalid(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(where + " must be finite");
  return x;
}

std::vector<GermTerm> parse_terms(const json& arr, const std::string& name, std::size_t n,
                                  std::size_t lo, std::size_t hi) {
  if (!arr.is_array()) invalid(name + " must be an array");
  std::vector<GermTerm> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    const json& t = arr[i];
    const long long comp = as_int(field(t, "component", where), where + ".component");
    if (comp < static_cast<long long>(lo) || comp > static_cast<long long>(hi)) {
      invalid(where + ".component = " + std::to_string(comp) + " must lie in " + std::to_string(lo) + ".." +
              std::to_string(hi));
    }
    const json& ex = field(t, "exponents", where);
    if (!ex.is_array() || ex.size() != n) invalid(where + ".exponents must be an array of length " + std::to_string(n));
    MultiIndex e(n);
    for (std::size_t k = 0; k < n; ++k) {
      const long long v = as_int(ex[k], where + ".exponents");
      if (v < 0 || v > 1000000) invalid(where + ".exponents entries must be nonnegative");
      e[k] = static_cast<int>(v);
    }
    const double re = as_real(field(t, "re", where), where + ".re");
    const double im = as_real(field(t, "im", where), where + ".im");
    out.push_back(GermTerm{static_cast<std::size_t>(comp - 1), e, Complex(re, im)});
  }
  return out;
}

}  // namespace

GermSpec parse_germ_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("germ spec is not valid JSON: ") + e.what());
  }
  GermSpec out;
  const long long n = as_int(field(doc, "dimension", "spec"), "dimension");
  if (n < 1 || n > 64) invalid("dimension must lie in 1..64");
  const long long r = as_int(field(doc, "r", "spec"), "r");
  if (r < 0 || r > n) invalid("r must lie in 0..dimension");
  const long long l = as_int(field(doc, "truncation_order", "spec"), "truncation_order");
  if (l < 1 || l > 64) invalid("truncation_order must lie in 1..64");
  const json& eig = field(doc, "eigenvalues", "spec");
  if (!eig.is_array() || eig.size() != static_cast<std::size_t>(n)) {
    invalid("eigenvalues must be an array of length dimension");
  }
  std::vector<Eigenvalue> ev;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    const std::string where = "eigenvalues[" + std::to_string(j) + "]";
    const double mod = as_real(field(eig[j], "modulus", where), where + ".modulus");
    const json& turn = field(eig[j], "turn", where);
    const long long num = as_int(field(turn, "num", where + ".turn"), where + ".turn.num");
    const long long den = as_int(field(turn, "den", where + ".turn"), where + ".turn.den");
    if (den <= 0) invalid(where + ".turn.den must be positive");
    const RationalTurn t(num, den);
    if (t.num() != num || t.den() != den) {
      out.warnings.push_back(where + ": turn " + std::to_string(num) + "/" + std::to_string(den) +
                             " reduced to " + std::to_string(t.num()) + "/" + std::to_string(t.den()));
    }
    ev.push_back(Eigenvalue{mod, t});
  }
  Spectrum spec(std::move(ev), static_cast<std::size_t>(r));
  std::vector<GermTerm> terms;
  if (doc.contains("resonant_terms")) {
    terms = parse_terms(doc["resonant_terms"], "resonant_terms", static_cast<std::size_t>(n), 1,
                        static_cast<std::size_t>(r));
  }
  if (doc.contains("tail_terms")) {
    auto tail = parse_terms(doc["tail_terms"], "tail_terms", static_cast<std::size_t>(n),
                            static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(n));
    terms.insert(terms.end(), tail.begin(), tail.end());
  }
  out.germ = PolyGerm(std::move(spec), static_cast<int>(l), terms);
  return out;
}

GermSpec load_germ_spec(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw std::ios_base::failure("cannot open germ spec " + path);
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_germ_spec(ss.str());
}

ojson complex_json(Complex c) { return ojson{{"re", c.real()}, {"im", c.imag()}}; }

ojson multi_index_json(const MultiIndex& m) {
  ojson a = ojson::array();
  for (int x : m.entries()) a.push_back(x);
  return a;
}

ojson term_json(const GermTerm& t) {
  return ojson{{"component", t.component + 1},
               {"exponents", multi_index_json(t.exponents)},
               {"re", t.coeff.real()},
               {"im", t.coeff.imag()}};
}

ojson germ_to_json(const PolyGerm& germ) {
  ojson j;
  j["dimension"] = germ.n();
  j["r"] = germ.spectrum().r();
  ojson eig = ojson::array();
  for (const auto& e : germ.spectrum().eigenvalues()) {
    eig.push_back(ojson{{"modulus", e.modulus}, {"turn", ojson{{"num", e.turn.num()}, {"den", e.turn.den()}}}});
  }
  j["eigenvalues"] = eig;
  ojson res = ojson::array();
  ojson tail = ojson::array();
  for (const auto& t : germ.terms()) {
    (t.component < germ.spectrum().r() ? res : tail).push_back(term_json(t));
  }
  j["resonant_terms"] = res;
  j["tail_terms"] = tail;
  j["truncation_order"] = germ.truncation_order();
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson lattice_json(const ResonanceLattice& lattice) {
  ojson gens = ojson::array();
  for (const auto& g : lattice.generators()) gens.push_back(multi_index_json(g));
  return ojson{{"m", lattice.m()}, {"generators", gens}, {"root_of_unity", lattice.root_of_unity()}};
}

ojson shadow_json(const Shadow& shadow) {
  ojson comps = ojson::array();
  for (std::size_t j = 0; j < shadow.H.size(); ++j) {
    ojson terms = ojson::array();
    for (const auto& [k, v] : shadow.H[j]) {
      terms.push_back(ojson{{"exponents", multi_index_json(k)}, {"re", v.real()}, {"im", v.imag()}});
    }
    comps.push_back(ojson{{"component", j + 1}, {"terms", terms}});
  }
  return ojson{{"m", shadow.m}, {"k0", shadow.k0}, {"H", comps}};
}

ojson direction_json(const CharDirection& d) {
  ojson j;
  j["chart"] = to_string(d.chart);
  j["coordinate"] = complex_json(d.coord);
  j["representative"] = ojson::array({complex_json(d.rep[0]), complex_json(d.rep[1])});
  j["char_value"] = complex_json(d.char_value);
  j["degenerate"] = d.degenerate;
  j["type"] = to_string(d.type);
  j["mu1"] = d.mu1 ? ojson(*d.mu1) : ojson(nullptr);
  j["mu2"] = d.mu2;
  j["index"] = complex_json(d.index);
  ojson dirs = ojson::array();
  for (const auto& x : d.directors) dirs.push_back(complex_json(x));
  j["directors"] = dirs;
  j["normalized_representative"] =
      d.normalized_rep ? ojson::array({complex_json((*d.normalized_rep)[0]), complex_json((*d.normalized_rep)[1])})
                       : ojson(nullptr);
  j["near_multiple"] = d.near_multiple;
  // Hakim's condition is Re(director) > 0; the printed inequality
  // Re(index) > 1/mu1 is only meaningful for mu1 >= 1.
  if (!d.directors.empty()) {
    j["hakim_condition"] = d.directors.front().real() > 0.0;
  } else {
    j["hakim_condition"] = nullptr;
  }
  if (d.mu1 && *d.mu1 >= 1) {
    j["index_condition"] = d.index.real() > 1.0 / static_cast<double>(*d.mu1);
  } else {
    j["index_condition"] = nullptr;
  }
  return j;
}

ojson attracting_json(const AttractingReport& r) {
  ojson comps = ojson::array();
  for (std::size_t j = 0; j < r.per_component.size(); ++j) {
    const auto& c = r.per_component[j];
    comps.push_back(ojson{{"component", j + 1},
                          {"value", complex_json(c.value)},
                          {"negative_real", c.negative_real},
                          {"margin", c.margin},
                          {"indeterminate", c.indeterminate}});
  }
  return ojson{{"normalized_direction", ojson::array({complex_json(r.v_n[0]), complex_json(r.v_n[1])})},
               {"per_component", comps},
               {"full", r.full},
               {"partial_order", r.partial_order},
               {"indeterminate", r.indeterminate}};
}

ojson obstruction_json(const ObstructionReport& r) {
  ojson w = ojson::array();
  for (double x : r.w) w.push_back(x);
  ojson ids = ojson::array();
  for (const auto& id : r.identities) {
    ids.push_back(ojson{{"generator", id.generator + 1}, {"value", id.value}, {"holds", id.holds}});
  }
  ojson nonneg = ojson::array();
  for (std::size_t s : r.nonnegative_components) nonneg.push_back(s + 1);
  return ojson{{"direction", ojson::array({complex_json(r.v[0]), complex_json(r.v[1])})},
               {"w", w},
               {"identities", ids},
               {"identity_holds", r.identity_holds},
               {"all_negative", r.all_negative},
               {"nonnegative_components", nonneg},
               {"parabolically_attracting", false}};
}

ojson basin_json(const BasinReport& r) {
  const BasinProbeConfig& c = r.config;
  ojson cfg{{"direction", c.direction}, {"beta", c.beta},          {"theta", c.theta},
            {"tau", c.tau},             {"smax", c.smax},          {"samples", c.samples},
            {"max_iter", c.max_iter},   {"eps_converge", c.eps_converge}, {"r_escape", c.r_escape},
            {"seed", c.seed},           {"stride", c.stride},      {"trace_samples", c.trace_samples},
            {"burn_in", c.burn_in}};
  ojson geom{{"chart", to_string(r.geometry.chart)},
             {"coordinate", complex_json(r.geometry.coord)},
             {"k0", r.geometry.k0},
             {"omega", complex_json(r.geometry.omega)},
             {"degenerate", r.geometry.degenerate}};
  ojson exponent = ojson::array();
  for (int a : r.exponent) exponent.push_back(a);
  ojson samples = ojson::array();
  for (const auto& s : r.samples) {
    ojson z0 = ojson::array();
    for (const auto& c0 : s.z0) z0.push_back(complex_json(c0));
    samples.push_back(ojson{{"index", s.index},
                            {"z0", z0},
                            {"resamples", s.resamples},
                            {"start_member", s.start_member},
                            {"verdict", to_string(s.verdict)},
                            {"iterations", s.iterations},
                            {"final_norm", std::isfinite(s.final_norm) ? ojson(s.final_norm) : ojson(nullptr)},
                            {"decay_rate", s.decay_rate},
                            {"membership_violations", s.membership_violations},
                            {"decay_violations", s.decay_violations},
                            {"monotonic_violations", s.monotonic_violations}});
  }
  return ojson{
      {"config", cfg},
      {"geometry", geom},
      {"exponent", exponent},
      {"warnings", r.warnings},
      {"counts",
       ojson{{"converged", r.counts.converged},
             {"escaped", r.counts.escaped},
             {"bounded_nonconvergent", r.counts.bounded_nonconvergent},
             {"budget_exhausted", r.counts.budget_exhausted}}},
      {"converged_fraction", r.converged_fraction},
      {"monitor_violations",
       ojson{{"membership", r.monitors.membership},
             {"decay", r.monitors.decay},
             {"monotonic", r.monitors.monotonic},
             {"samples_with_membership", r.monitors.samples_with_membership},
             {"samples_with_decay", r.monitors.samples_with_decay},
             {"samples_with_monotonic", r.monitors.samples_with_monotonic}}},
      {"decay", ojson{{"geometric_mean_rate", r.decay.mean}, {"min_rate", r.decay.min}, {"max_rate", r.decay.max}}},
      {"samples", samples}};
}

}  // namespace resgerm
