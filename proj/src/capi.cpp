// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
#include "resgerm/resgerm.h"

#include <cstdlib>
#include <cstring>
#include <ios>
#include <new>
#include <string>

#include "resgerm/errors.hpp"
#include "resgerm/io.hpp"
#include "resgerm/pipeline.hpp"

struct rg_germ {
  resgerm::GermSpec spec;
};

namespace {

thread_local std::string g_last_error;

rg_status fail(rg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

rg_status status_of(resgerm::ErrorKind kind) {
  using resgerm::ErrorKind;
  switch (kind) {
    case ErrorKind::Validation:
    case ErrorKind::IndexOutOfRange:
      return RG_ERROR_VALIDATION;
    case ErrorKind::DecompositionFailure:
    case ErrorKind::Dicritical:
      return RG_ERROR_STRUCTURE;
    case ErrorKind::SmallDivisor:
      return RG_ERROR_SMALL_DIVISOR;
    default:
      return RG_ERROR_DOMAIN;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Body>
rg_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return RG_OK;
  } catch (const resgerm::Error& e) {
    return fail(status_of(e.kind()), std::string(resgerm::to_string(e.kind())) + ": " + e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(RG_ERROR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RG_ERROR_IO, "out of memory");
  } catch (const std::exception& e) {
    return fail(RG_ERROR_VALIDATION, e.what());
  }
}

resgerm::AnalysisOptions convert(const rg_analysis_options* o) {
  resgerm::AnalysisOptions out;
  if (o == nullptr) return out;
  out.degree_bound = o->degree_bound;
  out.small_divisor_tol = o->small_divisor_tol;
  out.mu_tol = o->mu_tol;
  if (o->order > 0) out.order = o->order;
  return out;
}

template <class Build>
rg_status report_call(const rg_germ* germ, char** report, Build&& build) {
  if (germ == nullptr || report == nullptr) return fail(RG_ERROR_INVALID_ARGUMENT, "null argument");
  *report = nullptr;
  return guarded([&] { *report = copy_string(resgerm::dump(build())); });
}

}  // namespace

extern "C" {

const char* rg_version(void) { return RESGERM_VERSION; }

const char* rg_status_string(rg_status status) {
  switch (status) {
    case RG_OK: return "ok";
    case RG_ERROR_IO: return "io error";
    case RG_ERROR_VALIDATION: return "validation error";
    case RG_ERROR_STRUCTURE: return "structural error (dicritical or decomposition failure)";
    case RG_ERROR_SMALL_DIVISOR: return "small divisor";
    case RG_ERROR_DOMAIN: return "domain error";
    case RG_ERROR_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* rg_last_error_message(void) { return g_last_error.c_str(); }

void rg_string_free(char* s) { std::free(s); }

rg_status rg_germ_parse(const char* json, rg_germ** out) {
  if (json == nullptr || out == nullptr) return fail(RG_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new rg_germ{resgerm::parse_germ_spec(json)}; });
}

rg_status rg_germ_load(const char* path, rg_germ** out) {
  if (path == nullptr || out == nullptr) return fail(RG_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new rg_germ{resgerm::load_germ_spec(path)}; });
}

void rg_germ_free(rg_germ* germ) { delete germ; }

rg_status rg_germ_dimension(const rg_germ* germ, size_t* n) {
  if (germ == nullptr || n == nullptr) return fail(RG_ERROR_INVALID_ARGUMENT, "null argument");
  *n = germ->spec.germ.n();
  return RG_OK;
}

rg_status rg_germ_to_json(const rg_germ* germ, char** out) {
  return report_call(germ, out, [&] { return resgerm::germ_to_json(germ->spec.germ); });
}

rg_status rg_germ_warnings_json(const rg_germ* germ, char** out) {
  return report_call(germ, out, [&] { return nlohmann::ordered_json(germ->spec.warnings); });
}

rg_status rg_germ_evaluate(const rg_germ* germ, const double* z, double* out) {
  if (germ == nullptr || z == nullptr || out == nullptr) return fail(RG_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::size_t n = germ->spec.germ.n();
    std::vector<resgerm::Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = {z[2 * i], z[2 * i + 1]};
    const auto w = germ->spec.germ.evaluate(v);
    for (std::size_t i = 0; i < n; ++i) {
      out[2 * i] = w[i].real();
      out[2 * i + 1] = w[i].imag();
    }
  });
}

void rg_analysis_options_default(rg_analysis_options* options) {
  if (options == nullptr) return;
  const resgerm::AnalysisOptions d;
  options->degree_bound = d.degree_bound;
  options->small_divisor_tol = d.small_divisor_tol;
  options->mu_tol = d.mu_tol;
  options->order = 0;
}

void rg_probe_options_default(rg_probe_options* options) {
  if (options == nullptr) return;
  const resgerm::BasinProbeConfig d;
  options->direction = d.direction;
  options->beta = d.beta;
  options->theta = d.theta;
  options->tau = d.tau;
  options->smax = d.smax;
  options->samples = d.samples;
  options->max_iter = d.max_iter;
  options->eps_converge = d.eps_converge;
  options->r_escape = d.r_escape;
  options->seed = d.seed;
  options->stride = d.stride;
  options->threads = d.threads;
  options->trace_samples = d.trace_samples;
  options->trace_dir = nullptr;
}

rg_status rg_analyze(const rg_germ* germ, const rg_analysis_options* options, char** report) {
  return report_call(germ, report, [&] {
    return resgerm::analysis_json(resgerm::run_analysis(germ->spec.germ, convert(options)), germ->spec.warnings);
  });
}

rg_status rg_classify(const rg_germ* germ, const rg_analysis_options* options, char** report) {
  return report_call(germ, report, [&] {
    return resgerm::classify_json(resgerm::run_analysis(germ->spec.germ, convert(options)), germ->spec.warnings);
  });
}

rg_status rg_check(const rg_germ* germ, const rg_analysis_options* options, char** report) {
  return report_call(germ, report, [&] {
    return resgerm::check_json(resgerm::run_analysis(germ->spec.germ, convert(options)), germ->spec.warnings);
  });
}

rg_status rg_normalize(const rg_germ* germ, const rg_analysis_options* options, char** report) {
  return report_call(germ, report, [&] {
    return resgerm::normalize_json(germ->spec.germ, convert(options), germ->spec.warnings);
  });
}

rg_status rg_probe(const rg_germ* germ, const rg_analysis_options* options, const rg_probe_options* probe,
                   char** report) {
  if (probe == nullptr) return fail(RG_ERROR_INVALID_ARGUMENT, "null probe options");
  return report_call(germ, report, [&] {
    resgerm::BasinProbeConfig cfg;
    cfg.direction = probe->direction;
    cfg.beta = probe->beta;
    cfg.theta = probe->theta;
    cfg.tau = probe->tau;
    cfg.smax = probe->smax;
    cfg.samples = probe->samples;
    cfg.max_iter = probe->max_iter;
    cfg.eps_converge = probe->eps_converge;
    cfg.r_escape = probe->r_escape;
    cfg.seed = probe->seed;
    cfg.stride = probe->stride;
    cfg.threads = probe->threads;
    cfg.trace_samples = probe->trace_samples;
    resgerm::validate(cfg);
    const resgerm::Analysis a = resgerm::run_analysis(germ->spec.germ, convert(options));
    const resgerm::BasinReport rep = resgerm::run_probe(a, cfg);
    nlohmann::ordered_json j{{"version", RESGERM_VERSION}};
    const nlohmann::ordered_json body = resgerm::basin_json(rep);
    for (const auto& [key, value] : body.items()) j[key] = value;
    if (probe->trace_dir != nullptr && probe->trace_dir[0] != '\0') {
      const auto paths = resgerm::write_traces(rep, probe->trace_dir);
      j["trace_files"] = paths.size();
    }
    return j;
  });
}

}  // extern "C"
