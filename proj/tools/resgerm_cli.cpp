// Copyright 2026 The resgerm Authors
// SPDX-License-Identifier: Apache-2.0
//
// resgerm: analyze | normalize | classify | check | probe <spec.json>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "resgerm/resgerm.h"

namespace {

struct Common {
  std::string spec;
  std::string out;
  rg_analysis_options analysis{};
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("spec", c.spec, "germ spec JSON file")->required();
  cmd->add_option("--out,-o", c.out, "write the report here instead of stdout");
  cmd->add_option("--degree-bound", c.analysis.degree_bound, "resonance search bound")->capture_default_str();
  cmd->add_option("--tol", c.analysis.small_divisor_tol, "small-divisor threshold")->capture_default_str();
  cmd->add_option("--mu-tol", c.analysis.mu_tol, "relative threshold for vanishing orders")->capture_default_str();
}

int emit(rg_status st, char* report, const std::string& out) {
  if (st != RG_OK) {
    std::fprintf(stderr, "resgerm: %s: %s\n", rg_status_string(st), rg_last_error_message());
    return static_cast<int>(st);
  }
  if (out.empty()) {
    std::fputs(report, stdout);
  } else {
    std::ofstream os(out, std::ios::binary);
    os << report;
    if (!os) {
      std::fprintf(stderr, "resgerm: cannot write %s\n", out.c_str());
      rg_string_free(report);
      return RG_ERROR_IO;
    }
  }
  rg_string_free(report);
  return RG_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-resonant germ analysis: normal forms, parabolic shadows, "
               "characteristic directions and basin probes."};
  app.set_version_flag("--version", std::string(rg_version()));
  app.require_subcommand(1);

  Common common;
  rg_analysis_options_default(&common.analysis);
  rg_probe_options probe{};
  rg_probe_options_default(&probe);
  std::string trace_dir;

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  auto* normalize = app.add_subcommand("normalize", "Poincare-Dulac normal form and conjugation summary");
  auto* classify = app.add_subcommand("classify", "shadow and characteristic directions");
  auto* check = app.add_subcommand("check", "attracting predicates and obstruction reports");
  auto* probe_cmd = app.add_subcommand("probe", "Monte-Carlo basin probe along a direction");
  for (auto* cmd : {analyze, normalize, classify, check, probe_cmd}) add_common(cmd, common);
  normalize->add_option("--order", common.analysis.order, "normalization order (default: truncation order)");

  probe_cmd->add_option("--direction", probe.direction, "index into the sorted direction list")->capture_default_str();
  probe_cmd->add_option("--beta", probe.beta, "decay exponent of the region")->capture_default_str();
  probe_cmd->add_option("--theta", probe.theta, "sector half-width")->capture_default_str();
  probe_cmd->add_option("--tau", probe.tau, "ratio bound")->capture_default_str();
  probe_cmd->add_option("--smax", probe.smax, "largest |s| at the start")->capture_default_str();
  probe_cmd->add_option("--samples", probe.samples)->capture_default_str();
  probe_cmd->add_option("--max-iter", probe.max_iter, "iteration budget per sample")->capture_default_str();
  probe_cmd->add_option("--eps", probe.eps_converge, "convergence radius")->capture_default_str();
  probe_cmd->add_option("--r-escape", probe.r_escape, "escape radius")->capture_default_str();
  probe_cmd->add_option("--seed", probe.seed)->capture_default_str();
  probe_cmd->add_option("--stride", probe.stride, "trace row stride")->capture_default_str();
  probe_cmd->add_option("--threads", probe.threads, "worker threads (0 = all cores)")->capture_default_str();
  probe_cmd->add_option("--trace-dir", trace_dir, "write CSV traces here");
  probe_cmd->add_option("--trace-samples", probe.trace_samples, "number of traced samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : RG_ERROR_INVALID_ARGUMENT;
  }

  rg_germ* germ = nullptr;
  rg_status st = rg_germ_load(common.spec.c_str(), &germ);
  if (st != RG_OK) {
    std::fprintf(stderr, "resgerm: %s: %s\n", rg_status_string(st), rg_last_error_message());
    return static_cast<int>(st);
  }

  char* report = nullptr;
  if (*analyze) {
    st = rg_analyze(germ, &common.analysis, &report);
  } else if (*normalize) {
    st = rg_normalize(germ, &common.analysis, &report);
  } else if (*classify) {
    st = rg_classify(germ, &common.analysis, &report);
  } else if (*check) {
    st = rg_check(germ, &common.analysis, &report);
  } else {
    if (!trace_dir.empty()) {
      probe.trace_dir = trace_dir.c_str();
      if (probe.trace_samples == 0) probe.trace_samples = 1;
    }
    st = rg_probe(germ, &common.analysis, &probe, &report);
  }
  rg_germ_free(germ);
  return emit(st, report, common.out);
}
