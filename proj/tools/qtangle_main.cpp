// SPDX-License-Identifier: MIT
// Command-line interface: stage-tangle reports for the search and
// linear-solver pipelines, rank-2 family curves, and self-verification.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtangle/reports.hpp"
#include "qtangle/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qtangle: stage-by-stage entanglement analysis for small quantum registers"};
  app.set_version_flag("--version", qtangle::artifact_version);
  app.require_subcommand(1);

  // grover-table
  auto* gt = app.add_subcommand("grover-table",
                                "Per-stage three-tangle and pairwise concurrences of a "
                                "three-qubit search run");
  int gt_n = 3, gt_target = 7, gt_iterations = -1;
  qtangle::SweepConfig gt_cfg;
  gt->add_option("--n", gt_n, "register size (the table requires 3)");
  gt->add_option("--target", gt_target, "marked basis state");
  gt->add_option("--iterations", gt_iterations, "iteration count (default: optimal)");
  gt->add_option("--output-dir", gt_cfg.output_dir, "report directory");
  gt->add_option("--format", gt_cfg.format, "csv or tsv");

  // hhl-sweep
  auto* hs = app.add_subcommand("hhl-sweep",
                                "Closed-form stage tangles over a grid of b0^2 values");
  qtangle::SweepConfig hs_cfg;
  hs->add_option("--grid-points", hs_cfg.grid_points, "b0^2 grid size (>= 2, default 101)");
  hs->add_option("--c", hs_cfg.c, "rotation constant in (0, 1]");
  hs->add_option("--output-dir", hs_cfg.output_dir, "report directory");
  hs->add_option("--format", hs_cfg.format, "csv or tsv");

  // rank2-curve
  auto* rc = app.add_subcommand("rank2-curve",
                                "Characteristic curve, theta-minimum, and convex hull for the "
                                "rank-2 family");
  double rc_x1 = 0.6;
  int rc_theta_steps = 64, rc_p_steps = 101;
  qtangle::SweepConfig rc_cfg;
  rc->add_option("--x1", rc_x1, "branch coefficient in [0, 1]");
  rc->add_option("--theta-steps", rc_theta_steps, "theta grid size over [0, 2pi)");
  rc->add_option("--p-steps", rc_p_steps, "p grid size over [0, 1]");
  rc->add_option("--output-dir", rc_cfg.output_dir, "report directory");
  rc->add_option("--format", rc_cfg.format, "csv or tsv");

  // verify
  auto* vf = app.add_subcommand("verify",
                                "Cross-validate simulation against closed forms and run the "
                                "invariant suite");
  qtangle::VerifyOptions vf_opt;
  vf->add_option("--grid-points", vf_opt.grid_points, "b0^2 grid size (>= 2, default 101)");
  vf->add_option("--c", vf_opt.c, "rotation constant in (0, 1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gt) return qtangle::cmd_grover_table(gt_n, gt_target, gt_iterations, gt_cfg, std::cout);
    if (*hs) return qtangle::cmd_hhl_sweep(hs_cfg, std::cout);
    if (*rc)
      return qtangle::cmd_rank2_curve(rc_x1, rc_theta_steps, rc_p_steps, rc_cfg, std::cout);
    if (*vf) return qtangle::cmd_verify(vf_opt, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
