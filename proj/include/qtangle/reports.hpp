// SPDX-License-Identifier: MIT
// Report writers (CSV/TSV + meta.json) and the CLI command implementations.
// Commands return process exit codes: 0 success, 1 I/O or internal failure,
// 2 usage error (invalid argument values).
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qtangle/hhl.hpp"

namespace qtangle {

struct SweepConfig {
  int grid_points = 101;          // >= 2
  double b0_sq_min = 0.0;
  double b0_sq_max = 1.0;
  double c = HhlProblem::default_c();  // in (0, 1]
  std::string output_dir = ".";
  std::string format = "csv";  // "csv" or "tsv"
};

struct VerifyOptions {
  int grid_points = 101;
  double c = HhlProblem::default_c();
  // When set, the closed forms are evaluated with this c while the simulation
  // keeps options.c — a deliberate-mismatch sanity hook used by the tests.
  std::optional<double> closed_form_c;
};

// Formats one numeric cell: 17 significant digits; values in [-1e-10, 0) are
// clamped to 0. Throws std::runtime_error for non-finite values.
std::string format_cell(double v);

// Per-stage tangle table for a three-qubit search run; writes
// grover_table.(csv|tsv) and meta.json, and prints the table to `out`.
// iterations: -1 = optimal for n.
int cmd_grover_table(int n, int target, int iterations, const SweepConfig& cfg,
                     std::ostream& out);

// Stage tangles over a grid of b0^2 values; writes fig4a.(csv|tsv)
// (three-tangles), fig4b.(csv|tsv) (pi-tangles), and meta.json.
int cmd_hhl_sweep(const SweepConfig& cfg, std::ostream& out);

// Characteristic curve, its theta-minimum f, and the convex hull over a
// (p, theta) grid for one x1; writes rank2_curves.(csv|tsv) and meta.json.
int cmd_rank2_curve(double x1, int theta_steps, int p_steps, const SweepConfig& cfg,
                    std::ostream& out);

// Cross-validation over the b0^2 grid plus the library invariant suite.
// Prints one line per check; returns 0 iff every check passes.
int cmd_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace qtangle
