// SPDX-License-Identifier: MIT
// Grover search on small registers with per-stage entanglement records.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtangle/circuit.hpp"
#include "qtangle/pi_tangle.hpp"

namespace qtangle {

// floor(pi/4 * sqrt(2^n))
int grover_optimal_iterations(int n);

// Uniform superposition, then `iterations` rounds of oracle + diffuser, with
// a marker after every block.
Circuit grover_circuit(int n, int target, int iterations);

struct GroverStage {
  std::string label;  // "s", then "psi1", "psi2", ... (post-oracle/diffuser)
  StateVector state;
  std::optional<EntanglementRecord> record;  // filled when n == 3
  std::optional<double> concurrence;         // filled when n == 2
};

struct GroverRun {
  int n = 0;
  int target = 0;
  int iterations = 0;
  std::vector<GroverStage> stages;
  double success_probability = 0.0;  // |<target|final>|^2
};

// Runs Grover search. Preconditions: 1 <= n <= 6, 0 <= target < 2^n,
// iterations >= 0 (or -1 for the optimal count). Throws std::invalid_argument
// otherwise.
GroverRun grover_run(int n, int target, int iterations = -1);

struct GroverTableRow {
  std::string state;  // "psi1", ... (or "s" for a zero-iteration run)
  double tau3 = 0.0;
  double c_ab = 0.0;
  double c_ac = 0.0;
  double c_bc = 0.0;
};

// Stage-by-stage three-tangle and pairwise concurrences for a three-qubit
// run (one row per oracle/diffuser snapshot).
std::vector<GroverTableRow> grover_table(int n = 3, int target = 7, int iterations = -1);

}  // namespace qtangle
