// SPDX-License-Identifier: MIT
#include "qtangle/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtangle/concurrence.hpp"

namespace qtangle {

int grover_optimal_iterations(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("register size must lie in [1, 6]");
  const double root_n = std::sqrt(static_cast<double>(1 << n));
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * root_n));
}

Circuit grover_circuit(int n, int target, int iterations) {
  if (n < 1 || n > 6) throw std::invalid_argument("register size must lie in [1, 6]");
  if (target < 0 || target >= (1 << n)) throw std::invalid_argument("target out of range");
  if (iterations < 0) throw std::invalid_argument("iteration count must be non-negative");
  Circuit c(n);
  std::vector<int> all(n);
  for (int q = 0; q < n; ++q) {
    all[q] = q;
    c.add(gates::h(), {q});
  }
  c.add_marker("s");
  for (int k = 0; k < iterations; ++k) {
    c.add(gates::phase_flip_oracle(n, target), all);
    c.add_marker("psi" + std::to_string(2 * k + 1));
    c.add(gates::diffuser(n), all);
    c.add_marker("psi" + std::to_string(2 * k + 2));
  }
  return c;
}

GroverRun grover_run(int n, int target, int iterations) {
  if (iterations == -1) iterations = grover_optimal_iterations(n);
  const Circuit c = grover_circuit(n, target, iterations);
  const StageTrace trace = run(c, StateVector(n));

  GroverRun out;
  out.n = n;
  out.target = target;
  out.iterations = iterations;
  for (const Stage& stage : trace.stages) {
    if (stage.label == "initial" || stage.label == "final") continue;
    GroverStage gs{stage.label, stage.state, std::nullopt, std::nullopt};
    if (n == 3) gs.record = analyze_three_qubit(stage.state);
    if (n == 2) gs.concurrence = concurrence_pure(stage.state);
    out.stages.push_back(std::move(gs));
  }
  out.success_probability = trace.final_state().probability(target);
  return out;
}

std::vector<GroverTableRow> grover_table(int n, int target, int iterations) {
  if (n != 3) throw std::invalid_argument("stage tangle table is defined for three qubits");
  const GroverRun run = grover_run(n, target, iterations);
  std::vector<GroverTableRow> rows;
  if (run.iterations == 0) {
    rows.push_back({"s", 0.0, 0.0, 0.0, 0.0});
    return rows;
  }
  for (const GroverStage& gs : run.stages) {
    if (gs.label == "s") continue;
    const EntanglementRecord& r = *gs.record;
    rows.push_back({gs.label, r.three_tangle.value_or(0.0), r.concurrence_ab, r.concurrence_ac,
                    r.concurrence_bc});
  }
  return rows;
}

}  // namespace qtangle
