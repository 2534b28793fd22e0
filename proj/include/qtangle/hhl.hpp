// SPDX-License-Identifier: MIT
// Four-qubit linear-solver pipeline (phase estimation, conditioned rotation,
// uncomputation) with closed-form stage states and cross-validation.
#pragma once

#include <string>
#include <vector>

#include "qtangle/circuit.hpp"
#include "qtangle/density.hpp"
#include "qtangle/rank2.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

// Register layout (big-endian): qubit 0, 1 = clock, qubit 2 = b-register,
// qubit 3 = rotation ancilla.
struct HhlProblem {
  double b0 = 1.0;
  double b1 = 0.0;
  double c = default_c();  // rotation constant, 0 < c <= min eigenvalue of A
  int clock_bits = 2;
  double t = evolution_time();

  // Validates b0^2 + b1^2 = 1 within 1e-12 and c in (0, min eigenvalue].
  HhlProblem(double b0, double b1, double c = default_c());

  // Fixed system matrix [[3/2, 1/2], [1/2, 3/2]] (eigenvalues 1 and 2).
  static const ComplexMatrix& a_matrix();
  static double evolution_time();  // 2*pi/4
  static double default_c();       // (sin(pi/4) + 2 sin(pi/8)) / 2
};

struct HhlStageStates {
  StateVector psi1;      // after phase estimation          (4 qubits)
  StateVector psi2;      // after the conditioned rotation  (4 qubits)
  StateVector psi3;      // after uncomputation             (4 qubits)
  StateVector psi1_bar;  // clock+b factor of psi1          (3 qubits)
  DensityMatrix rho2_bar;  // ancilla traced out of psi2    (3 qubits)
  DensityMatrix rho3_bar;  // ancilla traced out of psi3    (3 qubits)
  StateVector solution;  // normalized ancilla-1 branch of the b register,
                         // sign fixed by a positive overlap with A^{-1} b
};

// Phase estimation -> rotation conditioned on each nonzero clock value ->
// inverse phase estimation, with a marker after each block.
Circuit hhl_circuit(const HhlProblem& p);
HhlStageStates hhl_run(const HhlProblem& p);

// Generic phase estimation: Hadamards on the clock register, controlled
// powers of exp(+i a t), inverse Fourier transform on the clock. The input
// state occupies the register below the clock.
StateVector qpe(const ComplexMatrix& a, double t, int clock_bits, const StateVector& input);

struct ClosedFormParams {
  double beta1, beta2;      // b in the eigenbasis of A
  double gamma;             // ancilla-branch overlap
  double s;                 // sqrt(1 - 4 b1^2 b2^2 (1 - gamma^2))
  double p;                 // (1 + s)/2, top eigenvalue of rho2_bar
  double a1, a2;            // unnormalized top-eigenvector components
  double x1, x2;            // normalized eigenvector components
  double a_coef, b_coef;    // ancilla-0 branch of the final state
  double c1, c2;            // ancilla-1 branch (c times the solution)
  double q;                 // top eigenvalue of rho3_bar
  double f1, f2;            // unnormalized top-eigenvector of rho3_bar
  double y1, y2;            // normalized eigenvector components
};

ClosedFormParams closed_form_params(const HhlProblem& p);

// Closed-form stage states (psi1_bar is the three-qubit clock+b factor).
StateVector closed_form_psi1_bar(const HhlProblem& p);
StateVector closed_form_psi1(const HhlProblem& p);  // 4 qubits, ancilla |0>
StateVector closed_form_psi2(const HhlProblem& p);
StateVector closed_form_psi3(const HhlProblem& p);

struct ClosedFormTangles {
  double tau3_psi1, pi3_psi1;  // stage 1: (b0^2 - b1^2)^2 for both
  double tau3_rho2, pi3_rho2;  // stage 2: hull formula / rank-2 pi-tangle
  double tau3_rho3, pi3_rho3;  // stage 3: zero
};

ClosedFormTangles closed_form_tangles(const HhlProblem& p);

struct CheckResult {
  std::string name;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Simulation vs. closed forms for one problem instance:
//  (a) three-tangle of simulated psi1_bar vs (b0^2 - b1^2)^2
//  (b) spectral decomposition of simulated rho2_bar vs (p, x1, x2) and the
//      two-branch sign pattern
//  (c) rank2_three_tangle at the simulated (p, x1) vs the closed-form value
//  (d) numerical pi-tangle of simulated rho2_bar vs the closed form
//  (e) spectral decomposition of simulated rho3_bar vs (q, y1, y2) and the
//      common |00> clock factor
// Each check reports its max discrepancy against tolerance 1e-8. A failed
// check is a report entry, not an error. closed_form_problem lets callers
// inject a deliberately different parameterization into the closed forms.
std::vector<CheckResult> cross_validate(const HhlProblem& p);
std::vector<CheckResult> cross_validate(const HhlProblem& p,
                                        const HhlProblem& closed_form_problem);

}  // namespace qtangle
