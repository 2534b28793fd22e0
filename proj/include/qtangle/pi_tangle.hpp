// SPDX-License-Identifier: MIT
// Negativity, pi-tangle, and the combined three-qubit entanglement record.
#pragma once

#include <optional>

#include "qtangle/density.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

// ||rho^{T_part}||_1 - 1. Non-negative up to numerical noise; values in
// [-1e-10, 0) are clamped to 0. Throws for an out-of-range subsystem index.
double negativity(const DensityMatrix& rho, int part);

// Global pi-tangle of a three-qubit state:
//   pi_K = N_{K(rest)}^2 - sum_{J != K} N_KJ^2   (pairwise N on reduced states)
//   pi = (pi_A + pi_B + pi_C) / 3, clamped at 0 from below on report.
double pi_tangle(const DensityMatrix& rho3);
double pi_tangle(const StateVector& psi3);

struct EntanglementRecord {
  // Empty when the input is mixed and matches no pattern with a known value.
  std::optional<double> three_tangle;
  double pi_tangle = 0.0;
  double concurrence_ab = 0.0;
  double concurrence_ac = 0.0;
  double concurrence_bc = 0.0;
  double negativity_a = 0.0;
  double negativity_b = 0.0;
  double negativity_c = 0.0;
  // Mixing weight and branch coefficients, filled when a two-branch rank-2
  // pattern (see Rank2Family) was detected in a mixed input.
  std::optional<double> p;
  std::optional<double> x1;
  std::optional<double> x2;
};

// Full record for a pure three-qubit state.
EntanglementRecord analyze_three_qubit(const StateVector& psi);

// Full record for a three-qubit density matrix. The three-tangle is filled
// for (numerically) pure input, for rank-2 input matching the Rank2Family
// pattern, and for rank <= 2 input whose eigenvectors share a common
// two-qubit product factor (tangle 0); otherwise it is left empty.
EntanglementRecord analyze_three_qubit(const DensityMatrix& rho);

}  // namespace qtangle
