// SPDX-License-Identifier: MIT
// Three-qubit residual entanglement (three-tangle) of pure states.
#pragma once

#include <vector>

#include "qtangle/state.hpp"

namespace qtangle {

// Degree-4 homogeneous form 4|d1 - 2 d2 + 4 d3| of eight amplitudes
// (the Cayley hyperdeterminant, not normalized). Exposed for routines that
// evaluate unnormalized superpositions.
double three_tangle_raw(const std::vector<cd>& a);

// Three-tangle of a normalized three-qubit pure state; value in [0, 1].
// Throws std::invalid_argument for a register that is not three qubits.
double three_tangle(const StateVector& psi);

}  // namespace qtangle
