// SPDX-License-Identifier: MIT
// Two-qubit concurrence: pure-state shortcut and the general mixed-state form.
#pragma once

#include "qtangle/density.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

// |<psi| sigma_y (x) sigma_y |psi*>| for a normalized two-qubit pure state.
double concurrence_pure(const StateVector& psi);

// Mixed-state concurrence of a two-qubit density matrix:
// max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
// eigenvalues of rho * rho_tilde,
// rho_tilde = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
// Computed as singular values of the symmetric spin-flip overlap matrix on
// the spectral support of rho, which stays accurate for rank-deficient rho.
// Throws std::invalid_argument unless rho is a 2x2-subsystem density matrix.
double concurrence(const DensityMatrix& rho);

}  // namespace qtangle
