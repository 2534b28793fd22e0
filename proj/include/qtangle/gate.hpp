// SPDX-License-Identifier: MIT
// Unitary gates and gate constructors.
#pragma once

#include <string>

#include "qtangle/matrix.hpp"

namespace qtangle {

struct Gate {
  std::string name;
  ComplexMatrix matrix;  // 2^arity x 2^arity unitary

  int arity() const;
  Gate adjoint() const;
};

namespace gates {

Gate x();
Gate y();
Gate z();
Gate h();
Gate ry(double theta);                 // exp(-i theta Y / 2)
Gate phase(double phi);                // diag(1, e^{i phi})
Gate controlled_phase(double phi);     // diag(1, 1, 1, e^{i phi})
Gate swap();

// I - 2|target><target| on n qubits: flips the sign of one basis state.
Gate phase_flip_oracle(int n, int target);
// 2|s><s| - I on n qubits, |s> the uniform superposition.
Gate diffuser(int n);

// u^power (power >= 0; power 0 gives the identity).
Gate gate_power(const Gate& u, int power);

// Applies u on the trailing qubits when the leading num_controls qubits of
// the gate's local register encode `value`; identity otherwise.
Gate controlled_on_value(const Gate& u, int num_controls, int value);

}  // namespace gates

// exp(+i a t) for Hermitian a, via spectral decomposition.
// Throws std::invalid_argument for non-Hermitian input.
Gate hamiltonian_evolution(const ComplexMatrix& a, double t);

}  // namespace qtangle
